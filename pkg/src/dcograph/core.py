"""Immutable bit-matrix digraphs, undirected graphs, isomorphism, and edge-list IO."""
from __future__ import annotations

from itertools import combinations, permutations, product
from typing import Iterable, Iterator

MAX_VERTICES = 64
MAX_CANONICAL_VERTICES = 8

# (n, mask) -> (canonical bytes, vertex order achieving it)
_CANON_CACHE: dict[tuple[int, int], tuple[bytes, tuple[int, ...]]] = {}


class EdgeListError(ValueError):
    """Raised when edge-list text is malformed."""


def _full_offdiag(n: int) -> int:
    mask = (1 << n * n) - 1
    for v in range(n):
        mask ^= 1 << v * n + v
    return mask


class Digraph:
    """A digraph on vertices 0..n-1 with arcs stored as one bit per ordered pair.

    Bit u*n+v is set iff the arc (u, v) is present. Instances are immutable;
    all operations return new values.
    """

    __slots__ = ("n", "_mask")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]] = ()) -> None:
        if not 1 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
        self.n = n
        mask = 0
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop ({u}, {u}) not allowed")
            mask |= 1 << u * n + v
        object.__setattr__(self, "_mask", mask)

    def __setattr__(self, name: str, value: object) -> None:
        if name == "n" and not hasattr(self, "_mask"):
            object.__setattr__(self, name, value)
            return
        raise AttributeError("Digraph is immutable")

    @classmethod
    def from_mask(cls, n: int, mask: int) -> Digraph:
        """Build from a raw bit-matrix; diagonal bits must be clear."""
        if not 1 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
        if mask < 0 or mask >> n * n:
            raise ValueError("mask has bits outside the n*n matrix")
        g = cls.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "_mask", mask)
        if mask & ~_full_offdiag(n):
            raise ValueError("mask has diagonal (loop) bits set")
        return g

    @classmethod
    def edgeless(cls, n: int) -> Digraph:
        return cls(n)

    @property
    def mask(self) -> int:
        return self._mask

    @property
    def arcs(self) -> tuple[tuple[int, int], ...]:
        n = self.n
        return tuple(
            (u, v)
            for u in range(n)
            for v in range(n)
            if u != v and self._mask >> u * n + v & 1
        )

    @property
    def arc_count(self) -> int:
        return self._mask.bit_count()

    def has_arc(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError(f"vertex pair ({u}, {v}) out of range")
        return bool(self._mask >> u * self.n + v & 1)

    def out_row(self, u: int) -> int:
        """Out-neighbourhood of u as an n-bit mask."""
        return self._mask >> u * self.n & (1 << self.n) - 1

    def in_row(self, v: int) -> int:
        """In-neighbourhood of v as an n-bit mask."""
        row = 0
        for u in range(self.n):
            row |= (self._mask >> u * self.n + v & 1) << u
        return row

    def out_degree(self, u: int) -> int:
        return self.out_row(u).bit_count()

    def in_degree(self, v: int) -> int:
        return self.in_row(v).bit_count()

    # -- unary transforms ---------------------------------------------------

    def complement(self) -> Digraph:
        return Digraph.from_mask(self.n, self._mask ^ _full_offdiag(self.n))

    def converse(self) -> Digraph:
        n = self.n
        mask = 0
        for u in range(n):
            row = self.out_row(u)
            while row:
                v = (row & -row).bit_length() - 1
                row &= row - 1
                mask |= 1 << v * n + u
        return Digraph.from_mask(n, mask)

    def sym_part(self) -> Digraph:
        """Spanning subdigraph keeping exactly the arcs whose reverse is also present."""
        return Digraph.from_mask(self.n, self._mask & self.converse()._mask)

    def asym_part(self) -> Digraph:
        """Spanning subdigraph keeping exactly the arcs whose reverse is absent."""
        return Digraph.from_mask(self.n, self._mask & ~self.converse()._mask)

    def underlying(self) -> UndirectedGraph:
        """Forget orientations: edge {u,v} iff at least one of the two arcs exists."""
        both = self._mask | self.converse()._mask
        n = self.n
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if both >> u * n + v & 1]
        return UndirectedGraph(n, edges)

    def induced(self, vertices: Iterable[int]) -> Digraph:
        """Induced subdigraph; kept vertices are relabeled 0.. preserving order."""
        sub = sorted(set(vertices))
        if not sub:
            raise ValueError("induced subdigraph needs at least one vertex")
        if sub[0] < 0 or sub[-1] >= self.n:
            raise ValueError(f"vertices {sub} out of range for n={self.n}")
        k = len(sub)
        mask = 0
        for i, u in enumerate(sub):
            for j, v in enumerate(sub):
                if u != v and self._mask >> u * self.n + v & 1:
                    mask |= 1 << i * k + j
        return Digraph.from_mask(k, mask)

    def delete_vertex(self, v: int) -> Digraph:
        if self.n == 1:
            raise ValueError("cannot delete the last vertex")
        return self.induced(u for u in range(self.n) if u != v)

    def relabel(self, perm: Iterable[int]) -> Digraph:
        """Apply a bijection old-label -> new-label."""
        p = tuple(perm)
        if sorted(p) != list(range(self.n)):
            raise ValueError("perm is not a bijection on the vertex set")
        n = self.n
        mask = 0
        for u, v in self.arcs:
            mask |= 1 << p[u] * n + p[v]
        return Digraph.from_mask(n, mask)

    # -- predicates ---------------------------------------------------------

    def is_edgeless(self) -> bool:
        return self._mask == 0

    def is_bidirectional_complete(self) -> bool:
        return self._mask == _full_offdiag(self.n)

    def is_oriented(self) -> bool:
        return self._mask & self.converse()._mask == 0

    def is_tournament(self) -> bool:
        conv = self.converse()._mask
        return self._mask & conv == 0 and self._mask | conv == _full_offdiag(self.n)

    def is_transitive(self) -> bool:
        """Whenever (u,v) and (v,w) are arcs with u != w, (u,w) is an arc too."""
        rows = [self.out_row(u) for u in range(self.n)]
        for u in range(self.n):
            allowed = rows[u] | 1 << u
            targets = rows[u]
            while targets:
                v = (targets & -targets).bit_length() - 1
                targets &= targets - 1
                if rows[v] & ~allowed:
                    return False
        return True

    def is_acyclic(self) -> bool:
        """No directed cycle; a bidirectional pair counts as a 2-cycle."""
        rows = [self.out_row(u) for u in range(self.n)]
        indeg = [self.in_degree(v) for v in range(self.n)]
        stack = [v for v in range(self.n) if indeg[v] == 0]
        seen = 0
        while stack:
            u = stack.pop()
            seen += 1
            row = rows[u]
            while row:
                v = (row & -row).bit_length() - 1
                row &= row - 1
                indeg[v] -= 1
                if indeg[v] == 0:
                    stack.append(v)
        return seen == self.n

    # -- connectivity -------------------------------------------------------

    def _neighbor_rows(self) -> list[int]:
        conv = self.converse()._mask
        both = self._mask | conv
        n = self.n
        return [both >> u * n & (1 << n) - 1 for u in range(n)]

    def underlying_components(self) -> list[tuple[int, ...]]:
        """Connected components of the underlying graph, each sorted, in order of minimum vertex."""
        return _components_from_rows(self.n, self._neighbor_rows())

    def co_components(self) -> list[tuple[int, ...]]:
        """Components of the complement's underlying graph."""
        return self.complement().underlying_components()

    # -- isomorphism --------------------------------------------------------

    def _canonize(self) -> tuple[bytes, tuple[int, ...]]:
        key = (self.n, self._mask)
        hit = _CANON_CACHE.get(key)
        if hit is not None:
            return hit
        n = self.n
        if n > MAX_CANONICAL_VERTICES:
            raise ValueError(f"canonical_form supports n <= {MAX_CANONICAL_VERTICES}")
        sym = self._mask & self.converse()._mask
        invariant = [
            (self.out_degree(v), self.in_degree(v), (sym >> v * n & (1 << n) - 1).bit_count())
            for v in range(n)
        ]
        # Isomorphisms preserve the degree triple, so only orderings that keep
        # the sorted triple sequence can achieve the minimum.
        groups: dict[tuple[int, int, int], list[int]] = {}
        for v in range(n):
            groups.setdefault(invariant[v], []).append(v)
        group_lists = [groups[k] for k in sorted(groups)]
        arcs = self.arcs
        best_mask = -1
        best_order: tuple[int, ...] = ()
        for parts in product(*(permutations(g) for g in group_lists)):
            order: tuple[int, ...] = sum(parts, ())
            pos = [0] * n
            for i, v in enumerate(order):
                pos[v] = i
            mask = 0
            for u, v in arcs:
                mask |= 1 << pos[u] * n + pos[v]
            if best_mask < 0 or mask < best_mask:
                best_mask = mask
                best_order = order
        out = (bytes([n]) + best_mask.to_bytes((n * n + 7) // 8, "big"), best_order)
        _CANON_CACHE[key] = out
        return out

    def canonical_form(self) -> bytes:
        """Deterministic bytes equal for two digraphs iff they are isomorphic (n <= 8)."""
        return self._canonize()[0]

    def isomorphism_to(self, other: Digraph) -> tuple[int, ...] | None:
        """A vertex bijection carrying self onto other, or None."""
        if self.n != other.n:
            return None
        ca, oa = self._canonize()
        cb, ob = other._canonize()
        if ca != cb:
            return None
        mapping = [0] * self.n
        for i in range(self.n):
            mapping[oa[i]] = ob[i]
        assert self.relabel(mapping)._mask == other._mask
        return tuple(mapping)

    def isomorphic_to(self, other: Digraph) -> bool:
        return self.n == other.n and self.canonical_form() == other.canonical_form()

    # -- dunder -------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self._mask == other._mask

    def __hash__(self) -> int:
        return hash((self.n, self._mask))

    def __repr__(self) -> str:
        return f"Digraph({self.n}, {list(self.arcs)!r})"


def _components_from_rows(n: int, rows: list[int]) -> list[tuple[int, ...]]:
    seen = 0
    comps: list[tuple[int, ...]] = []
    for start in range(n):
        if seen >> start & 1:
            continue
        frontier = 1 << start
        comp = 0
        while frontier:
            comp |= frontier
            nxt = 0
            bits = frontier
            while bits:
                v = (bits & -bits).bit_length() - 1
                bits &= bits - 1
                nxt |= rows[v]
            frontier = nxt & ~comp
        seen |= comp
        comps.append(tuple(v for v in range(n) if comp >> v & 1))
    return comps


class UndirectedGraph:
    """An undirected simple graph on vertices 0..n-1."""

    __slots__ = ("n", "_edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if not 1 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
        object.__setattr__(self, "n", n)
        es = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-edge ({u}, {u}) not allowed")
            es.add((min(u, v), max(u, v)))
        object.__setattr__(self, "_edges", frozenset(es))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("UndirectedGraph is immutable")

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self._edges))

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._edges

    def degree(self, v: int) -> int:
        return sum(1 for e in self._edges if v in e)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(sorted(a + b - v for a, b in self._edges if v in (a, b)))

    def complement(self) -> UndirectedGraph:
        missing = [
            (u, v)
            for u, v in combinations(range(self.n), 2)
            if (u, v) not in self._edges
        ]
        return UndirectedGraph(self.n, missing)

    def induced(self, vertices: Iterable[int]) -> UndirectedGraph:
        sub = sorted(set(vertices))
        if not sub:
            raise ValueError("induced subgraph needs at least one vertex")
        if sub[0] < 0 or sub[-1] >= self.n:
            raise ValueError(f"vertices {sub} out of range for n={self.n}")
        idx = {v: i for i, v in enumerate(sub)}
        keep = [(idx[u], idx[v]) for u, v in self._edges if u in idx and v in idx]
        return UndirectedGraph(len(sub), keep)

    def to_digraph(self) -> Digraph:
        """The symmetric digraph with both arcs per edge."""
        return Digraph(self.n, [a for u, v in self._edges for a in ((u, v), (v, u))])

    def components(self) -> list[tuple[int, ...]]:
        rows = [0] * self.n
        for u, v in self._edges:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return _components_from_rows(self.n, rows)

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def is_edgeless(self) -> bool:
        return not self._edges

    def is_complete(self) -> bool:
        return len(self._edges) == self.n * (self.n - 1) // 2

    def canonical_form(self) -> bytes:
        return self.to_digraph().canonical_form()

    def isomorphic_to(self, other: UndirectedGraph) -> bool:
        return self.n == other.n and self.canonical_form() == other.canonical_form()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UndirectedGraph):
            return NotImplemented
        return self.n == other.n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self.n, self._edges))

    def __repr__(self) -> str:
        return f"UndirectedGraph({self.n}, {list(self.edges)!r})"


# -- edge-list text format ---------------------------------------------------


def parse_edge_list(text: str) -> Digraph:
    """Parse the plain-text digraph format.

    Line 1 is `n <count>`; every later non-empty line is `u v` for one arc.
    `#` starts a comment. Duplicate arcs and loops are rejected.
    """
    n: int | None = None
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 2 or fields[0] != "n":
                raise EdgeListError(f"line {lineno}: expected header 'n <count>', got {raw!r}")
            try:
                n = int(fields[1])
            except ValueError:
                raise EdgeListError(f"line {lineno}: vertex count {fields[1]!r} is not an integer") from None
            if not 1 <= n <= MAX_VERTICES:
                raise EdgeListError(f"line {lineno}: vertex count must be in 1..{MAX_VERTICES}, got {n}")
            continue
        if len(fields) != 2:
            raise EdgeListError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise EdgeListError(f"line {lineno}: arc endpoints must be integers, got {raw!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListError(f"line {lineno}: arc ({u}, {v}) out of range for n={n}")
        if u == v:
            raise EdgeListError(f"line {lineno}: loop ({u}, {u}) not allowed")
        if (u, v) in seen:
            raise EdgeListError(f"line {lineno}: duplicate arc ({u}, {v})")
        seen.add((u, v))
    if n is None:
        raise EdgeListError("empty input: missing 'n <count>' header")
    return Digraph(n, seen)


def format_edge_list(g: Digraph) -> str:
    """Serialize as header plus lexicographically sorted arc lines."""
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.arcs)
    return "\n".join(lines) + "\n"


def to_dot(g: Digraph, name: str = "G") -> str:
    """GraphViz text with one node per vertex and one `->` line per arc."""
    lines = [f"digraph {name} {{"]
    lines.extend(f"  {v};" for v in range(g.n))
    lines.extend(f"  {u} -> {v};" for u, v in g.arcs)
    lines.append("}")
    return "\n".join(lines) + "\n"


def all_vertex_subsets(n: int, size: int) -> Iterator[tuple[int, ...]]:
    """All size-element subsets of 0..n-1 in lexicographic order."""
    return combinations(range(n), size)
