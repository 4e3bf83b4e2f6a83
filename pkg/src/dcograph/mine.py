"""Exhaustive small-digraph enumeration, obstruction mining, and verification suites."""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations
from typing import Callable, Iterable, Sequence

import numpy as np

from dcograph.core import Digraph
from dcograph.construct import transitive_tournament
from dcograph.decompose import di_co_tree, creation_sequence
from dcograph.patterns import (
    CATALOG,
    PATTERNS,
    has_anticircuit,
    has_two_switch,
    induced_canon_set,
)
from dcograph.recognize import (
    ClassId,
    GRAMMAR_CLASSES,
    MICRO_CLASSES,
    PATTERN_ONLY_CLASSES,
    member_by_patterns_canon,
    member_constructive,
    oracle_members,
)
from dcograph.uclasses import UClassId, enumerate_undirected, member_u


class BudgetExceeded(Exception):
    """Raised when an n=6 mining pass overruns its time budget; report is partial."""


# -- vectorized bit-mask machinery --------------------------------------------
#
# A labeled n-vertex digraph is one uint64 with bit u*n+v per arc, matching
# core.Digraph. Relabelings and vertex deletions are bit rearrangements, done
# in bulk through chunked lookup tables (12 source bits per table).

_CHUNK_BITS = 12


def _remap_tables(bit_map: dict[int, int], src_bits: int) -> list[tuple[int, int, np.ndarray]]:
    tables = []
    for lo in range(0, src_bits, _CHUNK_BITS):
        width = min(_CHUNK_BITS, src_bits - lo)
        tab = np.zeros(1 << width, dtype=np.uint64)
        for i in range(width):
            target = bit_map.get(lo + i)
            contrib = np.uint64(0 if target is None else 1 << target)
            tab[1 << i : 2 << i] = tab[: 1 << i] | contrib
        tables.append((lo, width, tab))
    return tables


def _apply_remap(tables: list[tuple[int, int, np.ndarray]], masks: np.ndarray) -> np.ndarray:
    out = np.zeros_like(masks)
    for lo, width, tab in tables:
        idx = (masks >> np.uint64(lo)) & np.uint64((1 << width) - 1)
        out |= tab[idx.astype(np.int64)]
    return out


_PERM_TABLES: dict[int, list[list[tuple[int, int, np.ndarray]]]] = {}


def _perm_tables(n: int) -> list[list[tuple[int, int, np.ndarray]]]:
    if n not in _PERM_TABLES:
        all_tables = []
        for perm in permutations(range(n)):
            bit_map = {
                u * n + v: perm[u] * n + perm[v]
                for u in range(n)
                for v in range(n)
                if u != v
            }
            all_tables.append(_remap_tables(bit_map, n * n))
        _PERM_TABLES[n] = all_tables
    return _PERM_TABLES[n]


def canonical_masks(n: int, masks: np.ndarray) -> np.ndarray:
    """Per-element canonical (minimum over all relabelings) masks; n <= 6."""
    if n > 6:
        raise ValueError("bulk canonicalization supports n <= 6")
    best: np.ndarray | None = None
    for tables in _perm_tables(n):
        cand = _apply_remap(tables, masks)
        best = cand if best is None else np.minimum(best, cand)
    assert best is not None
    return best


def _labeled_masks(n: int, lo: int, hi: int) -> np.ndarray:
    """Masks of labeled digraphs for pair-state ids lo..hi-1 (4 states per pair)."""
    ids = np.arange(lo, hi, dtype=np.uint64)
    masks = np.zeros_like(ids)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for p, (u, v) in enumerate(pairs):
        state = (ids >> np.uint64(2 * p)) & np.uint64(3)
        masks |= (state & np.uint64(1)) << np.uint64(u * n + v)
        masks |= (state >> np.uint64(1)) << np.uint64(v * n + u)
    return masks


def _canonical_chunk(args: tuple[int, int, int]) -> np.ndarray:
    n, lo, hi = args
    return np.unique(canonical_masks(n, _labeled_masks(n, lo, hi)))


_ENUM_CACHE: dict[int, list[Digraph]] = {}


def enumerate_digraphs(n: int, jobs: int = 1) -> list[Digraph]:
    """All n-vertex digraphs up to isomorphism (n <= 6), canonically ordered.

    n <= 5 canonicalizes the full labeled space; n = 6 extends every 5-vertex
    representative by one vertex in all 4^5 ways (every 6-vertex digraph is
    such an extension of its own last-vertex deletion, up to isomorphism).
    """
    if not 1 <= n <= 6:
        raise ValueError(f"enumeration supports 1..6 vertices, got {n}")
    if n in _ENUM_CACHE:
        return list(_ENUM_CACHE[n])
    if n <= 5:
        total = 4 ** (n * (n - 1) // 2)
        chunk = max(1 << 16, total // max(jobs, 1) + 1)
        tasks = [(n, lo, min(lo + chunk, total)) for lo in range(0, total, chunk)]
        if jobs > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                parts = list(pool.map(_canonical_chunk, tasks))
        else:
            parts = [_canonical_chunk(t) for t in tasks]
        canon = np.unique(np.concatenate(parts))
        reps = [Digraph.from_mask(n, int(m)) for m in canon]
    else:
        base = np.array([g.mask for g in enumerate_digraphs(5, jobs=jobs)], dtype=np.uint64)
        embedded = _apply_remap(_embed_tables(5, 6), base)
        ext = _extension_masks(6)
        candidates = (embedded[:, None] | ext[None, :]).ravel()
        canon = np.unique(canonical_masks(6, candidates))
        reps = [Digraph.from_mask(6, int(m)) for m in canon]
    _ENUM_CACHE[n] = reps
    return list(reps)


def _embed_tables(small: int, big: int) -> list[tuple[int, int, np.ndarray]]:
    bit_map = {
        u * small + v: u * big + v
        for u in range(small)
        for v in range(small)
        if u != v
    }
    return _remap_tables(bit_map, small * small)


def _extension_masks(n: int) -> np.ndarray:
    """All 4^(n-1) attachment patterns of new vertex n-1 to vertices 0..n-2."""
    w = n - 1
    ids = np.arange(4 ** w, dtype=np.uint64)
    masks = np.zeros_like(ids)
    for j in range(w):
        state = (ids >> np.uint64(2 * j)) & np.uint64(3)
        masks |= (state & np.uint64(1)) << np.uint64(j * n + w)
        masks |= (state >> np.uint64(1)) << np.uint64(w * n + j)
    return masks


def _deletion_tables(n: int) -> list[list[tuple[int, int, np.ndarray]]]:
    """For each vertex d: bit remap deleting d from an n-vertex mask."""
    out = []
    for d in range(n):
        bit_map = {}
        for u in range(n):
            for v in range(n):
                if u == v or u == d or v == d:
                    continue
                uu = u - (u > d)
                vv = v - (v > d)
                bit_map[u * n + v] = uu * (n - 1) + vv
        out.append(_remap_tables(bit_map, n * n))
    return out


# -- bulk membership ----------------------------------------------------------


@dataclass
class MemberTable:
    """Representatives per size and member canonical-form sets per class."""

    n_max: int
    reps: list[list[Digraph]]
    members: dict[ClassId, list[set[bytes]]]

    def is_member(self, x: ClassId, g: Digraph) -> bool:
        return g.canonical_form() in self.members[x][g.n - 1]


def _class_membership(g: Digraph, x: ClassId) -> bool:
    if x in PATTERN_ONLY_CLASSES:
        if x is ClassId.TD:
            return not has_two_switch(g) and not _contains_canon(g, "D5")
        return not has_anticircuit(g) and not _contains_canon(g, "D1") and not _contains_canon(g, "K2bidir")
    return member_constructive(g, x)


def _contains_canon(g: Digraph, pattern_name: str) -> bool:
    p = PATTERNS[pattern_name]
    return p.n <= g.n and p.canonical_form() in induced_canon_set(g)


def member_table(n_max: int = 5, classes: Sequence[ClassId] | None = None, jobs: int = 1) -> MemberTable:
    """Membership of every representative with <= n_max vertices, per class."""
    if not 1 <= n_max <= 5:
        raise ValueError("member_table supports n_max in 1..5")
    chosen = list(classes) if classes is not None else list(ClassId)
    reps = [enumerate_digraphs(n, jobs=jobs) for n in range(1, n_max + 1)]
    members: dict[ClassId, list[set[bytes]]] = {x: [set() for _ in range(n_max)] for x in chosen}
    for level in reps:
        for g in level:
            canon = g.canonical_form()
            for x in chosen:
                if _class_membership(g, x):
                    members[x][g.n - 1].add(canon)
    return MemberTable(n_max=n_max, reps=reps, members=members)


# -- reports ------------------------------------------------------------------


@dataclass
class CheckRow:
    subject: str
    verdict: str  # "ok" | "fail" | "info"
    canonical: str
    details: str

    def line(self) -> str:
        return f"{self.subject}\t{self.verdict}\t{self.canonical}\t{self.details}"


@dataclass
class VerifyReport:
    suite: str
    rows: list[CheckRow] = field(default_factory=list)

    def ok(self) -> bool:
        return all(r.verdict != "fail" for r in self.rows)

    def failures(self) -> list[CheckRow]:
        return [r for r in self.rows if r.verdict == "fail"]

    def lines(self) -> list[str]:
        return [r.line() for r in self.rows]

    def render(self) -> str:
        head = f"suite {self.suite}: {len(self.rows)} checks, {len(self.failures())} failures"
        return "\n".join([head] + self.lines())


@dataclass
class ObstructionReport:
    class_id: ClassId
    n_max: int
    found: list[Digraph]
    confirmed: list[str]
    missing: list[str]
    extra: list[Digraph]
    out_of_reach: list[str]
    partial: bool = False

    def ok(self) -> bool:
        return not self.missing and not self.extra and not self.partial

    def lines(self) -> list[str]:
        cname = self.class_id.value
        out = []
        for name in self.confirmed:
            out.append(f"{cname}\tconfirmed\t{PATTERNS[name].canonical_form().hex()}\t{name}")
        for name in self.missing:
            out.append(f"{cname}\tmissing\t{PATTERNS[name].canonical_form().hex()}\t{name} not found at n <= {self.n_max}")
        for g in self.extra:
            out.append(f"{cname}\textra\t{g.canonical_form().hex()}\tmined non-catalog obstruction on {g.n} vertices")
        for name in self.out_of_reach:
            out.append(f"{cname}\tout-of-reach\t{PATTERNS[name].canonical_form().hex()}\t{name} has {PATTERNS[name].n} > {self.n_max} vertices")
        if self.partial:
            out.append(f"{cname}\tpartial\t-\ttime budget exhausted before completing n = 6")
        return out

    def render(self) -> str:
        status = "ok" if self.ok() else "FAIL"
        head = (
            f"class {self.class_id.value}: {len(self.found)} minimal obstructions at n <= {self.n_max} "
            f"({len(self.confirmed)} confirmed, {len(self.missing)} missing, {len(self.extra)} extra) [{status}]; "
            f"completeness certified only for n <= {self.n_max}"
        )
        return "\n".join([head] + self.lines())


MINEABLE_CLASSES: tuple[ClassId, ...] = GRAMMAR_CLASSES + (ClassId.TT,) + MICRO_CLASSES

_DEL_CANON: dict[tuple[int, int], tuple[bytes, ...]] = {}


def _deletion_canons(g: Digraph) -> tuple[bytes, ...]:
    key = (g.n, g.mask)
    if key not in _DEL_CANON:
        _DEL_CANON[key] = tuple(g.delete_vertex(v).canonical_form() for v in range(g.n))
    return _DEL_CANON[key]


def is_minimal_obstruction(g: Digraph, x: ClassId) -> bool:
    """True when g is outside the class but every single-vertex deletion is inside."""
    if _class_membership(g, x):
        return False
    return all(_class_membership(g.delete_vertex(v), x) for v in range(g.n))


def minimal_forbidden(
    x: ClassId, n_max: int = 5, jobs: int = 1, budget_seconds: float | None = None
) -> ObstructionReport:
    """Mine all minimal non-members with <= n_max vertices and diff against the catalog.

    A digraph is a minimal obstruction when it is outside the class but every
    single-vertex deletion is inside. Membership comes from the constructive
    recognizer only, so the catalog under test never influences the search.
    """
    if x in PATTERN_ONLY_CLASSES:
        raise ValueError(f"{x.value} has no constructive recognizer to mine against")
    if not 2 <= n_max <= 6:
        raise ValueError("minimal_forbidden supports n_max in 2..6")
    deadline = time.monotonic() + budget_seconds if budget_seconds is not None else None

    member_canon: list[set[bytes]] = [set()]  # per size, canonical forms of members
    found: list[Digraph] = []
    for n in range(1, min(n_max, 5) + 1):
        level: set[bytes] = set()
        for g in enumerate_digraphs(n, jobs=jobs):
            if _class_membership(g, x):
                level.add(g.canonical_form())
            elif n >= 2 and all(
                c in member_canon[n - 1] for c in _deletion_canons(g)
            ):
                found.append(g)
        member_canon.append(level)

    partial = False
    if n_max == 6:
        try:
            found.extend(_mine_six(x, member_canon[5], deadline))
        except BudgetExceeded:
            partial = True

    found.sort(key=lambda g: (g.n, g.mask))
    found_forms = {g.canonical_form() for g in found}
    confirmed, missing, out_of_reach = [], [], []
    for name in CATALOG[x.value]:
        p = PATTERNS[name]
        if p.n > n_max:
            out_of_reach.append(name)
        elif p.canonical_form() in found_forms:
            confirmed.append(name)
        else:
            missing.append(name)
    catalog_forms = {PATTERNS[name].canonical_form() for name in CATALOG[x.value]}
    extra = [g for g in found if g.canonical_form() not in catalog_forms]
    return ObstructionReport(
        class_id=x, n_max=n_max, found=found, confirmed=confirmed,
        missing=missing, extra=extra, out_of_reach=out_of_reach, partial=partial,
    )


def _mine_six(x: ClassId, members5: set[bytes], deadline: float | None) -> list[Digraph]:
    """Six-vertex minimal obstructions by extending 5-vertex members.

    Every minimal 6-vertex obstruction has all deletions inside the class, so
    it is a one-vertex extension of some 5-vertex member representative.
    """
    # enumerate_digraphs reps carry bulk-canonical masks, so their masks are
    # directly comparable with canonical_masks output
    base = np.array(
        [g.mask for g in enumerate_digraphs(5) if g.canonical_form() in members5],
        dtype=np.uint64,
    )
    if base.size == 0:
        return []
    member_masks = np.sort(base)
    embedded = _apply_remap(_embed_tables(5, 6), base)
    ext = _extension_masks(6)
    del_tables = _deletion_tables(6)
    out: list[Digraph] = []
    seen: set[bytes] = set()
    batch = 200
    for start in range(0, embedded.size, batch):
        if deadline is not None and time.monotonic() > deadline:
            raise BudgetExceeded
        cands = (embedded[start : start + batch, None] | ext[None, :]).ravel()
        cands = np.unique(cands)
        keep = np.ones(cands.size, dtype=bool)
        # deleting the attached vertex 5 returns the base member, so only
        # deletions of the original five vertices need checking
        for d in range(5):
            deleted = canonical_masks(5, _apply_remap(del_tables[d], cands[keep]))
            inside = np.isin(deleted, member_masks)
            idx = np.flatnonzero(keep)
            keep[idx[~inside]] = False
            if not keep.any():
                break
        for m in cands[keep]:
            g = Digraph.from_mask(6, int(m))
            if _class_membership(g, x):
                continue
            canon = g.canonical_form()
            if canon not in seen:
                seen.add(canon)
                out.append(Digraph.from_mask(6, int(canonical_masks(6, np.array([m], dtype=np.uint64))[0])))
    return out


# -- tournament enumeration ----------------------------------------------------

_TOURN_CACHE: dict[int, list[Digraph]] = {}


def enumerate_tournaments(n: int) -> list[Digraph]:
    """All n-vertex tournaments up to isomorphism (n <= 7), canonically ordered."""
    if not 1 <= n <= 7:
        raise ValueError(f"tournament enumeration supports 1..7 vertices, got {n}")
    if n in _TOURN_CACHE:
        return list(_TOURN_CACHE[n])
    if n == 1:
        reps = [Digraph.edgeless(1)]
    else:
        w = n - 1
        seen: dict[bytes, Digraph] = {}
        for base in enumerate_tournaments(w):
            arcs0 = list(base.arcs)
            for pat in range(1 << w):
                arcs = arcs0 + [(j, w) if pat >> j & 1 else (w, j) for j in range(w)]
                g = Digraph(n, arcs)
                seen.setdefault(g.canonical_form(), g)
        reps = [seen[c] for c in sorted(seen)]
    _TOURN_CACHE[n] = reps
    return list(reps)


# -- class hierarchy figures ---------------------------------------------------
#
# DIRECTED_HIERARCHY/UNDIRECTED_HIERARCHY transcribe the claimed inclusion
# diagrams: an edge (a, b) claims a is a proper subclass of b, a directed path
# claims inclusion by composition, and pairs with no path either way are
# claimed incomparable.

DIRECTED_HIERARCHY_NODES: tuple[str, ...] = (
    "DC", "OC", "DTP", "OTP", "DCTP", "OCTP", "DWQT", "OWQT", "DCWQT",
    "OCWQT", "DSC", "OSC", "DCSC", "DT", "OT", "TD", "FD",
)

DIRECTED_HIERARCHY_EDGES: tuple[tuple[str, str], ...] = (
    ("OT", "DT"), ("OCWQT", "OTP"), ("OT", "OTP"), ("OSC", "DSC"),
    ("OSC", "OC"), ("DT", "DTP"), ("OTP", "DTP"), ("OCTP", "DCTP"),
    ("OTP", "OC"), ("OCTP", "OC"), ("DSC", "DWQT"), ("OWQT", "DWQT"),
    ("OWQT", "OC"), ("DCSC", "DCWQT"), ("DTP", "DC"), ("DCTP", "DC"),
    ("OC", "DC"), ("DWQT", "DC"), ("DCWQT", "DC"), ("DT", "DSC"),
    ("DT", "DCSC"), ("OT", "OSC"), ("OT", "OCWQT"), ("DT", "DCTP"),
    ("OT", "OCTP"), ("OT", "FD"), ("DT", "TD"),
)

UNDIRECTED_HIERARCHY_NODES: tuple[str, ...] = (
    "C", "TP", "CTP", "T", "SC", "CSC", "WQT", "CWQT",
)

UNDIRECTED_HIERARCHY_EDGES: tuple[tuple[str, str], ...] = (
    ("T", "TP"), ("T", "SC"), ("T", "CSC"), ("TP", "WQT"), ("SC", "WQT"),
    ("SC", "CTP"), ("CSC", "CWQT"), ("WQT", "C"), ("CTP", "CWQT"),
    ("CWQT", "C"),
)


def _reachability(nodes: Sequence[str], edges: Sequence[tuple[str, str]]) -> dict[str, set[str]]:
    succ: dict[str, set[str]] = {a: set() for a in nodes}
    for a, b in edges:
        succ[a].add(b)
    reach: dict[str, set[str]] = {}
    for a in nodes:
        stack, seen = [a], set()
        while stack:
            for b in succ[stack.pop()]:
                if b not in seen:
                    seen.add(b)
                    stack.append(b)
        reach[a] = seen
    return reach


def verify_hierarchy(n_max: int = 5, directed: bool = True, jobs: int = 1) -> VerifyReport:
    """Check every claimed edge (strict inclusion) and non-path pair (incomparability).

    Witnesses are searched among all digraphs (or undirected graphs) with at
    most n_max vertices; rows fail either on a counterexample to an inclusion
    or on a witness that cannot be found within the size bound.
    """
    if directed:
        suite = "hierarchy-directed"
        nodes, edges = DIRECTED_HIERARCHY_NODES, DIRECTED_HIERARCHY_EDGES
        reps: list = [g for n in range(1, n_max + 1) for g in enumerate_digraphs(n, jobs=jobs)]
        membership = lambda g, name: _class_membership(g, ClassId(name))
    else:
        suite = "hierarchy-undirected"
        nodes, edges = UNDIRECTED_HIERARCHY_NODES, UNDIRECTED_HIERARCHY_EDGES
        reps = [g for n in range(1, n_max + 1) for g in enumerate_undirected(n)]
        membership = lambda g, name: member_u(g, UClassId(name))

    order = [(g, g.canonical_form()) for g in reps]
    mem: dict[str, set[bytes]] = {name: set() for name in nodes}
    for g, canon in order:
        for name in nodes:
            if membership(g, name):
                mem[name].add(canon)

    def first_in(diff: set[bytes]):
        for g, canon in order:
            if canon in diff:
                return g
        return None

    report = VerifyReport(suite=suite)
    total = len(order)
    for a, b in edges:
        leak = first_in(mem[a] - mem[b])
        if leak is None:
            report.rows.append(CheckRow(
                f"{a} subset-of {b}", "ok", "-",
                f"holds on all {total} graphs with at most {n_max} vertices"))
        else:
            report.rows.append(CheckRow(
                f"{a} subset-of {b}", "fail", leak.canonical_form().hex(),
                f"member of {a} outside {b} on {leak.n} vertices"))
        wit = first_in(mem[b] - mem[a])
        if wit is None:
            report.rows.append(CheckRow(
                f"{a} proper-subset {b}", "fail", "-",
                f"no separating witness with at most {n_max} vertices"))
        else:
            report.rows.append(CheckRow(
                f"{a} proper-subset {b}", "ok", wit.canonical_form().hex(),
                f"witness in {b} but not {a} on {wit.n} vertices"))

    reach = _reachability(nodes, edges)
    for i, a in enumerate(nodes):
        for b in nodes[i + 1:]:
            if b in reach[a] or a in reach[b]:
                continue
            for x, y in ((a, b), (b, a)):
                wit = first_in(mem[x] - mem[y])
                if wit is None:
                    report.rows.append(CheckRow(
                        f"{x} not-below {y}", "fail", "-",
                        f"claimed incomparable but no witness in {x} outside {y} "
                        f"with at most {n_max} vertices"))
                else:
                    report.rows.append(CheckRow(
                        f"{x} not-below {y}", "ok", wit.canonical_form().hex(),
                        f"witness in {x} but not {y} on {wit.n} vertices"))
    return report


# -- characterization theorem suite --------------------------------------------


@dataclass(frozen=True)
class TheoremSpec:
    name: str
    universe: str  # "digraphs" | "oriented" | "tournaments"
    items: tuple[tuple[str, Callable[[Digraph], bool]], ...]


def _free(*names: str) -> Callable[[Digraph], bool]:
    pats = tuple((PATTERNS[name].n, PATTERNS[name].canonical_form()) for name in names)

    def pred(g: Digraph) -> bool:
        canons = induced_canon_set(g)
        return all(c not in canons for pn, c in pats if pn <= g.n)

    return pred


def _member(x: ClassId) -> Callable[[Digraph], bool]:
    return lambda g: _class_membership(g, x)


_UN_MEMBER_CACHE: dict[tuple[int, int, UClassId], bool] = {}


def _un_in(u: UClassId) -> Callable[[Digraph], bool]:
    def pred(g: Digraph) -> bool:
        key = (g.n, g.mask, u)
        if key not in _UN_MEMBER_CACHE:
            _UN_MEMBER_CACHE[key] = member_u(g.underlying(), u)
        return _UN_MEMBER_CACHE[key]

    return pred


def _both(p: Callable[[Digraph], bool], q: Callable[[Digraph], bool]) -> Callable[[Digraph], bool]:
    return lambda g: p(g) and q(g)


def _transitive_and(q: Callable[[Digraph], bool]) -> Callable[[Digraph], bool]:
    return lambda g: g.is_transitive() and q(g)


def _source_elimination(g: Digraph) -> bool:
    # on tournaments: repeatedly peel the vertex beating all remaining ones
    cur = g
    while cur.n > 1:
        hits = [v for v in range(cur.n) if cur.out_degree(v) == cur.n - 1]
        if not hits:
            return False
        cur = cur.delete_vertex(hits[0])
    return True


def _sink_elimination(g: Digraph) -> bool:
    cur = g
    while cur.n > 1:
        hits = [v for v in range(cur.n) if cur.in_degree(v) == cur.n - 1]
        if not hits:
            return False
        cur = cur.delete_vertex(hits[0])
    return True


_D1_6 = ("D1", "D2", "D3", "D4", "D5", "D6")
_D1_8 = _D1_6 + ("D7", "D8")
_DTP_CORE = _D1_6 + ("D10", "D11", "D13", "D14", "D15")
_Q_ALL = tuple(f"Q{i}" for i in range(1, 8))

THEOREMS: dict[str, TheoremSpec] = {}


def _register(name: str, universe: str, *items: tuple[str, Callable[[Digraph], bool]]) -> None:
    THEOREMS[name] = TheoremSpec(name, universe, tuple(items))


_register(
    "dc-characterization", "digraphs",
    ("constructive recognizer", _member(ClassId.DC)),
    ("full obstruction set", _free(*CATALOG["DC"])),
    ("reduced set + underlying cograph", _both(_free(*_D1_6), _un_in(UClassId.C))),
)
_register(
    "oc-characterization", "digraphs",
    ("constructive recognizer", _member(ClassId.OC)),
    ("full obstruction set", _free(*CATALOG["OC"])),
    ("reduced set + underlying cograph", _both(_free("D1", "D5", "K2bidir"), _un_in(UClassId.C))),
    ("transitive + reduced set", _transitive_and(_free("K2bidir", "D8"))),
)
_register(
    "dtp-characterization", "digraphs",
    ("constructive recognizer", _member(ClassId.DTP)),
    ("full obstruction set", _free(*CATALOG["DTP"])),
    ("reduced set + underlying trivially-perfect", _both(_free(*_DTP_CORE), _un_in(UClassId.TP))),
)
_register(
    "otp-characterization", "digraphs",
    ("constructive recognizer", _member(ClassId.OTP)),
    ("full obstruction set", _free(*CATALOG["OTP"])),
    ("reduced set + underlying trivially-perfect", _both(_free("D1", "D5", "K2bidir"), _un_in(UClassId.TP))),
    ("transitive + reduced set", _transitive_and(_free("K2bidir", "D8", "D12"))),
)
_register(
    "dwqt-characterization", "digraphs",
    ("constructive recognizer", _member(ClassId.DWQT)),
    ("full obstruction set", _free(*CATALOG["DWQT"])),
    ("reduced set + underlying weakly-quasi-threshold",
     _both(_free(*(_D1_6 + ("Q1", "Q2", "Q4", "Q5", "Q6"))), _un_in(UClassId.WQT))),
)
_register(
    "owqt-characterization", "digraphs",
    ("constructive recognizer", _member(ClassId.OWQT)),
    ("full obstruction set", _free(*CATALOG["OWQT"])),
    ("transitive + reduced set", _transitive_and(_free("D8", "K2bidir", "Q7"))),
    ("reduced set + underlying weakly-quasi-threshold",
     _both(_free("D1", "D5", "K2bidir"), _un_in(UClassId.WQT))),
)
_register(
    "dcwqt-characterization", "digraphs",
    ("constructive recognizer", _member(ClassId.DCWQT)),
    ("full obstruction set", _free(*CATALOG["DCWQT"])),
)
_register(
    "ocwqt-characterization", "digraphs",
    ("constructive recognizer", _member(ClassId.OCWQT)),
    ("full obstruction set", _free(*CATALOG["OCWQT"])),
    ("oriented-cograph + extra obstructions",
     _both(_member(ClassId.OC), _free("D12", "D21", "D22", "D23"))),
    ("transitive + reduced set", _transitive_and(_free("D8", "K2bidir", "D12", "D21", "D22", "D23"))),
)
_register(
    "dsc-characterization", "digraphs",
    ("constructive recognizer", _member(ClassId.DSC)),
    ("full obstruction set", _free(*CATALOG["DSC"])),
    ("reduced set + underlying simple-cograph", _both(_free(*(_D1_8 + _Q_ALL)), _un_in(UClassId.SC))),
)
_register(
    "osc-characterization", "digraphs",
    ("constructive recognizer", _member(ClassId.OSC)),
    ("full obstruction set", _free(*CATALOG["OSC"])),
    ("transitive + reduced set", _transitive_and(_free("D8", "Q7", "coD11", "K2bidir"))),
)
_register(
    "dcsc-characterization", "digraphs",
    ("constructive recognizer", _member(ClassId.DCSC)),
    ("full obstruction set", _free(*CATALOG["DCSC"])),
    ("reduced set + underlying co-simple-cograph",
     _both(_free(*(_D1_8 + ("coQ1", "coQ4", "coQ5", "coQ6", "Q1", "D10"))), _un_in(UClassId.CSC))),
)
_register(
    "dt-characterization", "digraphs",
    ("constructive recognizer", _member(ClassId.DT)),
    ("full obstruction set", _free(*CATALOG["DT"])),
    ("reduced set + underlying threshold", _both(_free(*_DTP_CORE), _un_in(UClassId.T))),
    ("trivially-perfect both ways",
     lambda g: _class_membership(g, ClassId.DTP) and _class_membership(g.complement(), ClassId.DTP)),
)
_register(
    "ot-characterization", "digraphs",
    ("constructive recognizer", _member(ClassId.OT)),
    ("oriented co-trivially-perfect recognizer", _member(ClassId.OCTP)),
    ("full obstruction set", _free(*CATALOG["OT"])),
    ("reduced set + underlying threshold", _both(_free("D1", "D5", "K2bidir"), _un_in(UClassId.T))),
    ("transitive + reduced set", _transitive_and(_free("D8", "D12", "coD11", "K2bidir"))),
)
_register(
    "transitive-tournament-equivalences", "tournaments",
    ("transitive arc relation", lambda g: g.is_transitive()),
    ("acyclic", lambda g: g.is_acyclic()),
    ("no directed triangle", _free("D5")),
    ("source elimination", _source_elimination),
    ("sink elimination", _sink_elimination),
)
# restating no-anticircuit via small patterns plus two-switch-freeness needs
# the directed triangle: resolving the vertex coincidences of an anticircuit
# can produce D5, not just D1 or K2bidir, so the two-pattern variant fails
# (first counterexample D5) while the three-pattern variant holds
_register(
    "ferrers-two-switch", "digraphs",
    ("no alternating anticircuit", lambda g: not has_anticircuit(g)),
    ("catalog route", _member(ClassId.FD)),
    ("two-pattern variant: D1, K2bidir free and no two-switch",
     _both(_free("D1", "K2bidir"), lambda g: not has_two_switch(g))),
    ("three-pattern variant: D1, D5, K2bidir free and no two-switch",
     _both(_free("D1", "D5", "K2bidir"), lambda g: not has_two_switch(g))),
)
_register(
    "oriented-transitivity", "oriented",
    ("transitive arc relation", lambda g: g.is_transitive()),
    ("forbidden pair", _free("D1", "D5")),
)


def _universe(kind: str, n_max: int, jobs: int) -> tuple[list[Digraph], int, str]:
    if kind == "digraphs":
        return (
            [g for n in range(1, n_max + 1) for g in enumerate_digraphs(n, jobs=jobs)],
            n_max, "digraphs",
        )
    if kind == "oriented":
        return (
            [g for n in range(1, n_max + 1) for g in enumerate_digraphs(n, jobs=jobs)
             if g.is_oriented()],
            n_max, "oriented digraphs",
        )
    if kind == "tournaments":
        # tournaments are sparse enough to always sweep through 6 vertices
        eff = max(n_max, 6)
        return (
            [g for n in range(1, eff + 1) for g in enumerate_tournaments(n)],
            eff, "tournaments",
        )
    raise ValueError(f"unknown universe {kind!r}")


def verify_theorems(n_max: int = 5, names: Sequence[str] | None = None, jobs: int = 1) -> VerifyReport:
    """Cross-check every registered characterization pointwise on its universe."""
    chosen = list(names) if names is not None else list(THEOREMS)
    report = VerifyReport(suite="theorems")
    for key in chosen:
        spec = THEOREMS[key]
        graphs, eff, noun = _universe(spec.universe, n_max, jobs)
        base_label, base_pred = spec.items[0]
        for label, pred in spec.items[1:]:
            counterexample = None
            for g in graphs:
                a, b = base_pred(g), pred(g)
                if a != b:
                    counterexample = (g, a, b)
                    break
            subject = f"{spec.name}: {label} == {base_label}"
            if counterexample is None:
                report.rows.append(CheckRow(
                    subject, "ok", "-",
                    f"agree on {len(graphs)} {noun} with at most {eff} vertices"))
            else:
                g, a, b = counterexample
                report.rows.append(CheckRow(
                    subject, "fail", g.canonical_form().hex(),
                    f"{base_label}={a} but {label}={b} on {g.n} vertices"))
    return report


# -- closure suite --------------------------------------------------------------


def verify_closures(n_max: int = 5, jobs: int = 1) -> VerifyReport:
    """Complement/converse closure facts for the core classes and obstruction families."""
    report = VerifyReport(suite="closures")
    graphs = [g for n in range(1, n_max + 1) for g in enumerate_digraphs(n, jobs=jobs)]
    total = len(graphs)

    for x in (ClassId.DC, ClassId.DT):
        leak = next(
            (g for g in graphs
             if _class_membership(g, x) != _class_membership(g.complement(), x)),
            None,
        )
        if leak is None:
            report.rows.append(CheckRow(
                f"{x.value} complement-closed", "ok", "-",
                f"membership matches complement membership on all {total} digraphs"))
        else:
            report.rows.append(CheckRow(
                f"{x.value} complement-closed", "fail", leak.canonical_form().hex(),
                f"complement flips membership on {leak.n} vertices"))

    leak = next(
        (g for g in graphs
         if _class_membership(g, ClassId.DC) != _class_membership(g.converse(), ClassId.DC)),
        None,
    )
    if leak is None:
        report.rows.append(CheckRow(
            "DC converse-closed", "ok", "-",
            f"membership matches converse membership on all {total} digraphs"))
    else:
        report.rows.append(CheckRow(
            "DC converse-closed", "fail", leak.canonical_form().hex(),
            f"converse flips membership on {leak.n} vertices"))

    for x in (ClassId.DTP, ClassId.DWQT):
        wit = next(
            (g for g in graphs
             if _class_membership(g, x) and not _class_membership(g.complement(), x)),
            None,
        )
        if wit is None:
            report.rows.append(CheckRow(
                f"{x.value} complement-not-closed", "fail", "-",
                f"no member with complement outside the class at n <= {n_max}"))
        else:
            report.rows.append(CheckRow(
                f"{x.value} complement-not-closed", "ok", wit.canonical_form().hex(),
                f"member on {wit.n} vertices whose complement leaves the class"))

    for label, names in (
        ("obstruction family D1-D8 complement-closed", _D1_8),
        ("obstruction family D12-D15 complement-closed", ("D12", "D13", "D14", "D15")),
    ):
        forms = {PATTERNS[name].canonical_form() for name in names}
        co_forms = {PATTERNS[name].complement().canonical_form() for name in names}
        if forms == co_forms:
            report.rows.append(CheckRow(
                label, "ok", "-", f"complement permutes the {len(names)} patterns"))
        else:
            report.rows.append(CheckRow(
                label, "fail", "-", "complement maps the family to a different set"))
    return report


# -- projection suite -----------------------------------------------------------


def verify_projections(n_max: int = 5, jobs: int = 1) -> VerifyReport:
    """Underlying/symmetric/asymmetric projection facts plus the expression round-trip."""
    report = VerifyReport(suite="projections")
    graphs = [g for n in range(1, n_max + 1) for g in enumerate_digraphs(n, jobs=jobs)]

    untests: tuple[tuple[str, ClassId, UClassId], ...] = (
        ("DC: underlying graph is a cograph", ClassId.DC, UClassId.C),
        ("OC: underlying graph is a cograph", ClassId.OC, UClassId.C),
        ("DTP: underlying graph is trivially perfect", ClassId.DTP, UClassId.TP),
        ("OTP: underlying graph is trivially perfect", ClassId.OTP, UClassId.TP),
        ("DWQT: underlying graph is weakly quasi threshold", ClassId.DWQT, UClassId.WQT),
        ("DSC: underlying graph is a simple cograph", ClassId.DSC, UClassId.SC),
        ("DT: underlying graph is threshold", ClassId.DT, UClassId.T),
        ("OT: underlying graph is a cograph", ClassId.OT, UClassId.C),
    )
    symtests: tuple[tuple[str, ClassId, UClassId, ClassId], ...] = (
        ("DC: symmetric part underlies a cograph, asymmetric part oriented cograph",
         ClassId.DC, UClassId.C, ClassId.OC),
        ("DTP: symmetric part underlies trivially perfect, asymmetric part oriented",
         ClassId.DTP, UClassId.TP, ClassId.OTP),
        ("DWQT: symmetric part underlies weakly quasi threshold, asymmetric part oriented",
         ClassId.DWQT, UClassId.WQT, ClassId.OWQT),
        ("DSC: symmetric part underlies a simple cograph, asymmetric part oriented",
         ClassId.DSC, UClassId.SC, ClassId.OSC),
        ("DT: symmetric part underlies threshold, asymmetric part oriented threshold",
         ClassId.DT, UClassId.T, ClassId.OT),
    )

    def check(subject: str, prop: Callable[[Digraph], bool], scope: ClassId) -> None:
        leak = next(
            (g for g in graphs if _class_membership(g, scope) and not prop(g)), None)
        n_members = sum(1 for g in graphs if _class_membership(g, scope))
        if leak is None:
            report.rows.append(CheckRow(
                subject, "ok", "-",
                f"holds for all {n_members} members with at most {n_max} vertices"))
        else:
            report.rows.append(CheckRow(
                subject, "fail", leak.canonical_form().hex(),
                f"member on {leak.n} vertices violates the projection"))

    for subject, x, u in untests:
        check(subject, _un_in(u), x)
    for subject, x, u, ox in symtests:
        check(
            subject,
            lambda g, u=u, ox=ox: member_u(g.sym_part().underlying(), u)
            and _class_membership(g.asym_part(), ox),
            x,
        )
    check("OC: acyclic", lambda g: g.is_acyclic(), ClassId.OC)
    check("DT: free of two-switches", lambda g: not has_two_switch(g), ClassId.DT)

    def round_trip(g: Digraph) -> bool:
        tree = di_co_tree(g)
        if tree is None:
            return False
        from dcograph.construct import evaluate

        return evaluate(tree).isomorphic_to(g)

    check("DC: expression round-trip rebuilds the digraph", round_trip, ClassId.DC)
    return report


def verify_suite(name: str, n_max: int = 5, jobs: int = 1) -> VerifyReport:
    """Dispatch a named verification suite; hierarchy covers both figures."""
    if not 1 <= n_max <= 5:
        raise ValueError("verify_suite supports n_max in 1..5")
    if name == "hierarchy":
        directed = verify_hierarchy(n_max=n_max, directed=True, jobs=jobs)
        undirected = verify_hierarchy(n_max=n_max, directed=False)
        return VerifyReport(suite="hierarchy", rows=directed.rows + undirected.rows)
    if name == "theorems":
        return verify_theorems(n_max=n_max, jobs=jobs)
    if name == "closures":
        return verify_closures(n_max=n_max, jobs=jobs)
    raise ValueError(f"unknown suite {name!r}; expected hierarchy, theorems, or closures")
