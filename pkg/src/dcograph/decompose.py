"""Splitting digraphs into union/series/order parts and threshold creation sequences."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from dcograph.core import Digraph, _components_from_rows
from dcograph.construct import Expression, leaf, order, series, union


@dataclass(frozen=True)
class Split:
    """Top-level decomposition: the operation and its parts (ordered for `order`)."""

    op: str  # "union" | "series" | "order" | "prime"
    parts: tuple[tuple[int, ...], ...]


_SPLIT_CACHE: dict[tuple[int, int], Split] = {}


def maximal_split(g: Digraph) -> Split:
    """Split into maximal parts joined by one operation, or report prime.

    Tries union (components of the underlying graph), then series (components
    of the complement's underlying graph), then order: components of the
    auxiliary graph M with {u,v} adjacent iff the pair is symmetric (both arcs
    or neither). Cross-M-component pairs carry exactly one arc by construction;
    a linear arrangement is derived from one representative pair per component
    pair and then verified against every cross pair.
    """
    if g.n < 2:
        raise ValueError("splits need at least 2 vertices")
    key = (g.n, g.mask)
    hit = _SPLIT_CACHE.get(key)
    if hit is not None:
        return hit
    out = _maximal_split_uncached(g)
    _SPLIT_CACHE[key] = out
    return out


def _maximal_split_uncached(g: Digraph) -> Split:
    comps = g.underlying_components()
    if len(comps) > 1:
        return Split("union", tuple(comps))
    co_comps = g.co_components()
    if len(co_comps) > 1:
        return Split("series", tuple(co_comps))

    n = g.n
    conv_mask = g.converse().mask
    sym_pairs = ~(g.mask ^ conv_mask)  # bit u*n+v set iff pair status symmetric
    m_rows = [0] * n
    for u in range(n):
        for v in range(n):
            if u != v and sym_pairs >> u * n + v & 1:
                m_rows[u] |= 1 << v
    blocks = _components_from_rows(n, m_rows)
    if len(blocks) < 2:
        return Split("prime", (tuple(range(n)),))

    # order blocks by how many other blocks their representative arc beats
    beats = [0] * len(blocks)
    for i in range(len(blocks)):
        for j in range(len(blocks)):
            if i != j and g.has_arc(blocks[i][0], blocks[j][0]):
                beats[i] += 1
    ranked = sorted(range(len(blocks)), key=lambda i: -beats[i])
    if len({beats[i] for i in ranked}) != len(blocks):
        return Split("prime", (tuple(range(n)),))
    ordered = [blocks[i] for i in ranked]
    for i in range(len(ordered)):
        for j in range(i + 1, len(ordered)):
            for u in ordered[i]:
                for v in ordered[j]:
                    if not g.has_arc(u, v) or g.has_arc(v, u):
                        return Split("prime", (tuple(range(n)),))
    return Split("order", tuple(ordered))


def di_co_tree(g: Digraph) -> Expression | None:
    """A construction expression evaluating to a digraph isomorphic to g, or None."""
    if g.n == 1:
        return leaf()
    split = maximal_split(g)
    if split.op == "prime":
        return None
    children = []
    for part in split.parts:
        child = di_co_tree(g.induced(part))
        if child is None:
            return None
        children.append(child)
    build = {"union": union, "series": series, "order": order}[split.op]
    return build(*children)


@dataclass(frozen=True)
class CreationSequence:
    """Digit string over 0/1/2/3 plus the vertex peeled into each position."""

    digits: str
    order: tuple[int, ...]


def creation_sequence(g: Digraph, allow_series: bool = True) -> CreationSequence | None:
    """Greedy reverse peel; digits 0 isolated, 1 out-dominating, 2 in-dominated, 3 bi-dominating."""
    return creation_sequence_raw(g.n, g.arcs, allow_series)


def creation_sequence_raw(
    n: int, arcs: Iterable[tuple[int, int]], allow_series: bool = True
) -> CreationSequence | None:
    """Creation-sequence recognition on a raw arc list, O(n + m).

    Peeled vertices are adjacent-to-all-or-none of the remainder, so current
    degrees stay reconstructible from the original ones: every peel of digit
    2/3 lowers all remaining out-degrees by one (offset A), every peel of
    digit 1/3 lowers remaining in-degrees (offset B). Vertices therefore never
    change buckets and each step costs four dictionary probes.
    """
    outdeg = [0] * n
    indeg = [0] * n
    for u, v in arcs:
        outdeg[u] += 1
        indeg[v] += 1
    buckets: dict[tuple[int, int], list[int]] = {}
    for v in range(n):
        buckets.setdefault((outdeg[v], indeg[v]), []).append(v)
    for vs in buckets.values():
        vs.sort(reverse=True)  # pop() yields the smallest remaining id

    a_off = 0  # peeled digits in {2, 3}: lost out-neighbors of the remainder
    b_off = 0  # peeled digits in {1, 3}: lost in-neighbors of the remainder
    peeled: list[tuple[int, int]] = []
    for k in range(n, 1, -1):
        probes = (
            (3, (a_off + k - 1, b_off + k - 1)),
            (2, (a_off, b_off + k - 1)),
            (1, (a_off + k - 1, b_off)),
            (0, (a_off, b_off)),
        )
        for digit, key in probes:
            if digit == 3 and not allow_series:
                continue
            bucket = buckets.get(key)
            if bucket:
                v = bucket.pop()
                peeled.append((digit, v))
                if digit in (2, 3):
                    a_off += 1
                if digit in (1, 3):
                    b_off += 1
                break
        else:
            return None
    last = next(vs[-1] for vs in buckets.values() if vs)
    peeled.append((1, last))
    peeled.reverse()
    return CreationSequence(
        digits="".join(str(d) for d, _ in peeled),
        order=tuple(v for _, v in peeled),
    )


def replay_arcs(digits: str) -> list[tuple[int, int]]:
    """Arc list of the digraph a creation sequence builds (vertex i = step i)."""
    if not digits or digits[0] != "1":
        raise ValueError("creation sequence must start with digit 1")
    arcs: list[tuple[int, int]] = []
    for i, d in enumerate(digits):
        if i == 0:
            continue
        if d == "0":
            continue
        if d not in "123":
            raise ValueError(f"invalid creation digit {d!r}")
        for j in range(i):
            if d in ("1", "3"):
                arcs.append((i, j))
            if d in ("2", "3"):
                arcs.append((j, i))
    return arcs


def replay(digits: str) -> Digraph:
    """Rebuild the digraph a creation sequence denotes (n <= 64)."""
    return Digraph(len(digits), replay_arcs(digits))
