"""Membership recognizers: constructive split rules, forbidden patterns, grammar oracle."""
from __future__ import annotations

from enum import Enum
from typing import Callable, Iterable

from dcograph.construct import (
    Expression,
    bidirectional_complete,
    edgeless,
    evaluate,
    leaf,
    order,
    series,
    transitive_tournament,
    union,
)
from dcograph.core import Digraph
from dcograph.decompose import maximal_split
from dcograph.patterns import (
    CATALOG,
    PATTERNS,
    contains_induced,
    has_anticircuit,
    has_two_switch,
    match_partial,
    ANTICIRCUIT,
    TWO_SWITCH,
)


class ClassId(Enum):
    DC = "DC"
    OC = "OC"
    DTP = "DTP"
    OTP = "OTP"
    DCTP = "DCTP"
    OCTP = "OCTP"
    DT = "DT"
    OT = "OT"
    DWQT = "DWQT"
    OWQT = "OWQT"
    DCWQT = "DCWQT"
    OCWQT = "OCWQT"
    DSC = "DSC"
    OSC = "OSC"
    DCSC = "DCSC"
    OCSC = "OCSC"
    TT = "TT"
    TD = "TD"
    FD = "FD"
    EDGELESS = "EdgelessD"
    BIDIR_COMPLETE = "BidirComplete"
    TWO_BIDIR_CLIQUES = "TwoBidirCliques"
    BIDIR_COMPLETE_BIPARTITE = "BidirCompleteBipartite"
    SERIES_OF_STABLE_SETS = "SeriesOfStableSets"
    UNION_OF_BIDIR_CLIQUES = "UnionOfBidirCliques"


GRAMMAR_CLASSES: tuple[ClassId, ...] = (
    ClassId.DC, ClassId.OC, ClassId.DTP, ClassId.OTP, ClassId.DCTP,
    ClassId.OCTP, ClassId.DT, ClassId.OT, ClassId.DWQT, ClassId.OWQT,
    ClassId.DCWQT, ClassId.OCWQT, ClassId.DSC, ClassId.OSC, ClassId.DCSC,
    ClassId.OCSC,
)

MICRO_CLASSES: tuple[ClassId, ...] = (
    ClassId.EDGELESS, ClassId.BIDIR_COMPLETE, ClassId.TWO_BIDIR_CLIQUES,
    ClassId.BIDIR_COMPLETE_BIPARTITE, ClassId.SERIES_OF_STABLE_SETS,
    ClassId.UNION_OF_BIDIR_CLIQUES,
)

PATTERN_ONLY_CLASSES: tuple[ClassId, ...] = (ClassId.TD, ClassId.FD)


class RouteDisagreement(Exception):
    """Constructive and pattern membership routes disagreed; never resolved silently."""

    def __init__(self, class_id: ClassId, g: Digraph, constructive: bool, by_patterns: bool):
        self.class_id = class_id
        self.digraph = g
        self.constructive = constructive
        self.by_patterns = by_patterns
        super().__init__(
            f"route disagreement for {class_id.value} on {g!r}: "
            f"constructive={constructive}, patterns={by_patterns}"
        )


# -- part-kind predicates -----------------------------------------------------


def _is_singleton(g: Digraph) -> bool:
    return g.n == 1


def _is_edgeless(g: Digraph) -> bool:
    return g.is_edgeless()


def _is_bidir_complete(g: Digraph) -> bool:
    return g.is_bidirectional_complete()


def _is_tt(g: Digraph) -> bool:
    return g.is_tournament() and g.is_acyclic()


_REST_PRED: dict[str, Callable[[Digraph], bool]] = {
    "singleton": _is_singleton,
    "edgeless": _is_edgeless,
    "bidir-complete": _is_bidir_complete,
    "transitive-tournament": _is_tt,
}

ANY = ("any",)
FORBIDDEN = ("forbidden",)


def _one(rest: str) -> tuple[str, str]:
    return ("one", rest)


# split-op -> rule, evaluated on maximal-split parts
RULES: dict[ClassId, dict[str, tuple[str, ...]]] = {
    ClassId.DC: {"union": ANY, "order": ANY, "series": ANY},
    ClassId.OC: {"union": ANY, "order": ANY, "series": FORBIDDEN},
    ClassId.DTP: {"union": ANY, "order": _one("singleton"), "series": _one("singleton")},
    ClassId.OTP: {"union": ANY, "order": _one("singleton"), "series": FORBIDDEN},
    ClassId.DCTP: {"union": _one("singleton"), "order": _one("singleton"), "series": ANY},
    ClassId.OCTP: {"union": _one("singleton"), "order": _one("singleton"), "series": FORBIDDEN},
    ClassId.DT: {"union": _one("singleton"), "order": _one("singleton"), "series": _one("singleton")},
    ClassId.OT: {"union": _one("singleton"), "order": _one("singleton"), "series": FORBIDDEN},
    ClassId.DWQT: {"union": ANY, "order": _one("edgeless"), "series": _one("edgeless")},
    ClassId.OWQT: {"union": ANY, "order": _one("edgeless"), "series": FORBIDDEN},
    ClassId.DCWQT: {"union": _one("bidir-complete"), "order": _one("bidir-complete"), "series": ANY},
    ClassId.OCWQT: {"union": _one("transitive-tournament"), "order": _one("singleton"), "series": FORBIDDEN},
    ClassId.DSC: {"union": _one("edgeless"), "order": _one("edgeless"), "series": _one("edgeless")},
    ClassId.OSC: {"union": _one("edgeless"), "order": _one("edgeless"), "series": FORBIDDEN},
    ClassId.DCSC: {"union": _one("bidir-complete"), "order": _one("bidir-complete"), "series": _one("bidir-complete")},
    ClassId.OCSC: {"union": _one("transitive-tournament"), "order": _one("singleton"), "series": FORBIDDEN},
}

_MEMBER_CACHE: dict[tuple[int, int, ClassId], bool] = {}


def _is_symmetric(g: Digraph) -> bool:
    return g.asym_part().is_edgeless()


def _micro_member(g: Digraph, x: ClassId) -> bool:
    if x is ClassId.EDGELESS:
        return g.is_edgeless()
    if x is ClassId.BIDIR_COMPLETE:
        return g.is_bidirectional_complete()
    if x is ClassId.UNION_OF_BIDIR_CLIQUES:
        return _is_symmetric(g) and all(
            g.induced(c).is_bidirectional_complete() for c in g.underlying_components()
        )
    if x is ClassId.TWO_BIDIR_CLIQUES:
        return (
            _micro_member(g, ClassId.UNION_OF_BIDIR_CLIQUES)
            and len(g.underlying_components()) <= 2
        )
    if x is ClassId.SERIES_OF_STABLE_SETS:
        return _is_symmetric(g) and _micro_member(g.complement(), ClassId.UNION_OF_BIDIR_CLIQUES)
    if x is ClassId.BIDIR_COMPLETE_BIPARTITE:
        return _is_symmetric(g) and _micro_member(g.complement(), ClassId.TWO_BIDIR_CLIQUES)
    raise ValueError(f"{x} is not a micro class")


def member_constructive(g: Digraph, x: ClassId) -> bool:
    """Membership via the class's recursive construction, on maximal splits."""
    if x in PATTERN_ONLY_CLASSES:
        raise ValueError(f"{x.value} has no constructive recognizer; use member_by_patterns")
    if x is ClassId.TT:
        return _is_tt(g)
    if x in MICRO_CLASSES:
        return _micro_member(g, x)
    key = (g.n, g.mask, x)
    hit = _MEMBER_CACHE.get(key)
    if hit is not None:
        return hit
    out = _member_rec(g, x)
    _MEMBER_CACHE[key] = out
    return out


def _member_rec(g: Digraph, x: ClassId) -> bool:
    if g.n == 1:
        return True
    split = maximal_split(g)
    if split.op == "prime":
        return False
    rule = RULES[x][split.op]
    if rule == FORBIDDEN:
        return False
    parts = [g.induced(p) for p in split.parts]
    if rule == ANY:
        return all(member_constructive(p, x) for p in parts)
    rest_pred = _REST_PRED[rule[1]]
    exceptional = [p for p in parts if not rest_pred(p)]
    if len(exceptional) > 1:
        return False
    if not exceptional:
        return True
    return member_constructive(exceptional[0], x)


def _rest_expression(g: Digraph, rest: str) -> Expression:
    """Expression for a part that satisfies a rest-kind predicate."""
    if g.n == 1:
        return leaf()
    leaves = [leaf() for _ in range(g.n)]
    if rest == "edgeless":
        return union(*leaves)
    if rest == "bidir-complete":
        return series(*leaves)
    if rest == "transitive-tournament":
        return order(*leaves)
    raise AssertionError(f"non-singleton rest part for kind {rest}")


def constructive_certificate(g: Digraph, x: ClassId) -> Expression | None:
    """A construction expression conforming to the class grammar, or None."""
    if x in PATTERN_ONLY_CLASSES:
        raise ValueError(f"{x.value} has no constructive recognizer; use member_by_patterns")
    if x is ClassId.TT:
        if not _is_tt(g):
            return None
        return leaf() if g.n == 1 else order(*[leaf() for _ in range(g.n)])
    if x in MICRO_CLASSES:
        if not _micro_member(g, x):
            return None
        from dcograph.decompose import di_co_tree

        return di_co_tree(g)
    if not member_constructive(g, x):
        return None
    if g.n == 1:
        return leaf()
    split = maximal_split(g)
    rule = RULES[x][split.op]
    build = {"union": union, "order": order, "series": series}[split.op]
    parts = [g.induced(p) for p in split.parts]
    if rule == ANY:
        children = [constructive_certificate(p, x) for p in parts]
    else:
        rest_pred = _REST_PRED[rule[1]]
        children = [
            constructive_certificate(p, x) if not rest_pred(p) else _rest_expression(p, rule[1])
            for p in parts
        ]
    assert all(c is not None for c in children)
    return build(*children)  # type: ignore[arg-type]


# -- pattern route ------------------------------------------------------------


def member_by_patterns(g: Digraph, x: ClassId) -> bool:
    """Membership by freeness from the class catalog (plus TD/FD partial patterns)."""
    return violating_occurrence(g, x) is None


def violating_occurrence(g: Digraph, x: ClassId) -> tuple[str, tuple[int, ...]] | None:
    """First violation as (pattern name, vertex occurrence), or None if member."""
    for name in CATALOG[x.value]:
        pattern = PATTERNS[name]
        witness = contains_induced(g, pattern)
        if witness is not None:
            return (name, witness)
    if x is ClassId.TD:
        roles = match_partial(g, TWO_SWITCH)
        if roles is not None:
            return (TWO_SWITCH.name, roles)
    if x is ClassId.FD:
        roles = match_partial(g, ANTICIRCUIT)
        if roles is not None:
            return (ANTICIRCUIT.name, roles)
    return None


def member_by_patterns_canon(sub_canons: frozenset[bytes], x: ClassId, g: Digraph) -> bool:
    """Pattern-route membership using a precomputed induced-subdigraph canon set."""
    for name in CATALOG[x.value]:
        pattern = PATTERNS[name]
        if pattern.n <= g.n and pattern.canonical_form() in sub_canons:
            return False
    if x is ClassId.TD and has_two_switch(g):
        return False
    if x is ClassId.FD and has_anticircuit(g):
        return False
    return True


PATTERN_ROUTE_MAX_N = 8


def classify(g: Digraph, classes: Iterable[ClassId] | None = None) -> set[ClassId]:
    """All classes g belongs to; runs both routes and insists they agree when both can run."""
    out = set()
    for x in classes if classes is not None else list(ClassId):
        if x in PATTERN_ONLY_CLASSES:
            verdict = member_by_patterns(g, x)
        else:
            verdict = member_constructive(g, x)
            if g.n <= PATTERN_ROUTE_MAX_N:
                by_patterns = member_by_patterns(g, x)
                if by_patterns != verdict:
                    raise RouteDisagreement(x, g, verdict, by_patterns)
        if verdict:
            out.add(x)
    return out


# -- literal-grammar oracle ---------------------------------------------------

# side kinds: "G" class member, "dot" single vertex, "I" edgeless,
# "K" bidirectional complete, "T" transitive tournament
_ORACLE_SPEC: dict[ClassId, dict[str, object]] = {
    ClassId.DC: {"base": "dot", "union": ("G", "G"), "order": [("G", "G")], "series": ("G", "G")},
    ClassId.OC: {"base": "dot", "union": ("G", "G"), "order": [("G", "G")], "series": None},
    ClassId.DTP: {"base": "dot", "union": ("G", "G"), "order": [("G", "dot"), ("dot", "G")], "series": ("G", "dot")},
    ClassId.OTP: {"base": "dot", "union": ("G", "G"), "order": [("G", "dot"), ("dot", "G")], "series": None},
    ClassId.DCTP: {"base": "dot", "union": ("G", "dot"), "order": [("G", "dot"), ("dot", "G")], "series": ("G", "G")},
    ClassId.OCTP: {"base": "dot", "union": ("G", "dot"), "order": [("G", "dot"), ("dot", "G")], "series": None},
    ClassId.DT: {"base": "dot", "union": ("G", "dot"), "order": [("G", "dot"), ("dot", "G")], "series": ("G", "dot")},
    ClassId.OT: {"base": "dot", "union": ("G", "dot"), "order": [("G", "dot"), ("dot", "G")], "series": None},
    ClassId.DWQT: {"base": "I", "union": ("G", "G"), "order": [("G", "I"), ("I", "G")], "series": ("G", "I")},
    ClassId.OWQT: {"base": "I", "union": ("G", "G"), "order": [("G", "I"), ("I", "G")], "series": None},
    ClassId.DCWQT: {"base": "K", "union": ("G", "K"), "order": [("G", "K"), ("K", "G")], "series": ("G", "G")},
    ClassId.OCWQT: {"base": "T", "union": ("G", "T"), "order": [("G", "T"), ("T", "G")], "series": None},
    ClassId.DSC: {"base": "dot", "union": ("G", "I"), "order": [("G", "I"), ("I", "G")], "series": ("G", "I")},
    ClassId.OSC: {"base": "dot", "union": ("G", "I"), "order": [("G", "I"), ("I", "G")], "series": None},
    ClassId.DCSC: {"base": "dot", "union": ("G", "K"), "order": [("G", "K"), ("K", "G")], "series": ("G", "K")},
    ClassId.OCSC: {"base": "dot", "union": ("G", "T"), "order": [("G", "T"), ("T", "G")], "series": None},
}

_ORACLE_CACHE: dict[ClassId, list[dict[bytes, Digraph]]] = {}

_SIDE_BUILDERS: dict[str, Callable[[int], Digraph]] = {
    "I": edgeless,
    "K": bidirectional_complete,
    "T": transitive_tournament,
}


def _compose2(op: str, a: Digraph, b: Digraph) -> Digraph:
    n = a.n + b.n
    arcs = list(a.arcs)
    arcs.extend((u + a.n, v + a.n) for u, v in b.arcs)
    if op != "union":
        for u in range(a.n):
            for v in range(a.n, n):
                arcs.append((u, v))
                if op == "series":
                    arcs.append((v, u))
    return Digraph(n, arcs)


def _side_digraphs(kind: str, size: int, levels: list[dict[bytes, Digraph]]) -> list[Digraph]:
    if kind == "G":
        return list(levels[size - 1].values())
    if kind == "dot":
        return [Digraph(1)] if size == 1 else []
    return [_SIDE_BUILDERS[kind](size)]


def oracle_members(x: ClassId, n: int) -> frozenset[bytes]:
    """Canonical forms of all n-vertex members per the literal class definition."""
    return frozenset(oracle_level(x, n))


def oracle_level(x: ClassId, n: int) -> dict[bytes, Digraph]:
    """Canonical form -> representative for all n-vertex members (n <= 5)."""
    if x not in _ORACLE_SPEC:
        raise ValueError(f"{x.value} has no grammar oracle")
    if not 1 <= n <= 5:
        raise ValueError(f"oracle supports 1..5 vertices, got {n}")
    levels = _ORACLE_CACHE.setdefault(x, [])
    spec = _ORACLE_SPEC[x]
    while len(levels) < n:
        k = len(levels) + 1
        found: dict[bytes, Digraph] = {}

        def add(g: Digraph) -> None:
            key = g.canonical_form()
            if key not in found:
                found[key] = g

        if spec["base"] == "dot":
            if k == 1:
                add(Digraph(1))
        else:
            add(_SIDE_BUILDERS[spec["base"]](k))  # type: ignore[index]
        for op in ("union", "order", "series"):
            op_spec = spec[op]
            if op_spec is None:
                continue
            # union/series are commutative up to isomorphism, so one side order suffices
            shapes = op_spec if op == "order" else [op_spec]
            for left_kind, right_kind in shapes:  # type: ignore[union-attr]
                for a_size in range(1, k):
                    b_size = k - a_size
                    for a in _side_digraphs(left_kind, a_size, levels):
                        for b in _side_digraphs(right_kind, b_size, levels):
                            add(_compose2(op, a, b))
        levels.append(found)
    return dict(levels[n - 1])
