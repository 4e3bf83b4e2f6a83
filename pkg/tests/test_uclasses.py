"""Undirected companion classes: catalogs, co-closure, hierarchy figure."""

from __future__ import annotations

import pytest

from dcograph.mine import verify_hierarchy
from dcograph.recognize import ClassId, member_constructive
from dcograph.uclasses import (
    FORB_U,
    UPATTERNS,
    UClassId,
    contains_induced_u,
    enumerate_undirected,
    member_u,
)


def test_enumeration_counts() -> None:
    assert [len(enumerate_undirected(n)) for n in range(1, 7)] == [1, 2, 4, 11, 34, 156]


def test_upatterns_minimality() -> None:
    for x, names in FORB_U.items():
        for name in names:
            p = UPATTERNS[name]
            assert not member_u(p, x), (x, name)
            for v in range(p.n):
                rest = [u for u in range(p.n) if u != v]
                assert member_u(p.induced(rest), x), (x, name, v)


@pytest.mark.parametrize(
    ("u_id", "d_id"),
    [(UClassId.C, ClassId.DC), (UClassId.T, ClassId.DT), (UClassId.TP, ClassId.DTP)],
)
def test_symmetric_encoding_matches_directed_class(u_id, d_id) -> None:
    # a symmetric digraph lies in the directed class exactly when the
    # undirected graph it encodes lies in the companion class
    for n in range(1, 6):
        for u in enumerate_undirected(n):
            assert member_u(u, u_id) == member_constructive(u.to_digraph(), d_id)


@pytest.mark.parametrize(
    ("a", "b"),
    [
        (UClassId.C, UClassId.C),
        (UClassId.T, UClassId.T),
        (UClassId.TP, UClassId.CTP),
        (UClassId.SC, UClassId.CSC),
        (UClassId.WQT, UClassId.CWQT),
    ],
)
def test_complement_pairs(a, b) -> None:
    for n in range(1, 6):
        for u in enumerate_undirected(n):
            assert member_u(u, a) == member_u(u.complement(), b)


def test_pattern_containment_spot_checks() -> None:
    p4 = UPATTERNS["P4"]
    assert contains_induced_u(p4, UPATTERNS["P3"])
    assert not contains_induced_u(p4, UPATTERNS["K3"])
    assert member_u(UPATTERNS["K3"], UClassId.C)
    assert not member_u(p4, UClassId.C)


def test_micro_classes_spot_checks() -> None:
    assert member_u(UPATTERNS["I3"], UClassId.EDGELESS)
    assert member_u(UPATTERNS["K3"], UClassId.COMPLETE)
    assert member_u(UPATTERNS["2K2"], UClassId.TWO_CLIQUES)
    assert member_u(UPATTERNS["C4"], UClassId.COMPLETE_BIPARTITE)
    assert not member_u(UPATTERNS["P3"], UClassId.CLIQUE_UNION)
    assert member_u(UPATTERNS["C4"], UClassId.STABLE_JOIN)


def test_hierarchy_figure_failures_shrink_at_six_vertices() -> None:
    # ten rows lack a separating witness at five vertices; at six only the
    # two genuine inclusions remain (every small-split-class member avoiding
    # P4, 2P3 and C4 also avoids C4-carrying co2P3, so no witness exists)
    five = verify_hierarchy(n_max=5, directed=False)
    assert sorted(r.subject for r in five.rows if r.verdict != "ok") == sorted(
        [
            "SC proper-subset CTP",
            "WQT proper-subset C",
            "CWQT proper-subset C",
            "TP not-below CSC",
            "CSC not-below TP",
            "TP not-below CWQT",
            "CTP not-below WQT",
            "CSC not-below WQT",
            "WQT not-below CWQT",
            "CWQT not-below WQT",
        ]
    )
    six = verify_hierarchy(n_max=6, directed=False)
    assert sorted(r.subject for r in six.rows if r.verdict != "ok") == [
        "CSC not-below TP",
        "CSC not-below WQT",
    ]
