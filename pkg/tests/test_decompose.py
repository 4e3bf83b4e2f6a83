"""Decomposition: maximal splits, expression trees, creation sequences."""

from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dcograph.construct import evaluate, leaf, order, parse_expression, series, union
from dcograph.core import Digraph, _full_offdiag
from dcograph.decompose import (
    creation_sequence,
    creation_sequence_raw,
    di_co_tree,
    maximal_split,
    replay,
    replay_arcs,
)
from dcograph.patterns import PATTERNS
from dcograph.recognize import ClassId, member_constructive


def test_split_identifies_each_operation() -> None:
    assert maximal_split(evaluate(union(leaf(), series(leaf(), leaf())))).op == "union"
    assert maximal_split(evaluate(series(leaf(), leaf(), leaf()))).op == "series"
    split = maximal_split(evaluate(order(union(leaf(), leaf()), leaf())))
    assert split.op == "order"
    assert split.parts == ((0, 1), (2,))


def test_split_parts_are_maximal() -> None:
    g = evaluate(parse_expression("union(v, v, series(v, v))"))
    split = maximal_split(g)
    assert split.op == "union"
    assert sorted(len(p) for p in split.parts) == [1, 1, 2]


def test_prime_digraphs_report_prime() -> None:
    # minimal obstructions of the largest class cannot split: a split with
    # hereditary-member parts would rebuild a member
    for name in ("D1", "D5", "D8"):
        assert maximal_split(PATTERNS[name]).op == "prime", name
    # obstructions of smaller classes may still split
    assert maximal_split(PATTERNS["Q7"]).op == "order"
    assert maximal_split(PATTERNS["Q3"]).op == "series"
    assert maximal_split(PATTERNS["D21"]).op == "union"


def test_split_requires_two_vertices() -> None:
    with pytest.raises(ValueError):
        maximal_split(Digraph(1))


def test_order_split_respects_arc_direction() -> None:
    g = Digraph(3, [(2, 0), (2, 1), (0, 1)])
    split = maximal_split(g)
    assert split.op == "order"
    assert split.parts == ((2,), (0,), (1,))


def test_di_co_tree_round_trip_on_small_members(reps_small) -> None:
    for g in reps_small:
        tree = di_co_tree(g)
        if member_constructive(g, ClassId.DC):
            assert tree is not None
            assert evaluate(tree).isomorphic_to(g)
        else:
            assert tree is None


def test_creation_sequence_matches_threshold_membership(reps_small) -> None:
    for g in reps_small:
        seq = creation_sequence(g)
        assert (seq is not None) == member_constructive(g, ClassId.DT)
        if seq is not None:
            assert replay(seq.digits).isomorphic_to(g)
            assert sorted(seq.order) == list(range(g.n))
        oriented = creation_sequence(g, allow_series=False)
        assert (oriented is not None) == member_constructive(g, ClassId.OT)
        if oriented is not None:
            assert "3" not in oriented.digits


def test_replay_digit_semantics() -> None:
    assert replay("1") == Digraph(1)
    assert replay("10") == Digraph(2)
    assert replay("11") == Digraph(2, [(1, 0)])
    assert replay("12") == Digraph(2, [(0, 1)])
    assert replay("13") == Digraph(2, [(0, 1), (1, 0)])
    assert replay_arcs("113") == [(1, 0), (2, 0), (0, 2), (2, 1), (1, 2)]


def test_replay_rejects_bad_strings() -> None:
    with pytest.raises(ValueError):
        replay("")
    with pytest.raises(ValueError):
        replay("01")  # the opening vertex is written as digit 1
    with pytest.raises(ValueError):
        replay("14")


@given(st.integers(min_value=1, max_value=6), st.data())
def test_raw_recognizer_agrees_with_object_form(n: int, data) -> None:
    mask = data.draw(st.integers(min_value=0, max_value=(1 << (n * n)) - 1))
    g = Digraph.from_mask(n, mask & _full_offdiag(n))
    seq = creation_sequence(g)
    raw = creation_sequence_raw(g.n, g.arcs)
    assert (seq is None) == (raw is None)
    if seq is not None and raw is not None:
        assert seq.digits == raw.digits and seq.order == raw.order
