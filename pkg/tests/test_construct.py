"""Expression language: normal form, parsing, evaluation, named families."""

from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dcograph.construct import (
    Expression,
    ExpressionError,
    evaluate,
    format_expression,
    generate_family,
    leaf,
    order,
    parse_expression,
    series,
    transitive_tournament,
    union,
)
from dcograph.core import Digraph

expressions = st.recursive(
    st.just(leaf()),
    lambda children: st.builds(
        lambda kind, cs: {"union": union, "order": order, "series": series}[kind](*cs),
        st.sampled_from(["union", "order", "series"]),
        st.lists(children, min_size=2, max_size=3),
    ),
    max_leaves=8,
)


@given(expressions)
def test_format_parse_round_trip(e: Expression) -> None:
    assert parse_expression(format_expression(e)) == e


@given(expressions)
def test_evaluate_leaf_count_is_vertex_count(e: Expression) -> None:
    assert evaluate(e).n == e.leaf_count


def test_same_kind_children_are_flattened() -> None:
    assert union(union(leaf(), leaf()), leaf()) == union(leaf(), leaf(), leaf())
    assert order(order(leaf(), leaf()), leaf()) == order(leaf(), leaf(), leaf())


def test_unordered_operators_sort_children() -> None:
    a = union(order(leaf(), leaf()), leaf())
    b = union(leaf(), order(leaf(), leaf()))
    assert a == b
    assert format_expression(a) == format_expression(b)
    # order is a sequence, so swapping children changes the digraph
    assert order(union(leaf(), leaf()), leaf()) != order(leaf(), union(leaf(), leaf()))


def test_operator_arc_semantics() -> None:
    assert evaluate(union(leaf(), leaf())) == Digraph(2)
    assert evaluate(order(leaf(), leaf())) == Digraph(2, [(0, 1)])
    assert evaluate(series(leaf(), leaf())) == Digraph(2, [(0, 1), (1, 0)])
    assert evaluate(parse_expression("order(v, v, v)")) == transitive_tournament(3)


def test_evaluate_cross_arcs_by_block() -> None:
    g = evaluate(order(union(leaf(), leaf()), leaf()))
    assert g == Digraph(3, [(0, 2), (1, 2)])


@pytest.mark.parametrize(
    "text",
    ["", "w", "union(v)", "union(v,v", "union(v,v))", "order()", "v v", "series(v,)"],
)
def test_parser_rejects_malformed_text(text: str) -> None:
    with pytest.raises(ExpressionError):
        parse_expression(text)


def test_nullary_and_unary_operators_rejected() -> None:
    with pytest.raises(ExpressionError):
        union(leaf())
    with pytest.raises(ExpressionError):
        series()


def test_family_transitive_tournament() -> None:
    g = generate_family("tt", 4)
    assert g.is_tournament() and g.is_acyclic() and g.arc_count == 6


def test_family_edgeless_and_bidir_complete() -> None:
    assert generate_family("edgeless", 3) == Digraph(3)
    k3 = generate_family("bidir-complete", 3)
    assert k3.is_bidirectional_complete() and k3.arc_count == 6


def test_family_path_and_cycle() -> None:
    p4 = generate_family("path", 4)
    assert p4.is_oriented() and p4.arc_count == 3
    c4 = generate_family("cycle", 4)
    assert c4.is_oriented() and c4.arc_count == 4 and not c4.is_acyclic()


def test_family_bipartite_shapes() -> None:
    kb = generate_family("bidir-complete-bipartite", 2, 3)
    assert kb.n == 5 and kb.arc_count == 12 and kb.sym_part() == kb
    ob = generate_family("oriented-complete-bipartite", 2, 3)
    assert ob.n == 5 and ob.arc_count == 6 and ob.is_oriented()


def test_family_parameter_errors() -> None:
    with pytest.raises(ValueError):
        generate_family("nosuch", 3)
    with pytest.raises(ValueError):
        generate_family("tt", 3, 2)
    with pytest.raises(ValueError):
        generate_family("bidir-complete-bipartite", 3)
    with pytest.raises(ValueError):
        generate_family("tt", 0)
