"""Decompose a digraph into its expression tree and replay its creation sequence."""

from __future__ import annotations

from dcograph.construct import evaluate, format_expression, parse_expression
from dcograph.decompose import creation_sequence, di_co_tree, maximal_split, replay
from dcograph.patterns import PATTERNS


def main() -> None:
    g = evaluate(parse_expression("order(v, union(v, series(v, v)), v)"))
    split = maximal_split(g)
    print(f"top-level operation: {split.op}")
    print(f"parts: {split.parts}")

    tree = di_co_tree(g)
    assert tree is not None
    print(f"recovered expression: {format_expression(tree)}")
    assert evaluate(tree).isomorphic_to(g)

    seq = creation_sequence(g)
    if seq is None:
        print("no creation sequence: some step has no dominating or isolated vertex")
    else:
        print(f"creation digits: {seq.digits} (peel order {seq.order})")
        assert replay(seq.digits).isomorphic_to(g)
        print("replaying the digits rebuilds the digraph up to isomorphism")

    prime = PATTERNS["D8"]
    print(f"\nD8 on {prime.n} vertices: {maximal_split(prime).op}")
    print(f"di-co-tree: {di_co_tree(prime)}")


if __name__ == "__main__":
    main()
