"""Build digraphs from expressions and ask every recognizer about them."""

from __future__ import annotations

from dcograph.construct import evaluate, format_expression, parse_expression
from dcograph.core import format_edge_list
from dcograph.recognize import ClassId, classify, constructive_certificate

SAMPLES = [
    "order(v, v, v)",
    "union(series(v, v), order(v, v))",
    "series(union(v, v), v)",
    "order(union(v, v), union(v, v))",
]


def main() -> None:
    for text in SAMPLES:
        g = evaluate(parse_expression(text))
        members = sorted(x.value for x in classify(g))
        print(f"{text}")
        print(f"  vertices={g.n} arcs={g.arc_count}")
        print(f"  member of: {', '.join(members)}")
        cert = constructive_certificate(g, ClassId.DT)
        if cert is not None:
            print(f"  threshold construction: {format_expression(cert)}")
        print(format_edge_list(g), end="")
        print()


if __name__ == "__main__":
    main()
