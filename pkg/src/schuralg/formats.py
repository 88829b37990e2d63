"""Text, JSON and DOT serialization shared by the CLI.

Literals:
    matrix      "2,0,0;1,0,2;0,0,0"     rows split by ';', entries by ','
    partition   "3,1"
    word        "1,1,2,2,2"

Rationals serialize as strings "p/q" in lowest terms ("p" for integers) so
JSON consumers never lose precision.  Canonical JSON (sorted keys, fixed
separators) makes parse + re-serialize byte-identical.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .basis import MultiIndex, Matrix, SchurElement, check_matrix
from .multiplication import EulerClass
from .partitions import Partition, check_partition


def parse_matrix(text: str) -> Matrix:
    try:
        rows = tuple(
            tuple(int(cell) for cell in row.split(",")) for row in text.split(";")
        )
    except ValueError as exc:
        raise ValueError(f"malformed matrix literal {text!r}: {exc}") from None
    check_matrix(rows)
    return rows


def format_matrix(entries: Matrix) -> str:
    return ";".join(",".join(str(v) for v in row) for row in entries)


def parse_partition(text: str) -> Partition:
    if text.strip() in ("", "0", "[]"):
        return ()
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError as exc:
        raise ValueError(f"malformed partition literal {text!r}: {exc}") from None
    return check_partition(parts)


def format_partition(shape: Partition) -> str:
    return "[" + ",".join(str(p) for p in shape) + "]"


def parse_word(text: str) -> MultiIndex:
    try:
        return tuple(int(v) for v in text.split(","))
    except ValueError as exc:
        raise ValueError(f"malformed word literal {text!r}: {exc}") from None


def format_scalar(value: Fraction | int) -> str:
    return str(Fraction(value))


def format_element(x: SchurElement) -> str:
    """Human-readable expansion, e.g. ``6*[4,0;0,0] + 2*[2,1;1,0]``."""
    if x.is_zero():
        return "0"
    parts = []
    for D, coeff in x.sorted_terms():
        lit = f"[{format_matrix(D)}]"
        parts.append(lit if coeff == 1 else f"{format_scalar(coeff)}*{lit}")
    return " + ".join(parts)


def element_to_json(x: SchurElement) -> dict:
    return {
        "n": x.n,
        "d": x.d,
        "terms": [
            {"matrix": [list(row) for row in D], "coeff": format_scalar(c)}
            for D, c in x.sorted_terms()
        ],
    }


def canonical_json(payload) -> str:
    """Deterministic JSON: sorted keys, fixed separators, no trailing spaces."""
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def matrix_to_dot(entries: Matrix, name: str = "bipartite") -> str:
    """DOT rendering of the bipartite multigraph of an index matrix.

    First row = sources, second row = destinations; entry (i, j) emits that
    many parallel edges source j -- destination i.  Vertices and parallel
    edges are sorted so output is reproducible.
    """
    n, _ = check_matrix(entries)
    lines = [f"graph {name} {{", "  rankdir=TB;"]
    lines.append(
        "  { rank=source; "
        + " ".join(f's{j} [label="{j}" shape=circle];' for j in range(1, n + 1))
        + " }"
    )
    lines.append(
        "  { rank=sink; "
        + " ".join(f'd{i} [label="{i}" shape=circle];' for i in range(1, n + 1))
        + " }"
    )
    for j in range(1, n + 1):
        for i in range(1, n + 1):
            lines.extend([f"  s{j} -- d{i};"] * entries[i - 1][j - 1])
    lines.append("}")
    return "\n".join(lines)


def euler_class_to_dot(cls: EulerClass, name: str = "matching") -> str:
    """DOT rendering of a matching class as its composite two-step paths.

    One edge per nonzero tensor entry, from source j to destination k,
    labeled with the middle vertex and the path count.
    """
    n = len(cls.tensor)
    lines = [f"graph {name} {{", "  rankdir=TB;"]
    lines.append(
        "  { rank=source; "
        + " ".join(f's{j} [label="{j}" shape=circle];' for j in range(1, n + 1))
        + " }"
    )
    lines.append(
        "  { rank=sink; "
        + " ".join(f'd{k} [label="{k}" shape=circle];' for k in range(1, n + 1))
        + " }"
    )
    for j in range(1, n + 1):
        for k in range(1, n + 1):
            for mid in range(1, n + 1):
                count = cls.tensor[k - 1][mid - 1][j - 1]
                if count:
                    lines.append(f'  s{j} -- d{k} [label="via {mid} x{count}"];')
    lines.append("}")
    return "\n".join(lines)
