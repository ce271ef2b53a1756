"""Determinant and null-vector table of A_1 ... A_N at one hyperbola point."""

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .dna import binomial_null_vector, build_dna, eval_matrix, hyperbola_point, invariant_form
from .formats import cell_text, table_rows_csv, vector_json, vector_text
from .linalg import det_bareiss, kernel, normalize_vector
from .rational import format_rational


@dataclass
class TableRow:
    degree: int
    determinant: Fraction
    null_vector: tuple = None
    invariant_form: str = None
    matches_binomial: bool = None


@dataclass
class DegreeTableReport:
    alpha: Fraction
    beta: Fraction
    rows: list = field(default_factory=list)


def build_table(max_degree, t):
    """Rows for degrees 1..max_degree at the point parametrized by t."""
    if max_degree < 1:
        raise ValueError("max_degree must be >= 1")
    t = Fraction(t)
    if t in (0, 1, -1):
        raise ValueError(f"t={t} is degenerate (need t != 0, +1, -1)")
    pt = hyperbola_point(t)
    report = DegreeTableReport(pt.alpha, pt.beta)
    for n in range(1, max_degree + 1):
        m = eval_matrix(build_dna(n), pt)
        row = TableRow(n, det_bareiss(m))
        if row.determinant == 0:
            ker = kernel(m)
            row.null_vector = ker.vectors[0]
            if n % 2 == 0:
                row.invariant_form = invariant_form(n)
                row.matches_binomial = ker.dimension == 1 and row.null_vector == normalize_vector(
                    binomial_null_vector(n)
                )
        report.rows.append(row)
    return report


HEADER = ("degree", "matrix", "determinant", "null_vector", "invariant_polynomial")


def render_table(report, fmt):
    if fmt == "json":
        return json.dumps(
            {
                "point": {"alpha": format_rational(report.alpha), "beta": format_rational(report.beta)},
                "rows": [
                    {
                        "degree": r.degree,
                        "determinant": format_rational(r.determinant),
                        "null_vector": vector_json(r.null_vector),
                        "invariant_form": r.invariant_form,
                        "matches_binomial": r.matches_binomial,
                    }
                    for r in report.rows
                ],
            },
            indent=2,
        )
    cells = [
        (
            str(r.degree),
            f"A_{r.degree}",
            format_rational(r.determinant),
            vector_text(r.null_vector) if r.null_vector else "-",
            r.invariant_form or "-",
        )
        for r in report.rows
    ]
    if fmt == "csv":
        return table_rows_csv(HEADER, cells)
    if fmt == "latex":
        lines = [
            "\\begin{tabular}{c|c|c|c|c}",
            "\\hline",
            "Degree & Matrix & Determinant & Null vector & Invariant polynomial \\\\",
            "\\hline",
        ]
        for r in report.rows:
            inv = "-"
            if r.invariant_form is not None:
                k = r.degree // 2
                inv = "$a(x^2-y^2)$" if k == 1 else f"$a(x^2-y^2)^{{{k}}}$"
            vec = "-" if r.null_vector is None else vector_text(r.null_vector)
            lines.append(
                f"{r.degree} & $A_{{{r.degree}}}$ & ${cell_text(r.determinant, latex=True)}$ & {vec} & {inv} \\\\"
            )
        lines += ["\\hline", "\\end{tabular}"]
        return "\n".join(lines)
    widths = [max(len(h), *(len(c[k]) for c in cells)) for k, h in enumerate(HEADER)]
    out = ["  ".join(h.ljust(w) for h, w in zip(HEADER, widths))]
    out += ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells]
    return "\n".join(out)
