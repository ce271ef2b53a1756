"""Serialization of matrices, vectors and reports.

No floats appear in any output. Rational values are ``"num/den"`` strings,
polynomials use their canonical text form.
"""

import csv
import io
import json
from fractions import Fraction

from .matrix import Matrix
from .poly import BiPoly
from .rational import format_rational, parse_rational

FORMATS = ("text", "json", "csv", "latex")


def cell_text(x, unicode=False, latex=False):
    if isinstance(x, BiPoly):
        return x.format(unicode=unicode, latex=latex)
    q = Fraction(x)
    if latex and q.denominator != 1:
        sign = "-" if q < 0 else ""
        return f"{sign}\\frac{{{abs(q.numerator)}}}{{{q.denominator}}}"
    return format_rational(q)


def is_symbolic(m):
    return isinstance(m.rows[0][0], BiPoly)


def point_json(point):
    if point is None:
        return None
    alpha, beta = point
    return {"alpha": format_rational(alpha), "beta": format_rational(beta)}


def matrix_to_json(m, point=None):
    """The JSON document for a matrix, as a plain dict."""
    return {
        "order": m.order,
        "entries": [[cell_text(x) for x in r] for r in m.rows],
        "point": point_json(point),
        "symbolic": is_symbolic(m),
    }


def matrix_from_json(doc):
    """Inverse of :func:`matrix_to_json`. Accepts a dict or a JSON string."""
    if isinstance(doc, str):
        doc = json.loads(doc)
    parse = BiPoly.parse if doc["symbolic"] else parse_rational
    m = Matrix([[parse(x) for x in r] for r in doc["entries"]])
    if m.order != doc["order"]:
        raise ValueError(f"order {doc['order']} does not match {m.order} rows")
    point = doc.get("point")
    if point is not None:
        point = (parse_rational(point["alpha"]), parse_rational(point["beta"]))
    return m, point


def vector_text(v, latex=False):
    if v is None:
        return "-"
    return "(" + ", ".join(cell_text(x, latex=latex) for x in v) + ")"


def vector_json(v):
    return None if v is None else [format_rational(x) for x in v]


def dumps(obj):
    return json.dumps(obj, indent=2)


def matrix_text(m, unicode=False):
    cells = [[cell_text(x, unicode=unicode) for x in r] for r in m.rows]
    widths = [max(len(r[j]) for r in cells) for j in range(m.order)]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells)


def matrix_csv(m, unicode=False):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    for r in m.rows:
        w.writerow([cell_text(x, unicode=unicode) for x in r])
    return buf.getvalue().rstrip("\n")


def matrix_latex(m, unicode=False):
    body = " \\\\\n".join(
        "  " + " & ".join(cell_text(x, unicode=unicode, latex=True) for x in r) for r in m.rows
    )
    return "\\begin{pmatrix}\n" + body + "\n\\end{pmatrix}"


def render_matrix(m, fmt, point=None, unicode=False):
    if fmt == "json":
        return dumps(matrix_to_json(m, point))
    if fmt == "csv":
        return matrix_csv(m, unicode)
    if fmt == "latex":
        return matrix_latex(m, unicode)
    return matrix_text(m, unicode)


def table_rows_csv(header, rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")
