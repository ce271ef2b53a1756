"""Exact rational scalars.

``fractions.Fraction`` already keeps numerator and denominator in lowest
terms with a positive denominator, so it serves as the rational type
throughout the package. This module adds the strict text format used on
the command line and in every serialized document.
"""

import operator
import re
from fractions import Fraction

ExactRational = Fraction

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")

_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def rat_arith(a, b, op):
    """Apply ``op`` (one of add, sub, mul, div) to two rationals.

    Division by zero raises ``ZeroDivisionError``.
    """
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown rational operation {op!r}") from None
    if op == "div" and b == 0:
        raise ZeroDivisionError(f"division of {format_rational(a)} by zero")
    return Fraction(fn(Fraction(a), Fraction(b)))


def format_rational(q):
    """Return ``"num/den"``, or just ``"num"`` when the denominator is 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text):
    """Parse an integer or ``p/q`` string. Decimal and float syntax is rejected."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    m = _RATIONAL_RE.match(str(text))
    if m is None:
        raise ValueError(f"not an exact rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(num, den)
