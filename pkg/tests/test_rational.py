from fractions import Fraction

import pytest

from dnamatrix.rational import format_rational, parse_rational, rat_arith


def test_hyperbola_identity_at_t2():
    a, b = Fraction(5, 4), Fraction(3, 4)
    assert rat_arith(rat_arith(a, a, "mul"), rat_arith(b, b, "mul"), "sub") == 1


def test_reduction_and_sign():
    assert rat_arith(Fraction(1, 3), Fraction(1, 6), "add") == Fraction(1, 2)
    assert rat_arith(Fraction(7, 2), Fraction(-7, 2), "div") == -1


def test_division_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        rat_arith(Fraction(1), Fraction(0), "div")


def test_unknown_op():
    with pytest.raises(ValueError):
        rat_arith(1, 2, "pow")


@pytest.mark.parametrize(
    "q, text",
    [(Fraction(-1, 2), "-1/2"), (Fraction(3), "3"), (Fraction(0), "0"), (Fraction(6, 4), "3/2")],
)
def test_format_roundtrip(q, text):
    assert format_rational(q) == text
    assert parse_rational(text) == q


def test_canonical_form():
    q = parse_rational("-6/4")
    assert (q.numerator, q.denominator) == (-3, 2)
    assert parse_rational("0/7").denominator == 1


@pytest.mark.parametrize("bad", ["0.5", "1e3", "a/b", "1/", "", "1/0"])
def test_parse_rejects_inexact(bad):
    with pytest.raises((ValueError, ZeroDivisionError)):
        parse_rational(bad)
