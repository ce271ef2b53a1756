"""Sparse bivariate polynomials in (alpha, beta) with integer coefficients.

Text form uses ``a`` for alpha and ``b`` for beta, e.g. ``2*a^2*b + b^3``.
Terms are ordered by total degree (highest first) and then by the alpha
exponent (highest first).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from types import MappingProxyType


def _term_key(exps):
    ea, eb = exps
    return (-(ea + eb), -ea)


class BiPoly:
    """Immutable polynomial stored as ``{(e_alpha, e_beta): coefficient}``.

    Zero coefficients are never stored, so two polynomials are equal exactly
    when their term maps are equal.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for (ea, eb), c in dict(terms).items():
                ea, eb, c = int(ea), int(eb), int(c)
                if ea < 0 or eb < 0:
                    raise ValueError(f"negative exponent in term ({ea}, {eb})")
                if c:
                    clean[(ea, eb)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, terms):
        # caller guarantees a fresh dict with no zero coefficients
        if __debug__:
            assert all(c != 0 for c in terms.values()), "zero coefficient stored"
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c):
        return cls._wrap({(0, 0): int(c)} if c else {})

    @classmethod
    def monomial(cls, ea, eb, c=1):
        return cls({(ea, eb): c})

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def coefficient(self, ea, eb):
        return self._terms.get((ea, eb), 0)

    def sorted_terms(self):
        return sorted(self._terms.items(), key=lambda kv: _term_key(kv[0]))

    def total_degree(self):
        """Highest total degree; -1 for the zero polynomial."""
        return max((ea + eb for ea, eb in self._terms), default=-1)

    def is_homogeneous(self, degree=None):
        degrees = {ea + eb for ea, eb in self._terms}
        if degree is None:
            return len(degrees) <= 1
        return degrees <= {degree}

    # ring operations

    def __add__(self, other):
        if isinstance(other, int):
            other = BiPoly.const(other)
        elif not isinstance(other, BiPoly):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return BiPoly._wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly._wrap({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = BiPoly.const(other)
        elif not isinstance(other, BiPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = int(c)
        if c == 0:
            return BiPoly._wrap({})
        return BiPoly._wrap({k: c * v for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        out = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                k = (a1 + a2, b1 + b2)
                out[k] = out.get(k, 0) + c1 * c2
        return BiPoly._wrap({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def evaluate(self, alpha, beta):
        """Exact value at the rational point (alpha, beta)."""
        alpha, beta = Fraction(alpha), Fraction(beta)
        total = Fraction(0)
        for (ea, eb), c in self._terms.items():
            total += c * alpha**ea * beta**eb
        return total

    # comparison and hashing

    def __eq__(self, other):
        if isinstance(other, int):
            other = BiPoly.const(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # text forms

    def format(self, unicode=False, latex=False):
        if not self._terms:
            return "0"
        if latex:
            syms = ("\\alpha", "\\beta") if unicode else ("a", "b")
        else:
            syms = ("α", "β") if unicode else ("a", "b")
        parts = []
        for (ea, eb), c in self.sorted_terms():
            factors = []
            for sym, e in zip(syms, (ea, eb)):
                if e == 1:
                    factors.append(sym)
                elif e > 1:
                    factors.append(f"{sym}^{{{e}}}" if latex else f"{sym}^{e}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif latex:
                sep = " " if unicode else ""
                body = sep.join(([str(mag)] if mag != 1 else []) + factors)
            else:
                body = "*".join(([str(mag)] if mag != 1 else []) + factors)
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(parts)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"BiPoly({self.format()!r})"

    @classmethod
    def parse(cls, text):
        """Parse the canonical text form (``*`` between factors is optional)."""
        return _parse_bipoly(text)


ZERO = BiPoly._wrap({})
ONE = BiPoly._wrap({(0, 0): 1})
ALPHA = BiPoly._wrap({(1, 0): 1})
BETA = BiPoly._wrap({(0, 1): 1})


_FACTOR_RE = re.compile(r"(a|b|α|β)(?:\^(\d+))?")
_COEF_RE = re.compile(r"(\d+)")


def _parse_term(body, text):
    body = body.replace("*", " ").strip()
    pos = 0
    coef = 1
    m = _COEF_RE.match(body)
    if m:
        coef = int(m.group(1))
        pos = m.end()
    ea = eb = 0
    while pos < len(body):
        if body[pos] == " ":
            pos += 1
            continue
        m = _FACTOR_RE.match(body, pos)
        if m is None:
            raise ValueError(f"cannot parse polynomial {text!r}")
        e = int(m.group(2)) if m.group(2) is not None else 1
        if m.group(1) in ("a", "α"):
            ea += e
        else:
            eb += e
        pos = m.end()
    return (ea, eb), coef


def _parse_bipoly(text):
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial text")
    # split into signed chunks on + and - that separate terms
    chunks = re.findall(r"([+-]?)\s*([^+-]+)", s)
    if "".join(sign + body for sign, body in chunks).replace(" ", "") != s.replace(" ", ""):
        raise ValueError(f"cannot parse polynomial {text!r}")
    terms = {}
    for sign, body in chunks:
        if not body.strip():
            raise ValueError(f"cannot parse polynomial {text!r}")
        k, c = _parse_term(body, text)
        if sign == "-":
            c = -c
        terms[k] = terms.get(k, 0) + c
    return BiPoly(terms)


def poly_add(f, g):
    return f + g


def poly_mul(f, g):
    return f * g


def poly_scale(f, c):
    return f.scale(c)


def poly_eval(f, alpha, beta):
    return f.evaluate(alpha, beta)


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _upoly_str(coeffs):
    if not coeffs:
        return "0"
    return BiPoly({(e, 0): c for e, c in enumerate(coeffs)}).format()


@dataclass(frozen=True)
class HyperbolaReduced:
    """Normal form ``p(alpha) + beta*q(alpha)`` modulo ``beta^2 = alpha^2 - 1``.

    ``p`` and ``q`` are dense coefficient tuples indexed by the alpha power,
    with trailing zeros stripped.
    """

    p: tuple = ()
    q: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "p", _trim(self.p))
        object.__setattr__(self, "q", _trim(self.q))

    def is_zero(self):
        return not self.p and not self.q

    def to_bipoly(self):
        terms = {(e, 0): c for e, c in enumerate(self.p) if c}
        terms.update({(e, 1): c for e, c in enumerate(self.q) if c})
        return BiPoly(terms)

    def evaluate(self, alpha, beta):
        return self.to_bipoly().evaluate(alpha, beta)

    def __str__(self):
        if self.is_zero():
            return "0"
        if not self.q:
            return _upoly_str(self.p)
        q = f"b*({_upoly_str(self.q)})"
        return q if not self.p else f"{_upoly_str(self.p)} + {q}"


def reduce_mod_hyperbola(f):
    """Rewrite every ``beta^(2k+r)`` as ``(alpha^2 - 1)^k * beta^r``."""
    p, q = {}, {}
    for (ea, eb), c in f.terms.items():
        k, r = divmod(eb, 2)
        target = q if r else p
        # (alpha^2 - 1)^k = sum_m C(k, m) alpha^(2m) (-1)^(k-m)
        for m in range(k + 1):
            coef = c * comb(k, m) * (-1 if (k - m) & 1 else 1)
            e = ea + 2 * m
            target[e] = target.get(e, 0) + coef

    def dense(d):
        if not d:
            return ()
        out = [0] * (max(d) + 1)
        for e, c in d.items():
            out[e] = c
        return tuple(out)

    return HyperbolaReduced(dense(p), dense(q))
