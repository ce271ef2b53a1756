"""Construction of DNA matrices and their structural checks.

The order-(n+1) DNA matrix A_n is the coefficient matrix of the linear
system expressing that a degree-n binary form

    f(x, y) = sum_c a_c x^(n-c+1) y^(c-1),   c = 1..n+1

is invariant under the boost (x, y) -> (alpha x + beta y, beta x + alpha y).
Row r collects the coefficient of x^(n-r+1) y^(r-1); column c multiplies
a_c. All public indices are 1-based.
"""

import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .combinatorics import binom_ext
from .matrix import Matrix
from .poly import ZERO, BiPoly, reduce_mod_hyperbola


def _check_indices(n, i, j):
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if not (1 <= i <= n + 1 and 1 <= j <= n + 1):
        raise ValueError(f"index (i={i}, j={j}) outside [1, {n + 1}] for n={n}")


def entry_closed_form(n, i, j):
    """Entry (i, j) of A_n, summed term by term from the generating formula."""
    _check_indices(n, i, j)
    terms = {}
    for s in range(j):
        c = binom_ext(j - 1, s) * binom_ext(n - j + 1, i - j + s)
        if not c:
            continue
        eb = i - j + 2 * s
        ea = n - eb
        if ea < 0 or eb < 0:
            raise ArithmeticError(f"negative exponent in nonvanishing term at n={n}, i={i}, j={j}, s={s}")
        terms[(ea, eb)] = terms.get((ea, eb), 0) + c
    correction = 0
    for r in range(j):
        correction += (-1) ** (r + 1) * binom_ext(j - r, i) * binom_ext(j, r)
    if correction:
        terms[(0, 0)] = terms.get((0, 0), 0) + correction
    return BiPoly(terms)


def entry_fast(n, i, j):
    """Same value as :func:`entry_closed_form`, skipping vanishing terms.

    The constant sum collapses to -1 on the diagonal and 0 elsewhere, and
    only s in [max(0, j-i), min(j-1, n+1-i)] gives nonzero binomials.
    """
    _check_indices(n, i, j)
    terms = {}
    for s in range(max(0, j - i), min(j - 1, n + 1 - i) + 1):
        eb = i - j + 2 * s
        terms[(n - eb, eb)] = binom_ext(j - 1, s) * binom_ext(n - j + 1, i - j + s)
    if i == j:
        terms[(0, 0)] = terms.get((0, 0), 0) - 1
    return BiPoly(terms)


def build_dna(n, mode="closed_form"):
    """The symbolic DNA matrix A_n of order n+1."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if mode == "closed_form":
        entry = entry_closed_form
    elif mode == "fast":
        entry = entry_fast
    else:
        raise ValueError(f"unknown build mode {mode!r}")
    size = n + 1
    return Matrix([[entry(n, i, j) for j in range(1, size + 1)] for i in range(1, size + 1)])


def build_oracle(n):
    """A_n read off the expanded invariance equation.

    Column c is the expansion of
    (alpha x + beta y)^(n-c+1) (beta x + alpha y)^(c-1) - x^(n-c+1) y^(c-1),
    with both powers expanded by the binomial theorem (no polynomial
    multiplication), and row r picks the coefficient of y^(r-1).
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    size = n + 1
    cols = []
    for c in range(size):
        m, l = n - c, c
        # rows[y_degree] -> {(e_alpha, e_beta): coefficient}
        rows = [dict() for _ in range(size)]
        for u in range(m + 1):
            cu = comb(m, u)
            for w in range(l + 1):
                key = (m - u + w, u + l - w)
                bucket = rows[u + w]
                bucket[key] = bucket.get(key, 0) + cu * comb(l, w)
        bucket = rows[c]
        bucket[(0, 0)] = bucket.get((0, 0), 0) - 1
        cols.append([BiPoly(b) for b in rows])
    return Matrix([[cols[c][r] for c in range(size)] for r in range(size)])


def is_centrosymmetric(m):
    return m.is_centrosymmetric()


def column_sum(m, col):
    total = ZERO
    for x in m.column(col):
        total = total + x
    return total


def binomial_null_vector(n):
    """Generator of the kernel of A_n on the hyperbola, for even n >= 2.

    Odd positions 2k-1 carry (-1)^(k-1) binom(n/2, k-1); even positions are 0.
    These are the coefficients of (x^2 - y^2)^(n/2).
    """
    if n < 2 or n % 2:
        raise ValueError(f"binomial null vector needs even n >= 2, got {n}")
    half = n // 2
    vec = [Fraction(0)] * (n + 1)
    for k in range(1, half + 2):
        vec[2 * k - 2] = Fraction((-1) ** (k - 1) * binom_ext(half, k - 1))
    return tuple(vec)


class DegenerateRotationWarning(UserWarning):
    """The point (1, 0) or (-1, 0): the boost is plus or minus the identity."""


@dataclass(frozen=True)
class HyperbolaPoint:
    alpha: Fraction
    beta: Fraction

    def __post_init__(self):
        a, b = Fraction(self.alpha), Fraction(self.beta)
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "beta", b)
        if a * a - b * b != 1:
            raise ValueError(f"({a}, {b}) does not satisfy alpha^2 - beta^2 = 1")

    @property
    def degenerate(self):
        return self.beta == 0


def hyperbola_point(t):
    """Rational point ((t^2+1)/(2t), (t^2-1)/(2t)), i.e. cosh and sinh of ln t."""
    t = Fraction(t)
    if t == 0:
        raise ValueError("t must be nonzero")
    if t in (1, -1):
        warnings.warn(f"t={t} gives beta=0 (identity rotation)", DegenerateRotationWarning, stacklevel=2)
    return HyperbolaPoint((t * t + 1) / (2 * t), (t * t - 1) / (2 * t))


def eval_matrix(m, alpha, beta=None):
    """Evaluate a polynomial matrix at a HyperbolaPoint or an (alpha, beta) pair."""
    if beta is None:
        alpha, beta = alpha.alpha, alpha.beta
    alpha, beta = Fraction(alpha), Fraction(beta)
    return m.map(lambda f: f.evaluate(alpha, beta))


def null_product(n):
    """A_n times the binomial null vector, as unreduced polynomials."""
    vec = [int(x) for x in binomial_null_vector(n)]
    return build_dna(n).apply(vec)


def symbolic_null_check(n):
    """A_n times the binomial null vector, reduced modulo beta^2 = alpha^2 - 1.

    Every component is zero; the unreduced product is not.
    """
    return tuple(reduce_mod_hyperbola(f) for f in null_product(n))


def invariant_form(n):
    """Text form of the invariant binary form for even degree n."""
    k = n // 2
    return "a(x^2-y^2)" if k == 1 else f"a(x^2-y^2)^{k}"

