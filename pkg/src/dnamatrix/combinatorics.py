"""Extended binomial coefficients and the two summation identities behind
the DNA entry formula.

``binom_ext(p, q)`` is zero whenever ``q < 0`` or ``q > p``. Negative upper
indices never occur in the entry formula and are rejected.

``p_stifel_rhs`` and ``alt_sum`` are computed by literal summation so the
identities they are expected to satisfy stay falsifiable.
"""

import threading
from math import comb

PASCAL_CAP = 256

_rows = []
_lock = threading.Lock()


def _pascal_row(p):
    if p >= PASCAL_CAP:
        return None
    if p >= len(_rows):
        with _lock:
            while len(_rows) <= p:
                if not _rows:
                    _rows.append((1,))
                else:
                    prev = _rows[-1]
                    _rows.append((1,) + tuple(x + y for x, y in zip(prev, prev[1:])) + (1,))
    return _rows[p]


def binom_ext(p, q):
    """Binomial coefficient with ``binom(p, q) = 0`` for ``q < 0`` or ``q > p``."""
    if p < 0:
        raise ValueError(f"negative upper index p={p} is outside the binomial convention")
    if q < 0 or q > p:
        return 0
    row = _pascal_row(p)
    if row is None:
        return comb(p, q)
    return row[q]


def p_stifel_rhs(n, k, p):
    """Sum over i in [0, p] of binom(p, i) * binom(n - p, k - (p - i)).

    Equals ``binom_ext(n, k)`` for every ``0 <= p <= n``.
    """
    if n < 0 or p < 0:
        raise ValueError("n and p must be non-negative")
    if p > n:
        raise ValueError(f"p={p} exceeds n={n}")
    return sum(binom_ext(p, i) * binom_ext(n - p, k - (p - i)) for i in range(p + 1))


def alt_sum(j, i):
    """Sum over r in [0, j-1] of (-1)^(r+1) binom(j - r, i) binom(j, r).

    This is -1 when i == j and 0 otherwise; it is the constant term of the
    DNA entry formula.
    """
    if j < 1:
        raise ValueError(f"j must be >= 1, got {j}")
    total = 0
    for r in range(j):
        sign = 1 if r & 1 else -1
        total += sign * binom_ext(j - r, i) * binom_ext(j, r)
    return total
