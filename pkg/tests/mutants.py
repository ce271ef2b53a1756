"""Entry formulas with one binomial index shifted, for mutation tests."""

from dnamatrix.combinatorics import binom_ext
from dnamatrix.poly import BiPoly

# (slot, description) for the eight binomial indices of the entry formula
SLOTS = [
    (0, "binom(j-1, s) upper"),
    (1, "binom(j-1, s) lower"),
    (2, "binom(n-j+1, i-j+s) upper"),
    (3, "binom(n-j+1, i-j+s) lower"),
    (4, "binom(j-r, i) upper"),
    (5, "binom(j-r, i) lower"),
    (6, "binom(j, r) upper"),
    (7, "binom(j, r) lower"),
]


def _b(p, q):
    return 0 if p < 0 else binom_ext(p, q)


def mutant_entry(slot, delta):
    def shift(k, v):
        return v + delta if k == slot else v

    def entry(n, i, j):
        if not (1 <= i <= n + 1 and 1 <= j <= n + 1):
            raise ValueError("index out of range")
        terms = {}
        for s in range(j):
            c = _b(shift(0, j - 1), shift(1, s)) * _b(shift(2, n - j + 1), shift(3, i - j + s))
            if c:
                eb = i - j + 2 * s
                key = (max(n - eb, 0), max(eb, 0))
                terms[key] = terms.get(key, 0) + c
        corr = 0
        for r in range(j):
            corr += (-1) ** (r + 1) * _b(shift(4, j - r), shift(5, i)) * _b(shift(6, j), shift(7, r))
        if corr:
            terms[(0, 0)] = terms.get((0, 0), 0) + corr
        return BiPoly(terms)

    return entry
