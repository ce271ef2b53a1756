"""Immutable square matrices with 1-based accessors.

The same container holds polynomial entries (symbolic DNA matrices) and
rational entries (evaluated matrices). ``rows`` is the plain 0-based tuple
of tuples; ``entry`` and ``column`` take 1-based indices.
"""

from fractions import Fraction


class Matrix:
    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        if not rows:
            raise ValueError("matrix must have order >= 1")
        if any(len(r) != len(rows) for r in rows):
            raise ValueError("matrix must be square")
        self.rows = rows

    @classmethod
    def identity(cls, n):
        return cls([[Fraction(int(i == j)) for j in range(n)] for i in range(n)])

    @property
    def order(self):
        return len(self.rows)

    def _check(self, k, what):
        if not 1 <= k <= self.order:
            raise IndexError(f"{what} index {k} outside [1, {self.order}]")

    def entry(self, i, j):
        self._check(i, "row")
        self._check(j, "column")
        return self.rows[i - 1][j - 1]

    def column(self, j):
        self._check(j, "column")
        return tuple(r[j - 1] for r in self.rows)

    def map(self, fn):
        return Matrix([[fn(x) for x in r] for r in self.rows])

    def apply(self, vector):
        """Matrix-vector product; works for any entries supporting * and +."""
        if len(vector) != self.order:
            raise ValueError("vector length does not match matrix order")
        out = []
        for r in self.rows:
            acc = 0
            for x, v in zip(r, vector):
                acc = acc + x * v
            out.append(acc)
        return tuple(out)

    def is_centrosymmetric(self):
        n = self.order
        rows = self.rows
        return all(
            rows[i][j] == rows[n - 1 - i][n - 1 - j]
            for i in range(n)
            for j in range(n)
        )

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"Matrix(order={self.order})"


PolyMatrix = Matrix
RatMatrix = Matrix
