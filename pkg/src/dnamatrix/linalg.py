"""Exact determinants and null spaces over the rationals.

Determinants use one-step fraction-free (Bareiss) elimination on an
integer matrix obtained by scaling each row by the lcm of its
denominators. Centrosymmetric matrices can instead be split into two
half-size blocks whose determinants multiply to the original.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm

from .matrix import Matrix


class NotCentrosymmetricError(ValueError):
    pass


def _integer_rows(m):
    """Scale rows to integers. Returns (int_rows, product of row scales)."""
    rows = []
    scale = 1
    for r in m.rows:
        d = lcm(*(Fraction(x).denominator for x in r))
        rows.append([int(Fraction(x) * d) for x in r])
        scale *= d
    return rows, scale


def _bareiss_int(a, stats=None):
    """Determinant of a square integer matrix (list of lists, mutated in place)."""
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for p in range(k + 1, n):
                if a[p][k] != 0:
                    a[k], a[p] = a[p], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            aik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - aik * row_k[j]) // prev
            row_i[k] = 0
        if stats is not None:
            bits = max((abs(x).bit_length() for row in a[k + 1:] for x in row[k + 1:]), default=0)
            stats["max_bits"] = max(stats.get("max_bits", 0), bits)
        prev = pivot
    return sign * a[n - 1][n - 1]


def det_bareiss(m, stats=None):
    """Exact determinant of a rational matrix.

    Pivots are the first nonzero entry scanning down the column. If ``stats``
    is a dict, the largest intermediate integer bit length is recorded under
    ``"max_bits"``.
    """
    rows, scale = _integer_rows(m)
    if stats is not None:
        stats["max_bits"] = max(
            stats.get("max_bits", 0),
            max(abs(x).bit_length() for r in rows for x in r),
        )
    return Fraction(_bareiss_int(rows, stats), scale)


def _exchange_times(q):
    """Q times the exchange matrix: reverse the columns of every row."""
    return [list(reversed(r)) for r in q]


def _check_centro(m):
    if not m.is_centrosymmetric():
        raise NotCentrosymmetricError("matrix is not centrosymmetric")


def centro_split(m):
    """Split an even-order centrosymmetric matrix [[P, Q], [JQJ, JPJ]].

    Returns (P - QJ, P + QJ); det(M) = det(P - QJ) * det(P + QJ).
    """
    n = m.order
    if n % 2:
        raise ValueError(f"centro_split needs even order, got {n}")
    _check_centro(m)
    h = n // 2
    p = [list(r[:h]) for r in m.rows[:h]]
    qj = _exchange_times([r[h:] for r in m.rows[:h]])
    minus = Matrix([[p[i][j] - qj[i][j] for j in range(h)] for i in range(h)])
    plus = Matrix([[p[i][j] + qj[i][j] for j in range(h)] for i in range(h)])
    return minus, plus


def centro_split_odd(m):
    """Split an odd-order (2h+1) centrosymmetric matrix.

    With blocks P (h x h), x (column), Q (h x h) in the top rows and the
    middle row (y, c, yJ), returns (P - QJ, [[c, 2y], [x, P + QJ]]) whose
    determinants multiply to det(M).
    """
    n = m.order
    if n % 2 == 0:
        raise ValueError(f"centro_split_odd needs odd order, got {n}")
    _check_centro(m)
    h = n // 2
    rows = m.rows
    p = [list(r[:h]) for r in rows[:h]]
    qj = _exchange_times([r[h + 1:] for r in rows[:h]])
    x = [rows[i][h] for i in range(h)]
    y = list(rows[h][:h])
    c = rows[h][h]
    minus = [[p[i][j] - qj[i][j] for j in range(h)] for i in range(h)]
    bordered = [[c] + [2 * v for v in y]]
    for i in range(h):
        bordered.append([x[i]] + [p[i][j] + qj[i][j] for j in range(h)])
    return (Matrix(minus) if h else None), Matrix(bordered)


def det_centro(m, stats=None, split_odd=True):
    """Determinant of a centrosymmetric matrix via the half-size split.

    Blocks that are themselves centrosymmetric are split again; the rest go
    through :func:`det_bareiss`. With ``split_odd=False`` odd orders are
    handed straight to Bareiss.
    """
    _check_centro(m)
    return _det_centro(m, stats, split_odd)


def _det_centro(m, stats, split_odd):
    n = m.order
    if n == 1:
        return Fraction(m.rows[0][0])
    if n % 2 == 0:
        blocks = centro_split(m)
    elif split_odd:
        blocks = [b for b in centro_split_odd(m) if b is not None]
    else:
        return det_bareiss(m, stats)
    result = Fraction(1)
    for b in blocks:
        if b.order > 1 and b.is_centrosymmetric():
            d = _det_centro(b, stats, split_odd)
        else:
            d = det_bareiss(b, stats)
        if d == 0:
            return Fraction(0)
        result *= d
    return result


@dataclass(frozen=True)
class KernelBasis:
    vectors: tuple = ()
    rank: int = 0

    @property
    def dimension(self):
        return len(self.vectors)


def normalize_vector(v):
    """Scale so the first nonzero component is 1."""
    v = tuple(Fraction(x) for x in v)
    for x in v:
        if x != 0:
            return tuple(y / x for y in v)
    return v


def _row_reduce(rows):
    """Fraction-free reduced echelon form of an integer matrix, in place.

    Every row is kept primitive (content 1). Returns the pivot columns.
    """
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][col] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv_row = rows[r]
        piv = piv_row[col]
        for i in range(nrows):
            if i == r or rows[i][col] == 0:
                continue
            f = rows[i][col]
            new = [piv * a - f * b for a, b in zip(rows[i], piv_row)]
            g = 0
            for a in new:
                g = gcd(g, a)
            if g > 1:
                new = [a // g for a in new]
            rows[i] = new
        pivots.append(col)
        r += 1
    return pivots


def kernel(m):
    """Exact null space basis; each vector normalized to a leading 1."""
    rows, _ = _integer_rows(m)
    n = m.order
    pivots = _row_reduce(rows)
    free = [c for c in range(n) if c not in set(pivots)]
    vectors = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = Fraction(-rows[r][f], rows[r][pc])
        vectors.append(normalize_vector(v))
    return KernelBasis(tuple(vectors), len(pivots))


@dataclass
class ParityRecord:
    n: int
    alpha: Fraction
    beta: Fraction
    determinant: Fraction
    kernel_dimension: int
    kernel_vector: tuple = None
    problem: str = None


@dataclass
class ParityReport:
    records: list = field(default_factory=list)

    @property
    def violations(self):
        return [r for r in self.records if r.problem]

    @property
    def ok(self):
        return not self.violations


def verify_parity(n_max, points, build=None):
    """Check the odd/even singularity pattern of evaluated A_n, n in [1, n_max].

    Odd n must give a nonzero determinant. Even n must give determinant 0,
    a one-dimensional kernel, and that kernel must be spanned by the
    binomial null vector.
    """
    from .dna import binomial_null_vector, build_dna, eval_matrix

    build = build or build_dna
    points = list(points)
    for pt in points:
        if pt.beta == 0:
            raise ValueError(f"point ({pt.alpha}, {pt.beta}) has beta = 0")
    report = ParityReport()
    for n in range(1, n_max + 1):
        sym = build(n)
        for pt in points:
            mat = eval_matrix(sym, pt)
            det = det_bareiss(mat)
            ker = kernel(mat)
            rec = ParityRecord(n, pt.alpha, pt.beta, det, ker.dimension)
            if ker.vectors:
                rec.kernel_vector = ker.vectors[0]
            if n % 2:
                if det == 0:
                    rec.problem = "odd n with zero determinant"
            else:
                expected = normalize_vector(binomial_null_vector(n))
                if det != 0:
                    rec.problem = "even n with nonzero determinant"
                elif ker.dimension != 1:
                    rec.problem = f"kernel dimension {ker.dimension}, expected 1"
                elif ker.vectors[0] != expected:
                    rec.problem = "kernel vector differs from binomial null vector"
            report.records.append(rec)
    return report
