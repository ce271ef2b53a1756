"""Property suites behind the ``verify`` command.

Each suite returns a :class:`SuiteResult`. A failing suite carries the
first counterexample found, with enough context to reproduce it.

Matrices are built through ``dna.build_dna`` looked up at call time, so a
patched entry formula is what gets verified.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import dna
from .combinatorics import alt_sum, binom_ext, p_stifel_rhs
from .linalg import det_bareiss, det_centro, verify_parity
from .poly import ALPHA, BETA, ONE

DEFAULT_TS = (Fraction(2), Fraction(3), Fraction(5, 2))


@dataclass
class SuiteResult:
    name: str
    params: str
    passed: bool
    counterexample: str = None


def _first_failure(name, params, cases):
    for ok, describe in cases:
        if not ok:
            return SuiteResult(name, params, False, describe())
    return SuiteResult(name, params, True)


def suite_p_stifel(max_n):
    def cases():
        for n in range(max_n + 1):
            for k in range(-2, n + 3):
                for p in range(n + 1):
                    got, want = p_stifel_rhs(n, k, p), binom_ext(n, k)
                    yield got == want, lambda n=n, k=k, p=p, got=got, want=want: (
                        f"n={n}, k={k}, p={p}: sum={got}, binom={want}"
                    )

    return _first_failure("p-Stifel relation", f"n<={max_n}, k in [-2, n+2], p in [0, n]", cases())


def suite_stifel(max_n):
    def cases():
        for n in range(1, max_n + 1):
            for k in range(-2, n + 3):
                lhs = binom_ext(n, k)
                rhs = binom_ext(n - 1, k - 1) + binom_ext(n - 1, k)
                yield lhs == rhs, lambda n=n, k=k: f"n={n}, k={k}"

    return _first_failure("classical Stifel", f"1<=n<={max_n}", cases())


def suite_alt_sum(max_j):
    """-1 when i == j, else 0, for row indices i >= 1.

    At i = 0 the sum is (-1)^j instead (the r = j term that would cancel it
    lies outside the summation range); that boundary value is checked too.
    """
    max_j = max(max_j, 1)
    max_i = max_j + 5

    def cases():
        for j in range(1, max_j + 1):
            for i in range(max_i + 1):
                got = alt_sum(j, i)
                if i == 0:
                    want = (-1) ** j
                else:
                    want = -1 if i == j else 0
                yield got == want, lambda j=j, i=i, got=got, want=want: (
                    f"j={j}, i={i}: sum={got}, expected {want}"
                )

    return _first_failure(
        "alternating binomial sum", f"j in [1, {max_j}], i in [0, {max_i}] (i=0 boundary (-1)^j)", cases()
    )


def _entrywise(name, params, max_n, compare):
    def cases():
        for n in range(max_n + 1):
            for i, j, detail in compare(n):
                yield False, lambda n=n, i=i, j=j, detail=detail: f"n={n}, i={i}, j={j}: {detail}"

    return _first_failure(name, params, cases())


def suite_oracle(max_n):
    def compare(n):
        got, ref = dna.build_dna(n), dna.build_oracle(n)
        for i in range(1, n + 2):
            for j in range(1, n + 2):
                if got.entry(i, j) != ref.entry(i, j):
                    yield i, j, f"formula gives {got.entry(i, j)}, expansion gives {ref.entry(i, j)}"

    return _entrywise("oracle equivalence", f"n<={max_n}", max_n, compare)


def suite_fast_path(max_n):
    def compare(n):
        got, ref = dna.build_dna(n, "fast"), dna.build_dna(n)
        for i in range(1, n + 2):
            for j in range(1, n + 2):
                if got.entry(i, j) != ref.entry(i, j):
                    yield i, j, f"fast gives {got.entry(i, j)}, closed form gives {ref.entry(i, j)}"

    return _entrywise("fast entry path", f"n<={max_n}", max_n, compare)


def suite_centrosymmetry(max_n):
    def compare(n):
        m = dna.build_dna(n)
        size = n + 1
        for i in range(1, size + 1):
            for j in range(1, size + 1):
                a, b = m.entry(i, j), m.entry(size + 1 - i, size + 1 - j)
                if a != b:
                    yield i, j, f"{a} != entry({size + 1 - i}, {size + 1 - j}) = {b}"

    return _entrywise("centrosymmetry", f"n<={max_n}", max_n, compare)


def suite_column_sums(max_n):
    def compare(n):
        m = dna.build_dna(n)
        want = (ALPHA + BETA) ** n - ONE
        for c in range(1, n + 2):
            got = dna.column_sum(m, c)
            if got != want:
                yield "*", c, f"column sum {got}, expected {want}"

    return _entrywise("column sums", f"n<={max_n}", max_n, compare)


def suite_homogeneity(max_n):
    def compare(n):
        m = dna.build_dna(n)
        for i in range(1, n + 2):
            for j in range(1, n + 2):
                f = m.entry(i, j) + (1 if i == j else 0)
                if not f.is_homogeneous(n) or f.is_zero():
                    yield i, j, f"{m.entry(i, j)} is not (degree-{n} form) - delta"

    return _entrywise("homogeneity", f"n<={max_n}", max_n, compare)


def suite_parity(max_n, points):
    report = verify_parity(max_n, points, build=dna.build_dna)
    params = f"1<=n<={max_n}, {len(points)} points"
    if report.ok:
        return SuiteResult("determinant parity and kernel", params, True)
    r = report.violations[0]
    vec = None if r.kernel_vector is None else "(" + ", ".join(str(x) for x in r.kernel_vector) + ")"
    return SuiteResult(
        "determinant parity and kernel",
        params,
        False,
        f"n={r.n}, alpha={r.alpha}, beta={r.beta}: {r.problem}; det={r.determinant}, "
        f"kernel dim={r.kernel_dimension}, kernel vector={vec}",
    )


def suite_symbolic_null(max_n):
    def cases():
        for n in range(2, max_n + 1, 2):
            reduced = dna.symbolic_null_check(n)
            for row, red in enumerate(reduced, start=1):
                yield red.is_zero(), lambda n=n, row=row, red=red: (
                    f"n={n}, row {row}: reduces to {red}, not 0"
                )

    return _first_failure("symbolic null vector", f"even 2<=n<={max_n}", cases())


def suite_det_paths(max_n, points):
    def cases():
        for n in range(max_n + 1):
            sym = dna.build_dna(n)
            for pt in points:
                m = dna.eval_matrix(sym, pt)
                if not m.is_centrosymmetric():
                    yield False, lambda n=n, pt=pt: (
                        f"n={n}, alpha={pt.alpha}, beta={pt.beta}: evaluated matrix not centrosymmetric"
                    )
                    continue
                a, b = det_bareiss(m), det_centro(m)
                yield a == b, lambda n=n, pt=pt, a=a, b=b: (
                    f"n={n}, alpha={pt.alpha}, beta={pt.beta}: bareiss={a}, centro={b}"
                )

    return _first_failure("determinant cross-paths", f"n<={max_n}", cases())


_SUITE_NAMES = {
    "suite_p_stifel": "p-Stifel relation",
    "suite_stifel": "classical Stifel",
    "suite_alt_sum": "alternating binomial sum",
    "suite_oracle": "oracle equivalence",
    "suite_fast_path": "fast entry path",
    "suite_centrosymmetry": "centrosymmetry",
    "suite_column_sums": "column sums",
    "suite_homogeneity": "homogeneity",
    "suite_parity": "determinant parity and kernel",
    "suite_symbolic_null": "symbolic null vector",
    "suite_det_paths": "determinant cross-paths",
}


def run_all(max_n=12, points=None):
    """Run every suite; returns the list of results in a fixed order.

    An exception inside a suite is reported as that suite's failure.
    """
    if points is None:
        points = [dna.hyperbola_point(t) for t in DEFAULT_TS]
    plan = [
        (suite_p_stifel, (max_n,)),
        (suite_stifel, (max_n,)),
        (suite_alt_sum, (max_n,)),
        (suite_oracle, (max_n,)),
        (suite_fast_path, (max_n,)),
        (suite_centrosymmetry, (max_n,)),
        (suite_column_sums, (max_n,)),
        (suite_homogeneity, (max_n,)),
        (suite_parity, (max_n, points)),
        (suite_symbolic_null, (max_n,)),
        (suite_det_paths, (max_n, points)),
    ]
    results = []
    for fn, args in plan:
        try:
            results.append(fn(*args))
        except Exception as exc:
            results.append(SuiteResult(_SUITE_NAMES[fn.__name__], f"max_n={max_n}", False,
                                       f"{type(exc).__name__}: {exc}"))
    return results
