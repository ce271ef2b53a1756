"""Wall time and integer bit growth of the two determinant strategies."""

import time

from .dna import build_dna, eval_matrix, hyperbola_point
from .linalg import det_bareiss, det_centro


def bench(degrees, t, repeat=3):
    """One record per degree: best-of-``repeat`` seconds and max bit length per strategy."""
    pt = hyperbola_point(t)
    records = []
    for n in degrees:
        m = eval_matrix(build_dna(n), pt)
        rec = {"n": n, "order": n + 1}
        values = {}
        for name, fn in (("bareiss", det_bareiss), ("centro", det_centro)):
            best = None
            stats = {}
            for _ in range(repeat):
                stats = {}
                start = time.perf_counter()
                values[name] = fn(m, stats=stats)
                elapsed = time.perf_counter() - start
                best = elapsed if best is None else min(best, elapsed)
            rec[f"{name}_seconds"] = best
            rec[f"{name}_max_bits"] = stats.get("max_bits", 0)
        rec["agree"] = values["bareiss"] == values["centro"]
        records.append(rec)
    return records
