"""Float64: the weighted power sum loses accuracy as nodes cluster, h_k does not."""
import numpy as np

from sylvester.stability import cmd_bench_stability, stability_record

print(stability_record([1, 2, 3], 4))

rows = cmd_bench_stability([6], [20], [1.0, 1e-2, 1e-4, 1e-6], trials=5, seed=0)
summaries = [r for r in rows if isinstance(r, dict)]
for s in summaries:
    print(s)

# relative error of the weighted sum, in orders of magnitude, per spread
med = np.array([s["median_rel_error_lhs"] or np.nan for s in summaries], dtype=float)
print(np.log10(med).round(1))
