"""Float64 accuracy of the two sides of Sylvester's identity.

The weighted power sum divides by products of node gaps and loses accuracy
when nodes cluster. On positive nodes every monomial of h_k is positive, so
that side stays accurate. Both are compared against the exact rational value
computed on the same dyadic node values.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .fields import FLOAT64
from .identities import NodeSet, relative_error, weighted_power_sum
from .records import StabilityRecord
from .symfun import h_fast


def stability_record(nodes, d: int) -> StabilityRecord:
    """Measure both float64 routes on ``nodes`` (converted to doubles)."""
    floats = [float(x) for x in nodes]
    ns = NodeSet(floats, FLOAT64)
    n = ns.n
    ordered = sorted(floats)
    spread = min(b - a for a, b in zip(ordered, ordered[1:]))

    exact = h_fast(d - n + 1, [Fraction(x) for x in floats])
    try:
        lhs = weighted_power_sum(ns, d)
    except (OverflowError, ZeroDivisionError):
        lhs = math.inf
    rhs = h_fast(d - n + 1, floats, one=1.0)

    try:
        err_l = relative_error(lhs, exact)
        err_r = relative_error(rhs, exact)
    except OverflowError:
        err_l = err_r = math.inf
    if not (math.isfinite(err_l) and math.isfinite(err_r)):
        return StabilityRecord(n, d, spread, None, None, overflow=True)
    return StabilityRecord(n, d, spread, err_l, err_r)


def sample_spread_nodes(rng: np.random.Generator, n: int, spread: float) -> list[float]:
    """``n`` sorted doubles whose consecutive gaps lie in ``[spread, 2*spread)``."""
    start = rng.uniform(0.5, 1.5)
    gaps = spread * (1.0 + rng.random(n - 1))
    return [float(x) for x in start + np.concatenate(([0.0], np.cumsum(gaps)))]


def cmd_bench_stability(n_list, d_list, spread_list, trials: int, seed: int) -> list:
    """Sample ``trials`` node sets per (n, d, spread) and measure each.

    Returns, in emission order, the :class:`StabilityRecord` of every sample
    followed by a summary dict (median and max errors) for its configuration.
    """
    if any(s <= 0 for s in spread_list):
        raise ValueError("spreads must be positive")
    if trials < 1:
        raise ValueError("trials must be at least 1")
    rng = np.random.default_rng(seed)
    out = []
    for n in n_list:
        if n < 2:
            raise ValueError("node sets need n >= 2")
        for d in d_list:
            if d < 0:
                raise ValueError("degrees must be non-negative")
            for spread in spread_list:
                rows = [stability_record(sample_spread_nodes(rng, n, spread), d) for _ in range(trials)]
                out += rows
                out.append(summarize(n, d, spread, rows))
    return out


def summarize(n: int, d: int, spread: float, rows: list[StabilityRecord]) -> dict:
    ok = [r for r in rows if not r.overflow]
    summary = {
        "record": "stability_summary",
        "n": n,
        "d": d,
        "spread": spread,
        "samples": len(rows),
        "overflowed": len(rows) - len(ok),
    }
    for side in ("lhs", "rhs"):
        errs = np.array([getattr(r, f"rel_error_{side}") for r in ok], dtype=float)
        summary[f"median_rel_error_{side}"] = float(np.median(errs)) if ok else None
        summary[f"max_rel_error_{side}"] = float(errs.max()) if ok else None
    return summary
