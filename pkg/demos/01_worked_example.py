"""
Harmonizing a three-task set by hand
====================================

Walks through the search space for tau = {(2,12), (3,35), (2,112)} and shows
why only a handful of bases per multiplier need to be costed.
"""

from harmonic_periods import (
    Metric,
    brute_force_search,
    build_taskset,
    closest_harmonic_series,
    dphs_search,
    evaluate,
    local_minima_bases,
)
from harmonic_periods.search import exponent_vector

ts = build_taskset([("a", 2, 12), ("b", 3, 35), ("c", 2, 112)])
print("bounds:", ts.effective_bounds)

# For a fixed multiplier, sweep the base and watch the exponents. Inside a run
# of identical exponents the periods only grow with the base, so the cost
# (TPE here, scaled by 100) keeps dropping until the exponents change.
m = 5
print(f"\nm = {m}")
print(" b  exponents  periods        TPE x100")
for b in range(1, ts.effective_bounds[-1] // m + 1):
    periods = closest_harmonic_series(ts, m, b)
    tpe = evaluate(Metric.TPE, ts, periods) * 100
    print(f"{b:2d}  {str(exponent_vector(ts, m, b)):9s}  {str(periods):13s}  {tpe:8.3f}")

# The last base of every run is an integer root of bound // m.
print("\nbases DPHS costs for m = 5:", local_minima_bases(ts, m))

# Both searches agree on the optimum; DPHS gets there with far fewer pairs.
bf = brute_force_search(ts, Metric.TPE)
ph = dphs_search(ts, Metric.TPE)
print(f"\nbrute force: {bf.assignment.periods}, TPE = {bf.cost:.4f}, "
      f"{bf.stats.pairs_evaluated} pairs")
print(f"DPHS:        {ph.assignment.periods}, TPE = {ph.cost:.4f}, "
      f"{ph.stats.pairs_evaluated} pairs")
