"""
PN Hartstone
============

Fractional periods are floored before the search, so 333.33 behaves as 333.
"""

from harmonic_periods import Metric, brute_force_search, dphs_search, hartstone_taskset

ts = hartstone_taskset()
print("bounds after flooring:", ts.effective_bounds)
for metric in Metric:
    ph = dphs_search(ts, metric)
    bf = brute_force_search(ts, metric)
    a = ph.assignment
    print(f"{metric.name}: periods {a.periods} (m={a.multiplier}, b={a.base}), "
          f"cost {a.cost:.4f}, brute force agrees: {bf.cost == ph.cost}")
