"""
How the search effort scales
============================

Reruns the random-workload sweeps at a reduced trial count and writes the
CSV/JSON pairs that a plotting script can consume.

Run from the repository root: ``python demos/04_scaling_sweeps.py [OUT_DIR]``
"""

import sys

from harmonic_periods.experiments import ExperimentConfig, Sweep, run_experiment, write_results

out_dir = sys.argv[1] if len(sys.argv) > 1 else "sweep-results"
trials = 100

sweeps = [
    # fixed T1 = 15 and n = 8; the brute-force count grows linearly with Tn
    ExperimentConfig(Sweep.VARY_TN, (1000, 2000, 4000, 8000), trials=trials, t1=15),
    # fixed Tn = 5000; growth in T1 tapers off
    ExperimentConfig(Sweep.VARY_T1, (5, 15, 30, 60), trials=trials, tn=5000),
    # fixed T1 and Tn; only DPHS depends on the number of tasks
    ExperimentConfig(Sweep.VARY_CARDINALITY, (2, 4, 8, 16), trials=trials, t1=15, tn=5000),
    ExperimentConfig(Sweep.RANDOM_RUNTIME, (2, 4, 8, 16), trials=trials, t1=15, tn=5000),
]

for config in sweeps:
    records = run_experiment(config)
    csv_path, _ = write_results(records, config, out_dir)
    print(f"\n{config.sweep.value} -> {csv_path}")
    for r in records:
        print(f"  {r.sweep_value:6d} {r.algorithm.value:12s} {r.mean_pairs:10.1f} pairs "
              f"{r.mean_elapsed * 1e3:8.3f} ms")
