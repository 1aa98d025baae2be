"""Produce the experiment CSVs: analytic curves plus a Monte Carlo sweep.

Writes four files under demos/output/ in the shared CSV format:

  capacity.csv            closed-form capacity vs p_PSC, three codes
  depolarizing_bound.csv  capacity lower bound vs p_d (log grid)
  qep_bound.csv           q-codeword error bound vs p_PSC, several T
  simulated.csv           empirical [[7,1]] sweep with RS(63,23)

These are the inputs the figure renderer (plots/) consumes.
"""

import os

import numpy as np

from piggyqec.harness import (
    ExperimentConfig,
    capacity_rows,
    depolarizing_bound_rows,
    qep_bound_rows,
    run_psc_experiment,
    write_csv,
)

OUT = os.path.join(os.path.dirname(__file__), "output")

p_grid = [float(p) for p in np.arange(0.0, 0.501, 0.01)]
rows = []
for name in ("[[5,1]]", "[[7,1]]", "[[9,1]]"):
    rows += capacity_rows(name, p_grid)
write_csv(rows, os.path.join(OUT, "capacity.csv"))
print(f"capacity.csv: {len(rows)} rows")

pd_grid = [float(p) for p in np.logspace(-4, -1, 40)]
rows = []
for name in ("[[5,1]]", "[[7,1]]", "[[9,1]]"):
    rows += depolarizing_bound_rows(name, pd_grid)
write_csv(rows, os.path.join(OUT, "depolarizing_bound.csv"))
print(f"depolarizing_bound.csv: {len(rows)} rows")

p_grid_fine = [float(p) for p in np.arange(0.0, 0.251, 0.005)]
rows = []
for t in (5, 10, 15, 20):
    rows += qep_bound_rows(63, 63 - 2 * t, p_grid_fine)
write_csv(rows, os.path.join(OUT, "qep_bound.csv"))
print(f"qep_bound.csv: {len(rows)} rows")

config = ExperimentConfig(
    code="[[7,1]]",
    p_d_sweep=(0.005, 0.01, 0.015, 0.02, 0.025),
    rs=(63, 23),
    trials_per_point=50_000,
    seed=0,
)
result = run_psc_experiment(config)
result.write_csv(os.path.join(OUT, "simulated.csv"))
for row in result.rows:
    print(
        f"p_d={row['p_d']:.3f}: corruption {row['p_psc_emp']:.4f} "
        f"(bound {row['p_psc_bound']:.4f}), q-codeword errors "
        f"{row['p_qep_emp']:.2e} (tail bound {row['p_qep_bound']:.2e})"
    )
print(f"simulated.csv: {len(result.rows)} rows")
