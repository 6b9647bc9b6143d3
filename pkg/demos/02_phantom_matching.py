"""Why a single-pool dictionary misreads a sample with magnetization transfer.

Rebuilds the in-vitro comparison logic: a doped-water-like sample (no MT)
and a cross-linked-albumin-like sample (strong MT) are simulated with the
two-pool model as ground truth and matched against three dictionaries
(single-pool, two-pool, two-pool with MT pulses). The single-pool match of
the MT sample comes back with visibly shorter T1/T2 and a worse residual.

Dictionaries here use a reduced grid so the demo runs in ~1 minute.

Run:  python3 demos/02_phantom_matching.py
"""

import pathlib

import numpy as np

from mrfmt import GridSpec, TwoPoolParams, build_grid, build_irff, generate
from mrfmt.analysis import phantom_report

out_dir = pathlib.Path(__file__).parent / "output"
out_dir.mkdir(exist_ok=True)

irff = build_irff()
irff_mt = build_irff(with_mt_pulses=True)

grid_two = GridSpec(
    np.geomspace(300.0, 2400.0, 14),
    np.geomspace(15.0, 200.0, 12),
    np.linspace(0.9, 1.1, 5),
    np.concatenate(([0.0], np.geomspace(0.01, 0.30, 6))),
)
grid_one = GridSpec(grid_two.t1_ms, grid_two.t2_ms, grid_two.b1, None)

print("generating the three reduced dictionaries ...")
d_single = generate(irff, build_grid("single_pool_irff", grid_one), model="single_pool", grid=grid_one)
d_two = generate(irff, build_grid("two_pool_irff", grid_two), model="two_pool", grid=grid_two)
d_two_mt = generate(irff_mt, build_grid("two_pool_irff_mt", grid_two), model="two_pool", grid=grid_two)
print(f"  single-pool {d_single.n_entries}, two-pool {d_two.n_entries} entries")

water = TwoPoolParams(t1_ms=648.0, t2_ms=29.0, f_frac=0.0)
bsa = TwoPoolParams(t1_ms=1056.0, t2_ms=51.0, f_frac=0.14)

report = phantom_report(
    water, bsa, d_single, d_two, d_two_mt, irff, irff_mt, b1_scale=0.98
)
report.to_csv(out_dir / "phantom_matching.csv")
print(f"wrote {out_dir / 'phantom_matching.csv'}\n")

header = f"{'sample':8s} {'dictionary':18s} {'T1/ms':>7s} {'T2/ms':>6s} {'B1':>5s} {'F/%':>5s} {'NRMSE/%':>8s}"
print(header)
print("-" * len(header))
for row in report.rows:
    print(
        f"{row['sample']:8s} {row['dictionary']:18s} {row['t1_ms']:7.0f} "
        f"{row['t2_ms']:6.1f} {row['b1']:5.2f} {row['f'] * 100:5.1f} "
        f"{row['nrmse'] * 100:8.2f}"
    )
print(
    f"\ntruth: water ({water.t1_ms:.0f} ms, {water.t2_ms:.0f} ms, F = 0), "
    f"xl-BSA ({bsa.t1_ms:.0f} ms, {bsa.t2_ms:.0f} ms, F = {bsa.f_frac * 100:.0f}%)"
)
print(
    "note how the single-pool match of the MT sample trades the missing pool "
    "for shorter T1 and T2, and how its residual exceeds the two-pool one"
)
