"""Error-versus-order sweeps for the estimate-fidelity and truncation plots.

For each configuration writes a CSV (n, k_n, err_full, err_trunc, estimate)
into OUTDIR (default ./results) and prints the estimate/error spread and the
fit of ln(err_trunc) against k_n**(2/3).

    python3 scripts/figure_sweeps.py [OUTDIR]
"""

import csv
import math
import sys
from pathlib import Path

import numpy as np

from lerchphi import error_model as em
from lerchphi.error_model import LerchParams
from lerchphi.experiments import error_sweep, fit_truncated_decay

ESTIMATE = {
    "li_1.5_half": (0.5, 1.5, 1.0),
    "beta_2": (-1.0, 2.0, 0.5),
    "eta_2": (-1.0, 2.0, 1.0),
    "phi_5i": (5j, 1.5, 2.5),
}
TRUNCATION = {
    "li_1.5_half": (0.5, 1.5, 1.0),
    "beta_0.2": (-1.0, 0.2, 0.5),
    "eta_0.01": (-1.0, 0.01, 1.0),
    "phi_5i": (5j, 1.5, 2.5),
}


def write(path, rows):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["n", "k_n", "err_full", "err_trunc", "estimate"])
        for r in rows:
            w.writerow([r.n, r.kn, repr(r.err_full), repr(r.err_trunc), repr(r.estimate)])


def main(outdir="results"):
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    print("estimate vs measured error, n = 5..150")
    for name, (z, s, a) in ESTIMATE.items():
        rows = error_sweep(LerchParams(z, s, a), range(5, 151), truncated=False)
        write(out / f"estimate_{name}.csv", rows)
        ratio = np.array([r.estimate / r.err_full for r in rows if r.err_full > 1e-14])
        print(f"  {name:12s} estimate/error in [{ratio.min():.3g}, {ratio.max():.3g}]")
    print("truncated rule, n = 10..300, fit of ln(err) against k_n^(2/3)")
    for name, (z, s, a) in TRUNCATION.items():
        p = LerchParams(z, s, a)
        rows = error_sweep(p, range(10, 301), truncated=True)
        write(out / f"truncation_{name}.csv", rows)
        slope, _, r2 = fit_truncated_decay(rows)
        d = (2 * math.pi * math.log(em.r_zero(em.pole(p.z, a)))) ** (2 / 3)
        print(f"  {name:12s} slope {slope:.3f}  -d {-d:.3f}  R^2 {r2:.4f}")


if __name__ == "__main__":
    main(*sys.argv[1:])
