"""Recompute the four published result tables at both tolerances.

Writes one CSV per (table, tolerance) into OUTDIR (default ./results) and
prints a short comparison with the published n, k_n and error.

    python3 scripts/reproduce_tables.py [OUTDIR]
"""

import io
import sys
from pathlib import Path

from lerchphi.cli import main as cli
from lerchphi.tables import TABLES, compute_table


def main(outdir="results"):
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    for name in sorted(TABLES):
        for tol in (1e-10, 1e-14):
            buf = io.StringIO()
            cli(["table", name, repr(tol)], buf)
            (out / f"{name}_{tol:g}.csv").write_text(buf.getvalue())
            worst_dn = worst_dk = 0
            worst_err = 0.0
            for res in compute_table(name, tol):
                n, kn, _ = res.row.published_for(tol)
                worst_dn = max(worst_dn, abs(res.n - n))
                worst_dk = max(worst_dk, abs(res.kn - kn))
                worst_err = max(worst_err, res.error / tol)
            print(f"{name} tol={tol:g}: max |dn| {worst_dn}, max |dk_n| {worst_dk}, max error/tol {worst_err:.2f}")


if __name__ == "__main__":
    main(*sys.argv[1:])
