"""Regenerate tests/golden/table_sizing.json (the (n, k_n) pins for the table tests).

Only integers are frozen; Phi values are always recomputed against the oracle.
Run after an intentional change to the sizing rules:

    python3 scripts/make_golden.py
"""

import json
from pathlib import Path

from lerchphi.error_model import LerchParams, plan
from lerchphi.tables import TABLES

OUT = Path(__file__).resolve().parents[1] / "tests" / "golden" / "table_sizing.json"


def main():
    golden = {}
    for name, rows in TABLES.items():
        for tol in (1e-10, 1e-14):
            entries = []
            for row in rows:
                p = plan(LerchParams(row.z, row.s, row.a), tol)
                entries.append({"r": row.r, "tau": row.tau, "s": row.s, "a": row.a, "n": p.n, "kn": p.kn})
            golden[f"{name}@{tol:g}"] = entries
    OUT.write_text(json.dumps(golden, indent=1) + "\n")
    print(f"wrote {OUT}")


if __name__ == "__main__":
    main()
