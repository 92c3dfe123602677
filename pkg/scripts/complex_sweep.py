"""Error of the experimental complex-parameter evaluator against the adaptive oracle.

    python3 scripts/complex_sweep.py
"""

import warnings

from lerchphi import ComplexLerchParams, LerchWarning, evaluate_complex
from lerchphi.oracle import adaptive_quadrature


def main():
    warnings.simplefilter("ignore", LerchWarning)
    z, a = -1.1, 1.0
    for s in (2 + 1j, 8 + 1j):
        ref = adaptive_quadrature(z, s, a, 1e-14).value
        print(f"s = {s}")
        for n in range(10, 201, 10):
            err = evaluate_complex(ComplexLerchParams(z, s, a), n).value - ref
            print(f"  n={n:3d}  re {err.real:+.2e}  im {err.imag:+.2e}")


if __name__ == "__main__":
    main()
