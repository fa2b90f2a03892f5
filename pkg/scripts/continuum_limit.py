"""Convergence of the finite toolkit toward its continuum counterparts.

For growing odd d this prints, per size: the uncertainty product and its
defect from 1/2, the quasi-eigenvalue defect from 1/2, the lowest
oscillator level defect from 1/2, and the worst deviation from 1 among
the gaps in the lowest third of the spectrum.  Every column shrinks
roughly like a theta tail, which is the whole point of wrapping the
Gaussian instead of chopping it.

Usage: python scripts/continuum_limit.py [max_d]
"""
import sys

import numpy as np

from finitegauss import (
    Dimension,
    hermitian_eig,
    oscillator_hamiltonian,
    quasi_eigen_residual,
    uncertainty_product,
)


def row(d: int) -> str:
    dim = Dimension(d)
    unc = uncertainty_product(dim, 1.0)
    lam = quasi_eigen_residual(dim).lam
    levels = hermitian_eig(oscillator_hamiltonian(dim)).eigenvalues
    ground_defect = abs(levels[0] - 0.5)
    top = max(2, d // 3)
    gap_defect = float(np.max(np.abs(np.diff(levels[: top + 1]) - 1.0)))
    return (
        f"{d:4d}  {unc.product:.15f}  {unc.product - 0.5: .3e}  "
        f"{lam - 0.5: .3e}  {ground_defect:.3e}  {gap_defect:.3e}"
    )


def main(max_d: int = 41) -> int:
    print("   d  product            product-1/2  lambda-1/2  ground-1/2  low gaps-1")
    for d in range(3, max_d + 1, 2):
        print(row(d))
    return 0


if __name__ == "__main__":
    raise SystemExit(main(int(sys.argv[1]) if len(sys.argv) > 1 else 41))
