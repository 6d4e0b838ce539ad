#!/usr/bin/env python3
"""Sign map of the vacuum energy over the reduced-coupling plane.

The comb energy changes sign along a curve in the (omega, gamma) plane: the
free point (omega = -1, gamma = 0) and its neighborhood give E = 0, the mixed
comb (0, 0) is positive, and large gamma is always negative.  This scan grids
the plane at fixed spacing, classifies each point as +1 / 0 / -1 (zero means
|E| below the integration error), and dumps rows for plotting the boundary.
"""

import argparse
import csv
import sys

import numpy as np

from deltacomb.energy import comb_energy
from deltacomb.scattering import CombCouplings


def classify(value, abs_err, tail_bound):
    if abs(value) <= max(abs_err + tail_bound, 1e-14):
        return 0
    return 1 if value > 0 else -1


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--a", type=float, default=1.0)
    ap.add_argument("--gamma-max", type=float, default=2.0)
    ap.add_argument("--gamma-count", type=int, default=41)
    ap.add_argument("--omega-count", type=int, default=41)
    ap.add_argument("--output", default=None)
    ap.add_argument("--plot", action="store_true")
    args = ap.parse_args(argv)

    gammas = np.linspace(0.0, args.gamma_max, args.gamma_count)
    # stop short of omega = 1, where transmission vanishes identically
    omegas = np.linspace(-1.0, 0.999, args.omega_count)

    rows = []
    for gamma in gammas:
        for omega in omegas:
            c = CombCouplings.from_reduced(
                omega=float(omega), gamma=float(gamma), a=args.a
            )
            res = comb_energy(c)
            rows.append(
                (
                    float(gamma),
                    float(omega),
                    res.value,
                    classify(res.value, res.abs_err, res.tail_bound),
                )
            )

    out = open(args.output, "w", newline="") if args.output else sys.stdout
    writer = csv.writer(out)
    writer.writerow(("gamma", "omega", "energy", "sign"))
    for gamma, omega, energy, sign in rows:
        writer.writerow((repr(gamma), repr(omega), repr(energy), sign))
    if args.output:
        out.close()

    if args.plot:
        try:
            import matplotlib.pyplot as plt
        except ImportError:
            print("matplotlib not installed; skipping plot", file=sys.stderr)
            return 0
        sign = np.array([r[3] for r in rows], dtype=float).reshape(
            args.gamma_count, args.omega_count
        )
        fig, ax = plt.subplots()
        mesh = ax.pcolormesh(
            omegas, gammas, sign, cmap="coolwarm", vmin=-1.0, vmax=1.0, shading="auto"
        )
        fig.colorbar(mesh, ax=ax, label="sign of E")
        ax.set_xlabel("omega")
        ax.set_ylabel("gamma")
        ax.set_title(f"energy sign at a = {args.a}")
        fig.tight_layout()
        plt.show()
    return 0


if __name__ == "__main__":
    sys.exit(main())
