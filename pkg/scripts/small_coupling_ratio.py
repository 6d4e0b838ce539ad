#!/usr/bin/env python3
# Weak-coupling scaling of the delta-comb energy.
#
# For w1 = 0 and w0 -> 0+ the energy behaves like C * w0 * ln(w0) rather than
# any power series in w0, so the ratio E / (w0 ln w0) tends to a positive
# constant.  A polynomial E ~ c1 w0 + c2 w0^2 would instead send the ratio to
# zero like 1/ln(w0).  Plotting the ratio against log10(w0) makes the plateau
# (and therefore the log) visible by eye.

import argparse
import csv
import math
import sys

import numpy as np

from deltacomb.energy import small_coupling_ratio


def main(argv=None):
    ap = argparse.ArgumentParser(
        description="tabulate E/(w0 ln w0) on a log-spaced weak-coupling grid"
    )
    ap.add_argument("--a", type=float, default=1.0)
    ap.add_argument("--w0-min", type=float, default=1e-6)
    ap.add_argument("--w0-max", type=float, default=1e-1)
    ap.add_argument("--count", type=int, default=21)
    ap.add_argument("--output", default=None)
    ap.add_argument("--plot", action="store_true")
    args = ap.parse_args(argv)

    w0s = np.geomspace(args.w0_min, args.w0_max, args.count)
    ratios = [small_coupling_ratio(float(w0), args.a) for w0 in w0s]

    out = open(args.output, "w", newline="") if args.output else sys.stdout
    writer = csv.writer(out)
    writer.writerow(("w0", "ratio", "energy"))
    for w0, ratio in zip(w0s, ratios):
        w0 = float(w0)
        writer.writerow(
            (repr(w0), repr(ratio), repr(ratio * w0 * math.log(w0)))
        )
    if args.output:
        out.close()

    if args.plot:
        try:
            import matplotlib.pyplot as plt
        except ImportError:
            print("matplotlib not installed; skipping plot", file=sys.stderr)
            return 0
        fig, ax = plt.subplots()
        ax.semilogx(w0s, ratios, "o-")
        ax.set_xlabel("w0")
        ax.set_ylabel("E / (w0 ln w0)")
        ax.set_title(f"weak-coupling ratio at a = {args.a}")
        fig.tight_layout()
        plt.show()
    return 0


if __name__ == "__main__":
    sys.exit(main())
