#!/usr/bin/env python3
"""Empirical scaling curves for the two approximation algorithms.

No pass/fail thresholds; emits CSV so the numbers can be plotted
elsewhere.

    python benchmarks/bench_scaling.py [--out FILE]
"""

import argparse
import sys
import time

from ydom import _kernels
from ydom.approx import bar_gammaL, hat_gamma1_dp
from ydom.diagram import triangle


def time_call(fn, *args):
    t0 = time.perf_counter()
    fn(*args)
    return time.perf_counter() - t0


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", help="also write the CSV here")
    args = ap.parse_args()
    _kernels.warm_up()

    lines = ["algorithm,parameter,value,seconds"]
    # one-step boost DP: grid side grows, zero-set fixed
    z = triangle(6)
    for n in (10, 20, 40, 80):
        lines.append("hat_dp,n,%d,%.6f" % (n, time_call(hat_gamma1_dp, z, n, n)))
    # one-step boost DP: corner count grows, grid fixed
    for t in (2, 4, 8, 16, 24):
        zz = triangle(t).clip(25, 25)
        lines.append("hat_dp,corners,%d,%.6f" % (t, time_call(hat_gamma1_dp, zz, 25, 25)))
    # boost enumeration: zero-set box grows at latency 2
    for t in (2, 3, 4, 5):
        zz = triangle(t)
        lines.append(
            "bar_enum,width,%d,%.6f" % (t, time_call(bar_gammaL, zz, 40, 40, 2))
        )
    csv = "\n".join(lines)
    print(csv)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(csv + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
