#!/usr/bin/env python3
"""Time the hot kernels under the compiled and the vectorized backend.

Runs each workload in a subprocess per backend (the backend is fixed at
import time by YDOM_BACKEND) and prints a CSV table:

    python benchmarks/bench_backends.py [--repeat N] [--out FILE]
"""

import argparse
import json
import os
import subprocess
import sys

WORKLOADS = {
    "subset_search_4x5": """
from ydom.diagram import from_heights
from ydom.oracle import exact_gammaL_bruteforce
exact_gammaL_bruteforce(from_heights([3, 2, 2, 1]), 4, 5, 1)
""",
    "subset_search_5x5_latency2": """
from ydom.diagram import rect
from ydom.oracle import exact_gammaL_bruteforce
exact_gammaL_bruteforce(rect(2, 3), 5, 5, 2)
""",
    "profile_search_8x8": """
from ydom.diagram import from_heights
from ydom.oracle import exact_gamma1_profile
exact_gamma1_profile(from_heights([5, 3, 3, 1]), 8, 8)
""",
    "star_free_scan_4x5": """
from ydom.oracle import exact_ex_double_stars
exact_ex_double_stars(4, 5, [(1, 1), (3, 0), (0, 3)])
""",
    "boost_enumeration_L2": """
from ydom.diagram import from_heights
from ydom.approx import bar_gammaL
bar_gammaL(from_heights([3, 2, 1]), 12, 12, 2)
""",
}

DRIVER = """
import json, time, sys
from ydom import _kernels
_kernels.warm_up()
body = sys.argv[1]
repeat = int(sys.argv[2])
exec(body)  # once to warm the exact signatures used
times = []
for _ in range(repeat):
    t0 = time.perf_counter()
    exec(body)
    times.append(time.perf_counter() - t0)
print(json.dumps({"backend": _kernels.backend_name(), "best_s": min(times)}))
"""


def run_case(backend: str, body: str, repeat: int) -> dict:
    env = dict(os.environ, YDOM_BACKEND=backend)
    proc = subprocess.run(
        [sys.executable, "-c", DRIVER, body, str(repeat)],
        capture_output=True,
        text=True,
        env=env,
    )
    if proc.returncode != 0:
        raise RuntimeError(proc.stderr)
    return json.loads(proc.stdout.strip().splitlines()[-1])


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--out", help="also write the CSV here")
    args = ap.parse_args()

    lines = ["workload,numba_s,numpy_s,speedup"]
    for name, body in WORKLOADS.items():
        fast = run_case("numba", body, args.repeat)
        slow = run_case("numpy", body, args.repeat)
        ratio = slow["best_s"] / fast["best_s"] if fast["best_s"] > 0 else float("nan")
        lines.append("%s,%.6f,%.6f,%.1f" % (name, fast["best_s"], slow["best_s"], ratio))
    csv = "\n".join(lines)
    print(csv)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(csv + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
