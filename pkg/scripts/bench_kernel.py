#!/usr/bin/env python3
"""Benchmark the two reduction kernels on a realistic Groebner workload.

Runs the same basis computations under HOMDEG_KERNEL=python and
HOMDEG_KERNEL=c (in subprocesses, so the import-time choice is honored)
and prints the wall times side by side.
"""

import os
import subprocess
import sys

WORKLOAD = r"""
import time
from homdeg.kernel import KERNEL_NAME
from homdeg import PolyRing, QQ, Algebra, free_resolution, hilbert_coefficients

t0 = time.perf_counter()
ring = PolyRing(("x", "y", "z", "w"), QQ)
x, y, z, w = (ring.var(i) for i in range(4))
rels = [x * y**3, x * z**2, y**2 * z - w**3, x * w**2]
pres = Algebra(ring, rels).as_module()
free_resolution(pres)
hilbert_coefficients(pres, [x - y, y - z, z - w])
dt = time.perf_counter() - t0
print(f"{KERNEL_NAME} {dt:.3f}")
"""


def run(kernel):
    env = dict(os.environ, HOMDEG_KERNEL=kernel)
    out = subprocess.run(
        [sys.executable, "-c", WORKLOAD],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    )
    name, secs = out.stdout.split()
    return name, float(secs)


def main():
    results = []
    for kernel in ("python", "c"):
        try:
            results.append(run(kernel))
        except subprocess.CalledProcessError as exc:
            print(f"kernel {kernel!r} failed:\n{exc.stderr}", file=sys.stderr)
            if kernel == "c":
                print("(compiled kernel not built; run setup.py build_ext --inplace)")
            else:
                return 1
    for name, secs in results:
        print(f"{name:<8}{secs:8.3f} s")
    if len(results) == 2:
        print(f"speedup {results[0][1] / results[1][1]:7.2f} x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
