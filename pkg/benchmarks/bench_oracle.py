"""Compare the compiled and pure-Python quadrature kernels.

    python3 benchmarks/bench_oracle.py [--repeat N] [--quick]

Each case is timed on every available backend; the script also checks that
the backends return bit-identical values and evaluation counts.
"""

from __future__ import annotations

import argparse
import statistics
import sys
import time

from besselint import ConvergenceError
from besselint.oracle import available_backends, k_nu_numeric, oracle_F, oracle_G

CASES = [
    ("K_0.5(1)", lambda b: k_nu_numeric(0.5, 1.0, backend=b)),
    ("K_7(2+1i)", lambda b: k_nu_numeric(7, 2 + 1j, backend=b)),
    ("F(0,1;2)", lambda b: oracle_F(0, 1, 2.0, backend=b)),
    ("F(4,7;2)", lambda b: oracle_F(4, 7, 2.0, backend=b)),
    ("F(9,8;0.5)", lambda b: oracle_F(9, 8, 0.5, backend=b)),
    ("G(8,9;2+1i)", lambda b: oracle_G(8, 9, 2 + 1j, backend=b)),
    ("F(9,0;1+3i)", lambda b: oracle_F(9, 0, 1 + 3j, backend=b)),
]


def run_once(fn, backend):
    t0 = time.perf_counter()
    try:
        res = fn(backend)
    except ConvergenceError as exc:
        res = exc.best
    return time.perf_counter() - t0, res


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3, help="timing repetitions per case (median reported)")
    parser.add_argument("--quick", action="store_true", help="only the first four cases")
    args = parser.parse_args(argv)

    backends = available_backends()
    if "compiled" not in backends:
        print("compiled extension not built; only the python backend is available", file=sys.stderr)
    cases = CASES[:4] if args.quick else CASES

    header = f"{'case':<14}{'evals':>10}" + "".join(f"{b + ' [ms]':>16}" for b in backends)
    if len(backends) > 1:
        header += f"{'speedup':>10}{'identical':>11}"
    print(header)
    mismatch = False
    for name, fn in cases:
        times, results = {}, {}
        for b in backends:
            samples = []
            for _ in range(args.repeat):
                dt, res = run_once(fn, b)
                samples.append(dt)
            times[b] = statistics.median(samples)
            results[b] = res
        row = f"{name:<14}{results[backends[0]].evaluations:>10}"
        row += "".join(f"{times[b] * 1e3:>16.2f}" for b in backends)
        if len(backends) > 1:
            same = results["compiled"].value == results["python"].value and (
                results["compiled"].evaluations == results["python"].evaluations
            )
            mismatch |= not same
            row += f"{times['python'] / times['compiled']:>9.1f}x{str(same):>11}"
        print(row)
    return 1 if mismatch else 0


if __name__ == "__main__":
    sys.exit(main())
