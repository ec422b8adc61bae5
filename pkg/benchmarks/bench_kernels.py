"""Benchmark the compiled polynomial kernels against the pure-Python ones.

Times the two hot kernels (integer polynomial multiplication and gcd) on the
same random inputs, then an end-to-end identity verification under each
implementation.  Run as:

    python3 benchmarks/bench_kernels.py
"""

import argparse
import random
import time

from qeuler.kernels import _pure

try:
    from qeuler.kernels import _speedups
except ImportError:
    _speedups = None


def rand_poly(rng, deg, bits):
    span = 1 << bits
    p = [rng.randint(-span, span) for _ in range(deg)] + [1]
    return p


def time_kernel(fn, cases, repeat=3):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        for args in cases:
            fn(*[list(a) for a in args])
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def bench_kernels(rng):
    impls = [("pure", _pure)]
    if _speedups is not None:
        impls.append(("speedups", _speedups))

    mul_cases = [
        (rand_poly(rng, 60, 64), rand_poly(rng, 60, 64)) for _ in range(200)
    ]
    gcd_cases = [
        (rand_poly(rng, 12, 48), rand_poly(rng, 12, 48)) for _ in range(200)
    ]

    print(f"{'kernel':<14}" + "".join(f"{name:>12}" for name, _ in impls))
    for label, attr, cases in [
        ("mul_int", "poly_mul_int", mul_cases),
        ("gcd_int", "poly_gcd_int", gcd_cases),
    ]:
        row = f"{label:<14}"
        for _, impl in impls:
            row += f"{time_kernel(getattr(impl, attr), cases):>11.4f}s"
        print(row)


def bench_end_to_end():
    """Full catalog verification with whichever kernel is active."""
    from qeuler import kernels, verify_all

    t0 = time.perf_counter()
    reports = verify_all(32)
    dt = time.perf_counter() - t0
    status = "all pass" if all(r.passed for r in reports) else "FAILURES"
    print(f"verify_all(32) [{kernels.IMPLEMENTATION}]: {dt:.2f}s ({status})")
    print("re-run with QEULER_PURE_PYTHON=1 to time the pure fallback")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=2024)
    parser.add_argument(
        "--skip-end-to-end", action="store_true", help="kernel timings only"
    )
    args = parser.parse_args()

    bench_kernels(random.Random(args.seed))
    if not args.skip_end_to_end:
        bench_end_to_end()


if __name__ == "__main__":
    main()
