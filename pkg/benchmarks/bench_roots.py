"""Benchmark the compiled root-iteration kernel against the pure-Python
fallback on identical random polynomials.

Run from the repository root:

    python benchmarks/bench_roots.py --degrees 8,16,32,64 --count 50

The compiled kernel is imported directly (no fallback), so this script
fails loudly if the extension was not built.
"""

from __future__ import annotations

import argparse
import random
import statistics
import time

from szego import _roots_py

try:
    from szego import _roots_core
except ImportError:
    _roots_core = None


def random_coeffs(rng: random.Random, degree: int) -> list[complex]:
    coeffs = [complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(degree)]
    coeffs.append(complex(1.0, 0.0))
    return coeffs


def bench(kernel, problems, tol: float, max_iter: int) -> tuple[float, float]:
    times = []
    worst = 0.0
    for coeffs in problems:
        t0 = time.perf_counter()
        _, residuals, _, ok = kernel.solve(coeffs, tol, max_iter)
        times.append(time.perf_counter() - t0)
        if not ok:
            raise RuntimeError("kernel failed to converge during benchmark")
        worst = max(worst, max(residuals))
    return sum(times), worst


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--degrees", default="8,16,32,64")
    parser.add_argument("--count", type=int, default=50, help="polynomials per degree")
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--tol", type=float, default=1e-12)
    parser.add_argument("--max-iter", type=int, default=400)
    args = parser.parse_args()

    if _roots_core is None:
        raise SystemExit(
            "compiled kernel not available; build it first "
            "(pip install -e . --no-build-isolation)"
        )

    degrees = [int(tok) for tok in args.degrees.split(",") if tok.strip()]
    rng = random.Random(args.seed)
    print(f"{'degree':>7} {'python (s)':>12} {'compiled (s)':>13} {'speedup':>8}")
    for degree in degrees:
        problems = [random_coeffs(rng, degree) for _ in range(args.count)]
        py_total, py_worst = bench(_roots_py, problems, args.tol, args.max_iter)
        c_total, c_worst = bench(_roots_core, problems, args.tol, args.max_iter)
        speedup = py_total / c_total if c_total > 0 else float("inf")
        print(
            f"{degree:>7} {py_total:>12.4f} {c_total:>13.4f} {speedup:>7.1f}x"
            f"   (max residual py {py_worst:.2e}, c {c_worst:.2e})"
        )


if __name__ == "__main__":
    main()
