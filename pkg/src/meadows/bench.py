"""Benchmark the compiled verification kernels against the pure fallback.

Run as ``python -m meadows.bench``.  Times the two hot scans (the cubic
axiom check and the quadratic generalized-inverse search) over mod-n tables
for a few carrier sizes and prints the per-backend timings with speedups.
"""
from __future__ import annotations

import argparse
import time

from meadows import kernels
from meadows.rings import make_zmod


def _time(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def run(orders: list[int], repeat: int) -> None:
    backends = kernels.available_backends()
    print(f"active backend: {kernels.BACKEND}")
    if len(backends) == 1:
        print("compiled extension not importable; timing the pure backend only")
    header = f"{'scan':<14} {'order':>6}" + "".join(
        f" {name + ' (ms)':>15}" for name in backends
    )
    if len(backends) > 1:
        header += f" {'speedup':>9}"
    print(header)

    for n in orders:
        ring = make_zmod(n)
        add, mul, neg = ring.add_table(), ring.mul_table(), ring.neg_table()
        jobs = {
            "axiom check": lambda impl: impl.axiom_witnesses(
                n, add, mul, neg, ring.zero, ring.one
            ),
            "inverse scan": lambda impl: impl.inverse_scan(n, mul),
        }
        for label, job in jobs.items():
            times = {
                name: _time(lambda impl=impl: job(impl), repeat)
                for name, impl in backends.items()
            }
            row = f"{label:<14} {n:>6}" + "".join(
                f" {1000 * t:>15.2f}" for t in times.values()
            )
            if "compiled" in times:
                row += f" {times['pure'] / times['compiled']:>8.1f}x"
            print(row)


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--orders",
        default="32,64,128",
        help="comma-separated carrier sizes (default: 32,64,128)",
    )
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    run([int(tok) for tok in args.orders.split(",")], args.repeat)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
