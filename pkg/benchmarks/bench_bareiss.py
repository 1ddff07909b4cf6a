"""Benchmark the compiled integer-elimination core against the pure fallback.

Runs fraction-free elimination (rank and determinant) on seeded random
integer matrices of increasing size, checks that both backends return
identical results, and prints a timing table.

    python3 benchmarks/bench_bareiss.py --sizes 16,32,64,96 --repeats 3
"""

from __future__ import annotations

import argparse
import random
import time

from perazzo import _bareiss_py as pure

try:
    from perazzo import _bareiss as compiled
except ImportError:
    compiled = None


def random_matrix(n: int, bound: int, seed: int) -> list[list[int]]:
    rng = random.Random(seed)
    return [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)]


def best_of(repeats: int, fn, *args) -> tuple[float, object]:
    best = float("inf")
    value = None
    for _ in range(repeats):
        rows = [list(r) for r in args[0]]
        rest = args[1:]
        start = time.perf_counter()
        value = fn(rows, *rest)
        best = min(best, time.perf_counter() - start)
    return best, value


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="16,32,64,96")
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--bound", type=int, default=9)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    if compiled is None:
        print("compiled backend unavailable; timing the pure fallback only")
    header = f"{'n':>5} {'op':>4} {'pure ms':>10} {'compiled ms':>12} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for n in sizes:
        matrix = random_matrix(n, args.bound, args.seed + n)
        for op, fn_name, extra in (
            ("rank", "rank_int", (n,)),
            ("det", "det_int", ()),
        ):
            pure_time, pure_value = best_of(
                args.repeats, getattr(pure, fn_name), matrix, *extra
            )
            if compiled is None:
                print(f"{n:>5} {op:>4} {pure_time * 1e3:>10.2f} {'-':>12} {'-':>8}")
                continue
            comp_time, comp_value = best_of(
                args.repeats, getattr(compiled, fn_name), matrix, *extra
            )
            if comp_value != pure_value:
                print(f"backend disagreement at n={n} op={op}: "
                      f"{comp_value!r} != {pure_value!r}")
                return 1
            ratio = pure_time / comp_time if comp_time > 0 else float("inf")
            print(
                f"{n:>5} {op:>4} {pure_time * 1e3:>10.2f} "
                f"{comp_time * 1e3:>12.2f} {ratio:>7.1f}x"
            )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
