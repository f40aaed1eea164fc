"""Benchmark: compiled intersection kernel vs. the pure-Python twin.

Runs the chord-pair intersection loop over identical inputs with both
kernels and reports best-of-N wall times and the speedup.  The two
kernels are bit-identical in output (asserted here on every size), so
this measures speed only.

Usage:
    python3 benchmarks/bench_intersect.py [--sizes 8,10,12,15] [--repeat 3]

Honest caveat up front: the kernel's arithmetic is arbitrary-precision
integer math (exact homogeneous coordinates), which CPython executes in
the same C big-int routines either way.  The compiled kernel removes
interpreter loop overhead only, so expect modest ratios — at small m the
two are effectively tied.  The point of the twin-kernel design is the
bit-identical contract with a zero-dependency fallback, not a headline
speedup.
"""

import argparse
import time

from recurlab.geometry import KERNEL_BACKEND, build_arrangement, place_points
from recurlab.geometry import _intersect_py
from recurlab.geometry.arrangement import _chord_lines

try:
    from recurlab.geometry import _intersect_cy
except ImportError:
    _intersect_cy = None


def kernel_inputs(m: int):
    arr = build_arrangement(place_points(m))
    points = arr.points
    px = [p.triple[0] for p in points]
    py = [p.triple[1] for p in points]
    pw = [p.triple[2] for p in points]
    ca = [a for a, _ in arr.chords]
    cb = [b for _, b in arr.chords]
    lx, ly, lw = _chord_lines(points, arr.chords)
    return (px, py, pw, lx, ly, lw, ca, cb, 0, len(arr.chords))


def best_of(func, args, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        func(*args)
        best = min(best, time.perf_counter() - start)
    return best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--sizes",
        default="8,10,12,15",
        help="comma-separated point counts to benchmark (default 8,10,12,15)",
    )
    parser.add_argument(
        "--repeat", type=int, default=3, help="repetitions; best time wins (default 3)"
    )
    args = parser.parse_args()
    sizes = [int(tok) for tok in args.sizes.split(",")]

    print(f"selected kernel backend at import: {KERNEL_BACKEND}")
    if _intersect_cy is None:
        print("compiled kernel not available; reporting pure-Python times only\n")
    print(f"{'m':>4} {'pairs':>7} {'hits':>6} {'pure (ms)':>10} {'compiled (ms)':>14} {'speedup':>8}")

    for m in sizes:
        inputs = kernel_inputs(m)
        n_chords = inputs[-1]
        pairs = n_chords * (n_chords - 1) // 2
        pure_hits = _intersect_py.intersect_pairs(*inputs)
        pure_time = best_of(_intersect_py.intersect_pairs, inputs, args.repeat)
        if _intersect_cy is not None:
            compiled_hits = _intersect_cy.intersect_pairs(*inputs)
            assert compiled_hits == pure_hits, "kernels must agree bit for bit"
            compiled_time = best_of(_intersect_cy.intersect_pairs, inputs, args.repeat)
            speedup = pure_time / compiled_time if compiled_time > 0 else float("inf")
            print(
                f"{m:>4} {pairs:>7} {len(pure_hits):>6} {pure_time * 1e3:>10.3f} "
                f"{compiled_time * 1e3:>14.3f} {speedup:>7.2f}x"
            )
        else:
            print(
                f"{m:>4} {pairs:>7} {len(pure_hits):>6} {pure_time * 1e3:>10.3f} "
                f"{'n/a':>14} {'n/a':>8}"
            )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
