"""Compare the compiled and pure-Python enumeration kernels.

    python benchmarks/bench_enumerate.py --max-area 11 --repeat 3

Both kernels walk the same search tree, so the histograms must agree;
the script checks that before reporting timings.
"""
import argparse
import statistics
import time

from hexpoly import enumerator


def best_of(fn, repeat):
    times, result = [], None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - start)
    return result, min(times), statistics.median(times)


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-area", type=int, default=10)
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--native-area", type=int, default=12, help="extra native-only run")
    args = p.parse_args()

    if not enumerator.native_available():
        raise SystemExit("compiled kernel not built; run `pip install -e . --no-build-isolation`")

    print(f"{'backend':<8} {'area':>4} {'best s':>9} {'median s':>9} {'polyominoes':>12}")
    rows = {}
    for backend in ("native", "python"):
        table, best, med = best_of(
            lambda: enumerator.tally_levels(args.max_area, backend=backend), args.repeat
        )
        total = sum(table.column(enumerator.ALL))
        rows[backend] = (table.levels, best)
        print(f"{backend:<8} {args.max_area:>4} {best:>9.3f} {med:>9.3f} {total:>12}")

    if rows["native"][0] != rows["python"][0]:
        raise SystemExit("kernels disagree")
    print(f"speedup: {rows['python'][1] / rows['native'][1]:.0f}x")

    if args.native_area > args.max_area:
        table, best, med = best_of(lambda: enumerator.tally_levels(args.native_area, backend="native"), 1)
        total = sum(table.column(enumerator.ALL))
        print(f"{'native':<8} {args.native_area:>4} {best:>9.3f} {med:>9.3f} {total:>12}")


if __name__ == "__main__":
    main()
