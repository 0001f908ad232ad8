"""Compare the compiled and pure-Python enumeration kernels.

    python benchmarks/bench_kernels.py [--repeat 3]
"""
import argparse
import time

from rectcum.kernels import backends

CASES = (
    ("set_partition_rgs(11)", lambda k: k.set_partition_rgs(11)),
    ("even_partition_rgs(12)", lambda k: k.even_partition_rgs(12)),
    ("odd_luk_rises(16)", lambda k: k.odd_luk_rises(16)),
    ("luk_to_rgs over L^odd(14)", lambda k: [k.luk_to_rgs(r) for r in k.odd_luk_rises(14)]),
    ("rgs_is_noncrossing over even(12)", lambda k: sum(map(k.rgs_is_noncrossing, k.even_partition_rgs(12)))),
)


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    mods = backends()
    if "cython" not in mods:
        print("compiled extension not built; only the Python backend is available")
    names = list(mods)
    print(f"{'case':<36}" + "".join(f"{n:>12}" for n in names) + ("     speedup" if len(names) == 2 else ""))
    for label, fn in CASES:
        times = [best_of(lambda m=mods[n]: fn(m), args.repeat) for n in names]
        row = f"{label:<36}" + "".join(f"{t * 1e3:>10.1f}ms" for t in times)
        if len(times) == 2:
            row += f"{times[0] / times[1]:>11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
