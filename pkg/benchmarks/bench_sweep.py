"""Time the compiled and pure-Python sweep kernels on the same workloads.

    python benchmarks/bench_sweep.py [--bound 1500] [--repeat 3]
"""
import argparse
import time

import numpy as np

from carlos_scales import kernels
from carlos_scales.analysis import CARLOS2, CARLOS3, PENTATONIC, enumerate_params


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--bound", type=int, default=1500, help="upper bound for two-parameter families")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    workloads = [
        ("carlos2", CARLOS2, (args.bound, args.bound)),
        ("pentatonic", PENTATONIC, (args.bound // 2, args.bound)),
        ("carlos3", CARLOS3, (args.bound // 15,) * 3),
    ]
    backends = kernels.available_backends()
    print(f"backends: {', '.join(backends)}")
    print(f"{'family':<12}{'rows':>10}" + "".join(f"{b + ' s':>14}" for b in backends) + f"{'speedup':>10}  identical")
    for name, family, bounds in workloads:
        steps = family.steps_matrix(enumerate_params(family, bounds))
        log2s = [iv.log2 for iv in family.intervals]
        cents = [iv.cents for iv in family.intervals]
        times, results = {}, {}
        for b in backends:
            times[b], results[b] = best_of(lambda: kernels.sweep(steps, log2s, cents, backend=b), args.repeat)
        same = all(
            np.array_equal(results[b][0], results["python"][0]) and np.array_equal(results[b][1], results["python"][1])
            for b in backends
        )
        speed = times["python"] / times["compiled"] if "compiled" in times else 1.0
        print(f"{name:<12}{len(steps):>10}" + "".join(f"{times[b]:>14.4f}" for b in backends) + f"{speed:>9.0f}x  {same}")


if __name__ == "__main__":
    main()
