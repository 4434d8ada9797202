"""Time the compiled and numpy kernel backends on the same workloads.

    python3 bench/bench_kernels.py [--repeat N]
"""

import argparse
import time

import numpy as np

from gaugeca import kernels
from gaugeca.space import Space


def workloads(space, rng):
    t = space.table
    psi = space.random_matter(20_000, rng)
    field = space.random_fields(20_000, rng)
    g = space.random_transforms(20_000, rng)
    few = slice(0, 2_000)
    return {
        "step_ra (20k states)": lambda k: k.step_ra(t.act, t.inv, psi, field),
        "gauge action (20k states)": lambda k: (
            k.gauge_matter(t.act, g, psi),
            k.gauge_field(t.mul, t.inv, g, field),
        ),
        "orbit_min_keys (2k states)": lambda k: k.orbit_min_keys(
            t.act, t.mul, t.inv, space.all_transforms, psi[few], field[few], space.K, space.P
        ),
        "fixed_counts (2k states)": lambda k: k.fixed_counts(
            t.act, t.mul, t.inv, space.all_transforms, psi[few], field[few]
        ),
    }


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--L", type=int, default=3)
    parser.add_argument("--K", type=int, default=3)
    args = parser.parse_args()

    backends = kernels.available_backends()
    space = Space(args.L, args.K)
    jobs = workloads(space, np.random.default_rng(0))
    names = sorted(backends)
    print(f"L={args.L} K={args.K}, best of {args.repeat}")
    print(f"{'workload':30}" + "".join(f"{n:>12}" for n in names) + ("     speedup" if len(names) > 1 else ""))
    for label, job in jobs.items():
        secs = {n: best_of(lambda: job(backends[n]), args.repeat) for n in names}
        row = f"{label:30}" + "".join(f"{secs[n] * 1000:>10.2f}ms" for n in names)
        if "cython" in secs:
            row += f"{secs['numpy'] / secs['cython']:>11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
