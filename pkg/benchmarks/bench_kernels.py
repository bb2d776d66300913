"""Compare the numba and numpy closure kernels on random seed sets.

    python benchmarks/bench_kernels.py --sizes 4 5 6 --repeat 5
"""

import argparse
import random
import time

import numpy as np

from semigraphoid import _kernels
from semigraphoid.core import Universe, enumerate_all_triplets


def seed_sets(n, count, rng):
    triples = [t.oriented for t in enumerate_all_triplets(Universe.of_size(n)).ordered()]
    return [_kernels.encode_many(n, rng.sample(triples, rng.randint(1, 4))) for _ in range(count)]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        started = time.perf_counter()
        fn()
        times.append(time.perf_counter() - started)
    return min(times)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[4, 5, 6])
    parser.add_argument("--cases", type=int, default=50)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)

    backends = [b for b in _kernels.BACKENDS if b != "numba" or _kernels.numba is not None]
    _kernels.warm_up()
    rng = random.Random(args.seed)
    print(f"{'n':>3} {'mode':>6} " + " ".join(f"{b:>12}" for b in backends) + "   speedup")
    for n in args.sizes:
        seeds = seed_sets(n, args.cases, rng)
        for strong in (False, True):
            results = {}
            for backend in backends:
                def work():
                    return [_kernels.closure(n, s, strong_union=strong, backend=backend) for s in seeds]
                results[backend] = (best_of(work, args.repeat), work())
            if len(backends) == 2:
                assert all(np.array_equal(x, y) for x, y in zip(results["numba"][1], results["numpy"][1]))
            cols = " ".join(f"{results[b][0] * 1000:10.1f}ms" for b in backends)
            speed = f"{results['numpy'][0] / results['numba'][0]:8.1f}x" if len(backends) == 2 else ""
            print(f"{n:>3} {'stab' if strong else 'sem':>6} {cols} {speed}")


if __name__ == "__main__":
    main()
