"""Time the numba kernels against their numpy twins and check they agree.

    python3 benchmarks/bench_kernels.py [--size N] [--repeat R] [--end-to-end]

``--end-to-end`` also times ``dwgen generate`` on the star preset with each
backend in a subprocess (numba compile time excluded after the first run via
its on-disk cache).
"""
import argparse
import os
import subprocess
import sys
import tempfile
import time
import timeit

import numpy as np

from dwgen.kernels import numpy_impl

try:
    from dwgen.kernels import numba_impl
except ImportError:
    numba_impl = None


def cases(n):
    rng = np.random.default_rng(0)
    u1, u2 = rng.random(n), rng.random(n)
    history = rng.integers(0, 2 ** 63, 98, dtype=np.uint64)
    words = rng.integers(0, 2 ** 63, n, dtype=np.uint64)
    radices = np.array([60, 60, 60, 60], dtype=np.int64)
    flat = rng.integers(0, int(np.prod(radices)), n, dtype=np.int64)
    return {
        "splitmix64_fill": lambda m: m.splitmix64_fill(np.uint64(1234567), n),
        "gfsr_fill": lambda m: m.gfsr_fill(history.copy(), n),
        "to_unit": lambda m: m.to_unit(words),
        "gaussian_pick": lambda m: m.gaussian_pick(u1, u2, 1000, 0.2),
        "uniform_pick": lambda m: m.uniform_pick(u1, 256),
        "bernoulli_retain": lambda m: m.bernoulli_retain(u1, 0.6, 0),
        "decode_mixed_radix": lambda m: m.decode_mixed_radix(flat, radices),
        "cents": lambda m: m.cents(u1, 10000.0),
    }


def same(a, b):
    if isinstance(a, tuple):
        return all(same(x, y) for x, y in zip(a, b))
    return np.array_equal(np.asarray(a), np.asarray(b))


def bench_kernels(n, repeat):
    print(f"kernel               numpy ms   numba ms   speedup  equal   (n={n:,})")
    for name, call in cases(n).items():
        t_np = min(timeit.repeat(lambda: call(numpy_impl), number=1, repeat=repeat)) * 1e3
        if numba_impl is None:
            print(f"{name:<20} {t_np:9.2f}   (numba unavailable)")
            continue
        call(numba_impl)  # compile
        t_nb = min(timeit.repeat(lambda: call(numba_impl), number=1, repeat=repeat)) * 1e3
        ok = same(call(numpy_impl), call(numba_impl))
        print(f"{name:<20} {t_np:9.2f} {t_nb:10.2f} {t_np / t_nb:9.2f}x  {ok}")


def bench_end_to_end(preset):
    print(f"\ndwgen generate --preset {preset}")
    for label, flag in (("numba", "0"), ("numpy", "1")):
        env = dict(os.environ, DWGEN_DISABLE_NUMBA=flag)
        with tempfile.TemporaryDirectory() as out:
            cmd = [sys.executable, "-m", "dwgen", "generate", "--preset", preset, "--out", out]
            subprocess.run(cmd, env=env, check=True, capture_output=True)  # warm caches
            start = time.perf_counter()
            subprocess.run(cmd, env=env, check=True, capture_output=True)
            print(f"  {label:<6} {time.perf_counter() - start:7.2f}s")


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--size", type=int, default=1_000_000)
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--end-to-end", action="store_true")
    parser.add_argument("--preset", default="star")
    args = parser.parse_args(argv)
    bench_kernels(args.size, args.repeat)
    if args.end_to_end:
        bench_end_to_end(args.preset)


if __name__ == "__main__":
    main()
