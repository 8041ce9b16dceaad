"""Compare the compiled mod-p rank kernel against the pure-Python fallback.

Usage: python3 benchmarks/bench_rank.py [--sizes 64,128,256] [--repeats 3]

Matrices are random over F_p with a mix of full-rank and deficient cases;
both backends are checked for agreement (and against exact Bareiss rank on
the small sizes) before timing.
"""

import argparse
import random
import time

from polysyz import _rank_fallback
from polysyz.intlinalg import exact_rank
from polysyz.ranks import BACKEND, _PRIMES

try:
    from polysyz import _fastrank
except ImportError:
    _fastrank = None

import numpy as np

P = _PRIMES[0]


def random_matrix(rng, n, rank_deficit=0):
    # small entries so rank over Q, over F_p, and in int64 all agree
    r = n - rank_deficit
    a = [[rng.randrange(-50, 51) for _ in range(n)] for _ in range(r)]
    # pad with random integer combinations of the first r rows
    for _ in range(rank_deficit):
        support = rng.sample(range(r), min(3, r))
        coeffs = [rng.choice((-2, -1, 1, 2)) for _ in support]
        a.append(
            [sum(c * a[s][j] for c, s in zip(coeffs, support)) for j in range(n)]
        )
    rng.shuffle(a)
    return a


def bench(fn, mats, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        for m in mats:
            fn(m)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", default="32,64,128,256")
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]
    rng = random.Random(2024)

    print(f"active backend: {BACKEND}   prime: {P}")
    header = f"{'n':>5} {'cases':>5} {'python (s)':>12}"
    if _fastrank is not None:
        header += f" {'compiled (s)':>13} {'speedup':>8}"
    print(header)

    for n in sizes:
        mats = [random_matrix(rng, n, deficit) for deficit in (0, 1, n // 4)]
        arrays = [np.array(m, dtype=np.int64) for m in mats]

        expected = [_rank_fallback.rank_mod_p(a.copy(), P) for a in arrays]
        if n <= 64:
            assert expected == [exact_rank(m) for m in mats], "fallback disagrees with exact rank"
        if _fastrank is not None:
            got = [_fastrank.rank_mod_p(a.copy(), P) for a in arrays]
            assert got == expected, "compiled kernel disagrees with fallback"

        t_py = bench(lambda a: _rank_fallback.rank_mod_p(a.copy(), P), arrays, args.repeats)
        line = f"{n:>5} {len(mats):>5} {t_py:>12.4f}"
        if _fastrank is not None:
            t_c = bench(lambda a: _fastrank.rank_mod_p(a.copy(), P), arrays, args.repeats)
            line += f" {t_c:>13.4f} {t_py / t_c:>7.1f}x"
        print(line)


if __name__ == "__main__":
    main()
