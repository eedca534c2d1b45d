"""Compare the compiled and pure-numpy kernel backends.

Runs the GF(2) rank kernel and both search kernels on identical inputs
with each backend and prints wall times plus the speedup ratio.  Results
are asserted equal before timing is reported.

Usage: python3 benchmarks/bench_kernels.py
"""

import random
import time

from freqrect.kernels import _fallback

try:
    from freqrect.kernels import _numba
except ImportError:
    _numba = None


def timed(fn, *args, repeat=3):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return out, best


def bench(name, fn_name, *args):
    slow, t_np = timed(getattr(_fallback, fn_name), *args)
    line = f"{name:<28} numpy {t_np * 1e3:9.2f} ms"
    if _numba is not None:
        fast, t_nb = timed(getattr(_numba, fn_name), *args)
        assert slow == fast, name
        line += f"   numba {t_nb * 1e3:9.2f} ms   x{t_np / max(t_nb, 1e-9):.1f}"
    print(line)


def main():
    if _numba is None:
        print("numba backend unavailable; timing the numpy fallback only")

    rng = random.Random(7)
    rows = [rng.getrandbits(96) | 1 for _ in range(64)]
    slow, t_np = timed(lambda: [_fallback.gf2_rank_rows(rows, 96)
                                for _ in range(500)])
    print(f"{'gf2 rank 64x96 (x500)':<28} numpy {t_np * 1e3:9.2f} ms", end="")
    if _numba is not None:
        fast, t_nb = timed(lambda: [_numba.gf2_rank_rows(rows, 96)
                                    for _ in range(500)])
        assert slow == fast
        print(f"   numba {t_nb * 1e3:9.2f} ms   x{t_np / max(t_nb, 1e-9):.1f}")
    else:
        print()

    bench("span search n=7 t=4", "ind_search_span", 7, 4, 10 ** 9)
    bench("span search n=8 t=5", "ind_search_span", 8, 5, 10 ** 9)

    mask = (1 << 3) - 1
    cand = [w for w in range(1, 1 << 5) if (w >> 3) and (w & mask)]
    bench("plain search N=2+3 t=3", "ind_search_plain", 5, 3, cand, 10 ** 9)


if __name__ == "__main__":
    main()
