"""Compiled vs pure-Python simplex kernel.

Records every simplex call made while running a short theorem suite, then
replays the recorded problems through both kernels and reports wall time.

    python benchmarks/bench_kernel.py [--trials N] [--seed S] [--repeat R]
"""
import argparse
import time

from polycal import _kernel_py, lp
from polycal.harness import TheoremId, run_suite

try:
    from polycal import _kernel as compiled
except ImportError:  # pragma: no cover
    compiled = None


def record(trials, seed):
    calls = []
    active = lp._kernel

    class Recorder:
        @staticmethod
        def simplex(M, r, c, hint=None):
            calls.append(([list(row) for row in M], list(r), list(c), list(hint) if hint else None))
            return active.simplex(M, r, c, hint)

    lp._kernel = Recorder
    try:
        run_suite(list(TheoremId), trials, seed)
    finally:
        lp._kernel = active
    return calls


def replay(kernel, calls, repeat):
    best = float("inf")
    results = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        results = [kernel.simplex([list(row) for row in M], list(r), list(c), h) for M, r, c, h in calls]
        best = min(best, time.perf_counter() - t0)
    return best, results


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=2)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    calls = record(args.trials, args.seed)
    sizes = [len(M) * len(c) for M, _, c, _ in calls]
    print(f"recorded {len(calls)} LPs from {args.trials} trial(s) per theorem; "
          f"tableau entries: mean {sum(sizes) / len(sizes):.0f}, max {max(sizes)}")
    t_py, res_py = replay(_kernel_py, calls, args.repeat)
    print(f"{'python':>10}: {t_py:8.3f} s")
    if compiled is None:
        print(f"{'compiled':>10}: not built")
        return
    t_c, res_c = replay(compiled, calls, args.repeat)
    same = all(a[0] == b[0] and tuple(a[1]) == tuple(b[1]) for a, b in zip(res_py, res_c))
    print(f"{'compiled':>10}: {t_c:8.3f} s")
    print(f"{'speedup':>10}: {t_py / t_c:8.2f} x   (identical results: {same})")


if __name__ == "__main__":
    main()
