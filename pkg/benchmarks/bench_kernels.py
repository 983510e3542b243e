"""Numba kernels vs their numpy fallbacks on one synthetic instance.

    python3 benchmarks/bench_kernels.py [--items 200000] [--repeats 5]

Each kernel pair is timed on identical inputs (numba after a warm-up call)
and checked for identical results. Also times a full solve under each
backend by flipping the dispatch flag in-process.
"""
import argparse
import time

import numpy as np

from acq import _accel, _kernels as K
from acq import allocator as al
from acq import datagen as dg


def best_of(fn, repeats):
    best = float("inf")
    out = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--items", type=int, default=200_000)
    ap.add_argument("--repeats", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    if not _accel.HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")

    inst = dg.synthetic_instance(args.items, seed=args.seed)
    lam = al.bisect_lambda(inst)
    qpad, rpad = inst.quota_matrix, inst.reward_matrix
    n = inst.n_items
    out_a = np.empty(n, dtype=np.int64)
    out_b = np.empty(n, dtype=np.int64)
    choice0, used0, _ = al.decide_all(inst, lam * 0.9)   # over capacity, so repair has work

    def repair(use_numba):
        K.USE_NUMBA = use_numba
        c = choice0.copy()
        used = al._downgrade_repair(inst, c, used0)
        return used, c

    def solve(use_numba):
        K.USE_NUMBA = use_numba
        return al.solve(inst).objective

    pairs = {
        "decide": (lambda: K.decide_csr(inst.offsets, inst.quotas, inst.rewards, lam, 0, n, out_a),
                   lambda: K.decide_pad(qpad, rpad, lam, 0, n, out_b)),
        "lagrangian": (lambda: K.lagrangian_csr(inst.offsets, inst.quotas, inst.rewards, lam, 0, n),
                       lambda: K.lagrangian_pad(qpad, rpad, lam, 0, n)),
        "downgrade": (lambda: repair(True), lambda: repair(False)),
        "solve": (lambda: solve(True), lambda: solve(False)),
    }
    print(f"{inst.n_items:,} items, {inst.n_candidates:,} candidates, lambda={lam:.6g}")
    print(f"{'kernel':<12} {'numba (s)':>10} {'numpy (s)':>10} {'speedup':>8}  agree")
    for name, (fast, slow) in pairs.items():
        fast()                                   # compile / warm caches
        reps = 1 if name in ("downgrade", "solve") else args.repeats
        t_fast, r_fast = best_of(fast, reps)
        t_slow, r_slow = best_of(slow, reps)
        if name == "decide":
            agree = np.array_equal(out_a, out_b) and r_fast[0] == r_slow[0]
        elif name == "downgrade":
            agree = r_fast[0] == r_slow[0] and np.array_equal(r_fast[1], r_slow[1])
        else:
            agree = np.isclose(r_fast, r_slow, rtol=1e-12)
        print(f"{name:<12} {t_fast:>10.4f} {t_slow:>10.4f} {t_slow / t_fast:>8.1f}  {agree}")
    K.USE_NUMBA = _accel.USE_NUMBA


if __name__ == "__main__":
    main()
