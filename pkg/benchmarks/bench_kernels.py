"""Compare the numba and numpy kernel backends.

Usage: python3 benchmarks/bench_kernels.py [--repeat 5] [--sweep]

Each kernel is run on the same inputs in both backends; the results must agree
exactly before any timing is reported.  Numba timings exclude the first call
(compilation).  ``--sweep`` additionally times ``schubert-trace verify`` end to
end in a fresh interpreter per backend, selected with SCHUBERT_TRACE_NUMBA.
"""
import argparse
import os
import subprocess
import sys
import time
from itertools import combinations

import numpy as np

from schubert_trace import _kernels as K
from schubert_trace.minor_poset import Ambient, enumerate_bi_interval, enumerate_schubert_interval
from schubert_trace.oracle import _bi_arr


def best_of(fn, args, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - t0)
    return min(times)


def cases(rng):
    E = np.array([g.cols for g in enumerate_schubert_interval(Ambient(4, 14))], dtype=np.int64)
    A, B = E[:400], E[-400:]
    w = K.encode_weights(14, 4)
    D = enumerate_bi_interval(Ambient(4, 5))
    s, R, C = _bi_arr(D, 4)
    M = rng.integers(-100, 101, size=(20000, 4, 4))
    P = rng.integers(1, 101, size=(4, 14))
    combos = np.array(list(combinations(range(14), 4)), dtype=np.int64)
    return [
        ("leq_matrix 400x400", "leq_matrix", (A, B)),
        ("join_keys 400x400", "join_keys", (A, B, w)),
        ("meet_keys 400x400", "meet_keys", (A, B, w)),
        (f"bi_leq_matrix {len(D)}x{len(D)}", "bi_leq_matrix", (s, R, C, s, R, C)),
        ("batch_det 20000 4x4", "batch_det", (M,)),
        (f"maximal_minors 4x14 ({len(combos)})", "maximal_minors", (P, combos)),
    ]


def sweep(flag):
    env = dict(os.environ, SCHUBERT_TRACE_NUMBA=flag)
    argv = [sys.executable, "-m", "schubert_trace", "verify", "--max-m", "3", "--max-n", "7", "--trials", "20"]
    t0 = time.perf_counter()
    out = subprocess.run(argv, env=env, capture_output=True)
    return time.perf_counter() - t0, out.returncode, out.stdout


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--sweep", action="store_true", help="also time the full verify sweep per backend")
    args = p.parse_args()
    if not K.HAVE_NUMBA:
        sys.exit("numba is not installed; nothing to compare")

    rng = np.random.default_rng(args.seed)
    print(f"{'kernel':<32} {'numpy [ms]':>11} {'numba [ms]':>11} {'speedup':>8}")
    for label, name, inputs in cases(rng):
        f_np = getattr(K, f"{name}_numpy")
        f_nb = getattr(K, f"{name}_numba")
        if not np.array_equal(f_np(*inputs), f_nb(*inputs)):  # also compiles
            sys.exit(f"{name}: backends disagree")
        t_np = best_of(f_np, inputs, args.repeat)
        t_nb = best_of(f_nb, inputs, args.repeat)
        print(f"{label:<32} {t_np * 1e3:>11.2f} {t_nb * 1e3:>11.2f} {t_np / t_nb:>7.1f}x")

    if args.sweep:
        t_np, rc_np, out_np = sweep("0")
        t_nb, rc_nb, out_nb = sweep("1")
        same = "identical" if out_np == out_nb else "DIFFERENT"
        print(f"\nverify --max-m 3 --max-n 7: numpy {t_np:.2f} s (exit {rc_np}), numba {t_nb:.2f} s (exit {rc_nb}), reports {same}")


if __name__ == "__main__":
    main()
