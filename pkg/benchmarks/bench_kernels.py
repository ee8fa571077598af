"""Numba kernels versus their numpy fallbacks.

Each kernel runs on the same inputs in both flavours; outputs are compared
and the best-of-N wall time is printed. A final section times a full decode
in a subprocess with and without ``TGRS_NO_NUMBA``.

    python benchmarks/bench_kernels.py [--repeats 5]
"""

from __future__ import annotations

import argparse
import os
import subprocess
import sys
import time

import numpy as np

from tgrs import _kernels, field_new
from tgrs._accel import HAVE_NUMBA


def best_of(fn, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def same(a, b) -> bool:
    if isinstance(a, tuple):
        return all(same(x, y) for x, y in zip(a, b))
    return bool(np.array_equal(np.asarray(a), np.asarray(b)))


def cases(rng: np.random.Generator):
    F16 = field_new(2, 4)
    F13 = field_new(13)
    F256 = field_new(2, 8)

    M = F256.random(rng, (64, 129))
    yield "rref 64x129 GF(256)", lambda k: k.rref_jit, lambda k: k.rref_np, (M, *F256.kernel_args)

    A, B = F256.random(rng, (128, 128)), F256.random(rng, (128, 128))
    yield "matmul 128^3 GF(256)", lambda k: k.matmul_jit, lambda k: k.matmul_np, (A, B, *F256.kernel_args)

    G = F16.random(rng, (5, 12))
    exp, log, p, m, q = F16.kernel_args
    scaled = np.ascontiguousarray(_kernels.scaled_rows(G, exp, log, q))
    off = np.zeros(12, dtype=np.int64)
    yield "codeword enumeration [12,5] GF(16)", lambda k: k.coset_weights_jit, lambda k: k.coset_weights_np, (
        scaled, off, p, m)

    H = F13.random(rng, (4, 10))
    e = np.arange(13)
    cols = np.ascontiguousarray(F13.mul(H.T[:, None, :], e[None, :, None]))
    qpow = 13 ** np.arange(4, dtype=np.int64)
    yield "syndrome cover [10,6] GF(13)", lambda k: k.syndrome_cover_jit, lambda k: k.syndrome_cover_np, (
        cols, qpow, 13, 1)

    H2 = F256.random(rng, (8, 20))
    yield "dependent columns 8x20 GF(256)", lambda k: k.smallest_dependent_jit, lambda k: k.smallest_dependent_np, (
        H2, 9, *F256.kernel_args)


DECODE_SNIPPET = """
import time, numpy as np
from tgrs import TwistedSpec, decode, etgrs, field_new
F = field_new(2, 8); rng = np.random.default_rng(0); n = {n}
spec = TwistedSpec(F, tuple(range(1, n + 1)), (1,) * n, 3, n // 2, True)
C = etgrs(spec); y = C.random_codeword(rng); y[:3] ^= 1
decode(spec, y)
best = min((lambda t0: (decode(spec, y), time.perf_counter() - t0)[1])(time.perf_counter()) for _ in range({r}))
print(best)
"""


def decode_time(n: int, repeats: int, numba: bool) -> float:
    env = dict(os.environ)
    if numba:
        env.pop("TGRS_NO_NUMBA", None)
    else:
        env["TGRS_NO_NUMBA"] = "1"
    out = subprocess.run(
        [sys.executable, "-c", DECODE_SNIPPET.format(n=n, r=repeats)], env=env, capture_output=True, text=True,
        check=True,
    )
    return float(out.stdout.strip())


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--repeats", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    if not HAVE_NUMBA:
        sys.exit("numba is not installed; nothing to compare")

    rng = np.random.default_rng(args.seed)
    print(f"{'kernel':<36}{'numba ms':>12}{'numpy ms':>12}{'speedup':>10}  match")
    for name, jit_of, np_of, kargs in cases(rng):
        jit_fn, np_fn = jit_of(_kernels), np_of(_kernels)
        r1 = jit_fn(*[a.copy() if isinstance(a, np.ndarray) else a for a in kargs])  # compile
        r2 = np_fn(*[a.copy() if isinstance(a, np.ndarray) else a for a in kargs])
        tj = best_of(lambda: jit_fn(*kargs), args.repeats)
        tn = best_of(lambda: np_fn(*kargs), args.repeats)
        print(f"{name:<36}{tj * 1e3:>12.3f}{tn * 1e3:>12.3f}{tn / tj:>9.1f}x  {same(r1, r2)}")

    print()
    print(f"{'decode, GF(256), n':<36}{'numba ms':>12}{'numpy ms':>12}{'speedup':>10}")
    for n in (16, 32, 64, 128):
        tj = decode_time(n, args.repeats, True)
        tn = decode_time(n, args.repeats, False)
        print(f"{n:<36}{tj * 1e3:>12.3f}{tn * 1e3:>12.3f}{tn / tj:>9.1f}x")


if __name__ == "__main__":
    main()
