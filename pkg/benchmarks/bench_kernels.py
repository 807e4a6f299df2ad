"""Compare the compiled and pure-Python polynomial kernels.

Runs the raw kernels on random packed polynomials, then an end-to-end CSM
computation (every cell of a flag variety) under each backend in a fresh
subprocess, and checks that both backends return identical results.

    python benchmarks/bench_kernels.py [--type B --rank 3] [--repeat 5]
"""

from __future__ import annotations

import argparse
import json
import os
import random
import subprocess
import sys
import timeit

from flagcsm import _kernels_py

try:
    from flagcsm import _kernels as _kernels_c
except ImportError:
    _kernels_c = None


def random_packed(rng: random.Random, nterms: int, nvars: int = 4, maxdeg: int = 6) -> dict:
    out = {}
    for _ in range(nterms):
        key = 0
        for v in range(nvars):
            key |= rng.randint(0, maxdeg) << (8 * v)
        out[key] = rng.randint(-50, 50) or 1
    return out


def bench_raw(repeat: int) -> list[dict]:
    rng = random.Random(0)
    rows = []
    for size in (10, 50, 200):
        a, b = random_packed(rng, size), random_packed(rng, size)
        pairs = [(random_packed(rng, size // 2 + 1), random_packed(rng, size // 2 + 1)) for _ in range(20)]
        ref = _kernels_py.mul(a, b)
        row = {"size": size}
        for name, mod in (("python", _kernels_py), ("cython", _kernels_c)):
            if mod is None:
                continue
            if mod.mul(a, b) != ref or mod.dot(pairs) != _kernels_py.dot(pairs):
                raise SystemExit(f"backend {name} disagrees with the reference at size {size}")
            t_mul = min(timeit.repeat(lambda: mod.mul(a, b), number=20, repeat=repeat)) / 20
            t_dot = min(timeit.repeat(lambda: mod.dot(pairs), number=5, repeat=repeat)) / 5
            row[f"{name}_mul_us"] = round(t_mul * 1e6, 1)
            row[f"{name}_dot_us"] = round(t_dot * 1e6, 1)
        rows.append(row)
    return rows


_WORKLOAD = """
import json, sys, time
from flagcsm import kernels
from flagcsm.cohomology import flag_variety
from flagcsm.csmops import csm
t, r = sys.argv[1], int(sys.argv[2])
sp = flag_variety(t, r)
t0 = time.perf_counter()
digest = {}
for w in sp.points:
    for basis in "XY":
        digest[f"{w}{basis}"] = json.dumps(csm(sp, w, basis).cls.to_json(), sort_keys=True)
print(json.dumps({"backend": kernels.BACKEND, "seconds": time.perf_counter() - t0, "digest": hash(tuple(sorted(digest.items())))}))
"""


def bench_end_to_end(cartan_type: str, rank: int) -> list[dict]:
    rows = []
    for pure in ("1", "0"):
        env = dict(os.environ, FLAGCSM_PURE_PYTHON=pure, PYTHONHASHSEED="0")
        res = subprocess.run(
            [sys.executable, "-c", _WORKLOAD, cartan_type, str(rank)], env=env, capture_output=True, text=True, check=True
        )
        rows.append(json.loads(res.stdout))
    return rows


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--type", default="B")
    p.add_argument("--rank", type=int, default=3)
    p.add_argument("--repeat", type=int, default=5)
    args = p.parse_args(argv)
    if _kernels_c is None:
        print("compiled extension not built; only the pure-Python kernels are timed")
    print("raw kernels (microseconds per call)")
    for row in bench_raw(args.repeat):
        print("  " + "  ".join(f"{k}={v}" for k, v in row.items()))
    print(f"end-to-end: all CSM classes of {args.type}{args.rank} in both bases")
    rows = bench_end_to_end(args.type, args.rank)
    for row in rows:
        print(f"  backend={row['backend']:7s} {row['seconds']:.2f}s")
    if len({row["digest"] for row in rows}) != 1:
        print("  results DIFFER between backends")
        return 1
    if len(rows) == 2 and rows[1]["backend"] == "cython":
        print(f"  speedup {rows[0]['seconds'] / rows[1]['seconds']:.2f}x, identical results")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
