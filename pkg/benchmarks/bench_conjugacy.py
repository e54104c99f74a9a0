"""Time the conjugacy-class kernel compiled with numba against the pure
Python fallback (``PROPP_DISABLE_JIT=1``).

    python3 benchmarks/bench_conjugacy.py [--lengths 6 8 10] [--words 10] [--seed 0]

Each path runs in its own interpreter so the fallback never touches a
compiled helper.  Both see the same words and must agree on every result;
the script exits nonzero if they do not.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import os
import random
import subprocess
import sys
import time


def worker(lengths: list[int], count: int, seed: int) -> dict:
    import numpy as np

    from propp import kernels
    from propp._jit import JIT_ENABLED
    from propp.band_calculus import _rule_table, encode
    from propp.braid_core import BraidWord, cyclic_reduce

    rep, nrep = _rule_table()
    rng = random.Random(seed)

    def words(n):
        out = []
        while len(out) < count:
            w = BraidWord.band((rng.choice((12, 23, 13)), rng.choice((1, -1))) for _ in range(n))
            if len(cyclic_reduce(w)) == n:
                out.append(encode(w))
        return out

    # compile (or warm up) outside the timed region
    kernels.conjugacy_class(np.array([0, 1, 3, 4], dtype=np.int64), 10, rep, nrep)
    rows = {}
    for n in lengths:
        batch = words(n)
        t0 = time.perf_counter()
        res = [kernels.conjugacy_class(w, 2_000_000, rep, nrep) for w in batch]
        dt = time.perf_counter() - t0
        digest = hashlib.sha256()
        for status, length, codes in res:
            digest.update(f"{int(status)}:{int(length)}:{','.join(map(str, codes.tolist()))};".encode())
        rows[n] = {"seconds": dt, "digest": digest.hexdigest()}
    return {"jit": JIT_ENABLED, "rows": rows}


def spawn(disable: bool, args) -> dict:
    env = dict(os.environ)
    env.pop("PROPP_DISABLE_JIT", None)
    if disable:
        env["PROPP_DISABLE_JIT"] = "1"
    cmd = [sys.executable, __file__, "--worker", "--words", str(args.words), "--seed", str(args.seed),
           "--lengths", *map(str, args.lengths)]
    out = subprocess.run(cmd, env=env, capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--lengths", type=int, nargs="+", default=[6, 8, 10])
    ap.add_argument("--words", type=int, default=10)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--worker", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args()
    if args.worker:
        print(json.dumps(worker(args.lengths, args.words, args.seed)))
        return

    fast, slow = spawn(False, args), spawn(True, args)
    if not fast["jit"] or slow["jit"]:
        raise SystemExit("could not get one compiled and one fallback run")
    print(f"{'length':>6} {'words':>5} {'numba s':>9} {'python s':>9} {'speedup':>8}")
    ok = True
    for n in map(str, args.lengths):
        a, b = fast["rows"][n], slow["rows"][n]
        same = a["digest"] == b["digest"]
        ok &= same
        print(f"{n:>6} {args.words:>5} {a['seconds']:>9.4f} {b['seconds']:>9.4f} "
              f"{b['seconds'] / max(a['seconds'], 1e-9):>7.1f}x{'' if same else '  MISMATCH'}")
    sys.exit(0 if ok else 1)


if __name__ == "__main__":
    main()
