"""Time the state sum with the compiled and the pure-Python kernel.

Each backend runs in its own subprocess so that ``QTAIL_PURE_PYTHON`` takes
effect at import.  Both must produce identical polynomials; the script exits
nonzero if they do not.

    python3 bench/benchmark.py [--repeat R] [--quick]
"""
import argparse
import json
import os
import subprocess
import sys
import time

CASES = [
    ("trefoil", "2: -1 -1 -1", 12),
    ("(2,-7) torus", "2: -1 -1 -1 -1 -1 -1 -1", 12),
    ("figure-eight", "3: 1 -2 1 -2", 10),
    ("(3,4) torus", "3: 1 2 1 2 1 2 1 2", 8),
    ("9_20", "4: 1 1 1 -2 1 3 -2 3 3", 7),
    ("5-strand, 12 letters", "5: 1 -2 3 -4 1 2 -3 4 -1 2 3 -4", 5),
]
QUICK = [(name, word, min(N, 4)) for name, word, N in CASES]


def worker(cases, repeat):
    from qtail.braid import parse_braid
    from qtail.kernels import BACKEND
    from qtail.statesum import jones_statesum

    rows = []
    for name, word, N in cases:
        b = parse_braid(word)
        best = None
        for _ in range(repeat):
            t = time.perf_counter()
            value = jones_statesum(b, N)
            dt = time.perf_counter() - t
            best = dt if best is None else min(best, dt)
        rows.append({"name": name, "N": N, "seconds": best, "value": value.to_json()})
    return {"backend": BACKEND, "rows": rows}


def run_backend(pure, cases, repeat):
    env = dict(os.environ, QTAIL_THREADS="1")
    if pure:
        env["QTAIL_PURE_PYTHON"] = "1"
    else:
        env.pop("QTAIL_PURE_PYTHON", None)
    payload = json.dumps({"cases": cases, "repeat": repeat})
    res = subprocess.run([sys.executable, __file__, "--worker"], input=payload, env=env,
                         capture_output=True, text=True, check=True)
    return json.loads(res.stdout)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="smaller colors")
    ap.add_argument("--worker", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args()
    if args.worker:
        job = json.load(sys.stdin)
        json.dump(worker([tuple(c) for c in job["cases"]], job["repeat"]), sys.stdout)
        return 0

    cases = QUICK if args.quick else CASES
    fast = run_backend(False, cases, args.repeat)
    slow = run_backend(True, cases, args.repeat)
    if fast["backend"] != "cython":
        print("compiled kernel not available; both runs use the pure-Python kernel")
    print(f"{'case':24} {'N':>3} {fast['backend']:>10} {slow['backend']:>10} {'speedup':>8}")
    ok = True
    for a, b in zip(fast["rows"], slow["rows"]):
        same = a["value"] == b["value"]
        ok = ok and same
        mark = "" if same else "  MISMATCH"
        print(f"{a['name']:24} {a['N']:>3} {a['seconds']:>9.3f}s {b['seconds']:>9.3f}s "
              f"{b['seconds'] / a['seconds']:>7.1f}x{mark}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
