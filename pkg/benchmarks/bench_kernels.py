"""Time the compiled scan kernel against the numpy fallback on one plan.

Builds the probe plan for a family at the requested size, then drives the
full 2^(mn) candidate scan and a member rescan through both backends,
reporting nanoseconds per candidate and the speedup. Both backends must
return identical answers; the script exits nonzero if they do not.
"""

import argparse
import sys
import time

import numpy as np

from picodes._kernels import _py
from picodes._kernels.plan import build_plan
from picodes.families import FamilySpec, enumerate_family
from picodes.pictures import to_board

try:
    from picodes._kernels import _native
except ImportError:
    _native = None

CHUNK = 1 << 18


def scan_space(backend, plan, space: int) -> tuple[float, int]:
    t0 = time.perf_counter()
    found = -1
    for lo in range(0, space, CHUNK):
        got = backend.scan_range(plan, lo, min(lo + CHUNK, space))
        if got >= 0:
            found = got
            break
    return time.perf_counter() - t0, found


def mask_members(backend, plan, boards) -> tuple[float, int]:
    t0 = time.perf_counter()
    hit = backend.scan_boards(plan, boards)
    return time.perf_counter() - t0, int(np.asarray(hit).sum())


def best_of(fn, repeats: int):
    runs = [fn() for _ in range(repeats)]
    return min(t for t, _ in runs), runs[0][1]


def main() -> int:
    ap = argparse.ArgumentParser(description="scan kernel benchmark")
    ap.add_argument("-m", type=int, default=4, help="rows (default 4)")
    ap.add_argument("-n", type=int, default=5, help="columns (default 5)")
    ap.add_argument("--family", default="Y", help="member family (default Y)")
    ap.add_argument("--repeats", type=int, default=3, help="take the best of this many runs")
    args = ap.parse_args()

    spec = FamilySpec(args.family, args.m, args.n)
    boards = [to_board(p) for p in enumerate_family(spec)]
    space = 1 << (args.m * args.n)
    plan = build_plan(boards, args.m, args.n, include_full=True)
    member_arr = np.asarray(boards, dtype=np.uint64)
    print(f"plan: {spec} members={len(boards)} probes={plan.probe_count} space=2^{args.m * args.n}")

    backends = [("py", _py)]
    if _native is not None:
        backends.append(("native", _native))
    else:
        print("compiled kernel unavailable, timing the fallback only")

    results = {}
    for name, backend in backends:
        t_scan, found = best_of(lambda b=backend: scan_space(b, plan, space), args.repeats)
        t_mask, hits = best_of(lambda b=backend: mask_members(b, plan, member_arr), args.repeats)
        results[name] = (t_scan, found, t_mask, hits)
        print(f"{name:>7}: space scan {t_scan:8.4f}s "
              f"({1e9 * t_scan / space:7.2f} ns/candidate)  "
              f"member rescan {1e6 * t_mask:8.1f} us  survivor={found} hits={hits}")

    if len(results) == 2:
        py, nat = results["py"], results["native"]
        if (py[1], py[3]) != (nat[1], nat[3]):
            print("backends disagree", file=sys.stderr)
            return 1
        print(f"speedup: space scan x{py[0] / nat[0]:.1f}, member rescan x{py[2] / nat[2]:.1f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
