"""Compare the compiled and pure-Python integer kernels.

    python benchmarks/bench_kernels.py [--repeat 5] [--json]

Both kernel modules are imported directly, so the comparison does not depend
on which one the package picked at import time.
"""

import argparse
import json
import sys
import timeit

from heckeperiod import _pykernels

try:
    from heckeperiod import _ckernels
except ImportError:
    _ckernels = None


def _lns_sweep(k, level):
    for p, r in k.farey_pairs(level):
        if r and 0 <= p < r:
            k.lns_pairs(p, r)


def _scan_sweep(k, level):
    for p, r in k.farey_pairs(level):
        if r:
            k.left_neighbor_scan(p, r, k.level_of(p, r) or 1)


CASES = [
    ("farey_pairs(2000)", lambda k: k.farey_pairs(2000)),
    ("lns over [0,1) at level 150", lambda k: _lns_sweep(k, 150)),
    ("left_neighbor_scan at level 120", lambda k: _scan_sweep(k, 120)),
    ("s_m_quads(400)", lambda k: k.s_m_quads(400)),
]


def run(repeat=5):
    rows = []
    for name, fn in CASES:
        py = min(timeit.repeat(lambda: fn(_pykernels), number=1, repeat=repeat))
        row = {"case": name, "python_s": py}
        if _ckernels is not None:
            assert fn(_ckernels) == fn(_pykernels), name
            c = min(timeit.repeat(lambda: fn(_ckernels), number=1, repeat=repeat))
            row.update(compiled_s=c, speedup=py / c)
        rows.append(row)
    return rows


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)
    rows = run(args.repeat)
    if args.json:
        print(json.dumps(rows, indent=2))
        return 0
    if _ckernels is None:
        print("compiled kernels not built; showing pure-Python timings only", file=sys.stderr)
    print("%-34s %12s %12s %9s" % ("case", "python [s]", "compiled [s]", "speedup"))
    for r in rows:
        if "compiled_s" in r:
            print("%-34s %12.4f %12.4f %8.1fx" % (r["case"], r["python_s"], r["compiled_s"], r["speedup"]))
        else:
            print("%-34s %12.4f %12s %9s" % (r["case"], r["python_s"], "-", "-"))
    return 0


if __name__ == "__main__":
    sys.exit(main())
