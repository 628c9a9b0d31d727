"""Compare the compiled and pure-Python rank kernels on centralizer systems.

    python benchmarks/bench_rank.py [--size 5] [--repeat 3]
"""
import argparse
import time

from nilorbits import exactlin
from nilorbits.realize import centralizer_rows, realize
from nilorbits.orbit_enum import enumerate_orbits
from nilorbits.verify import forms_up_to


def systems(size):
    out = []
    for form in forms_up_to(size):
        for o in enumerate_orbits(form):
            if o.fiber_index == 1:
                out.append(centralizer_rows(realize(o), form))
    return out


def run(backend, work, repeat):
    best = float("inf")
    ranks = None
    for _ in range(repeat):
        t = time.perf_counter()
        ranks = [exactlin.sparse_real_rank(rows, n, backend) for rows, n in work]
        best = min(best, time.perf_counter() - t)
    return best, ranks


def densified(work):
    """The same systems as dense integer matrices, with no singleton peeling.

    Random dense integer matrices are a poor fit here: fraction-free
    elimination on them leaves int64 within a few pivots and the compiled
    kernel just falls back.
    """
    out = []
    for rows, n in work:
        dense = []
        for r in rows:
            if r:
                row = [0] * n
                for c, v in r.items():
                    row[c] = int(v)
                dense.append(row)
        out.append(dense)
    return out


def run_dense(backend, mats, repeat):
    best = float("inf")
    ranks = None
    for _ in range(repeat):
        t = time.perf_counter()
        ranks = [exactlin.int_rank(M, len(M[0]), backend) for M in mats]
        best = min(best, time.perf_counter() - t)
    return best, ranks


def report(label, t_py, r_py, runner):
    print(f"{label}: python  {t_py:8.3f} s")
    if not exactlin.HAVE_CYTHON:
        print(f"{label}: cython  not built")
        return
    t_cy, r_cy = runner()
    assert r_cy == r_py, "backends disagree"
    print(f"{label}: cython  {t_cy:8.3f} s   speedup x{t_py / t_cy:.1f}")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--size", type=int, default=5)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    work = systems(args.size)
    print(f"{len(work)} systems, largest has {max(n for _, n in work)} unknowns")
    t_py, r_py = run("python", work, args.repeat)
    report("centralizer systems", t_py, r_py, lambda: run("cython", work, args.repeat))
    mats = densified(work)
    t_py, r_py = run_dense("python", mats, args.repeat)
    report("dense kernel only  ", t_py, r_py, lambda: run_dense("cython", mats, args.repeat))


if __name__ == "__main__":
    main()
