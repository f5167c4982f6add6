"""Compare the numba and numpy sign kernels on lattice balls.

    python3 benchmarks/bench_kernels.py [--radius R] [--repeat N]

Both backends must agree point for point; the script exits nonzero if they
do not.  The exact scalar path is timed on a small sample for scale.
"""

import argparse
import sys
import time

import numpy as np

from ordlab import kernels
from ordlab.orders import classify, lattice_ball, make_order
from ordlab.scalars import ExactScalar


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--radius", type=int, nargs="+", default=[10, 20, 30])
    p.add_argument("--repeat", type=int, default=5)
    args = p.parse_args(argv)

    basis = (2, 3, 5)
    v = (ExactScalar.sqrt(2, basis), ExactScalar.sqrt(3, basis), ExactScalar.sqrt(5, basis),
         ExactScalar.rational(-1, basis))
    P = make_order(4, [v], complete=True)
    coef = P._coef
    print(f"backend default: {kernels.backend()}  (ORDLAB_KERNEL=numpy forces numpy)")
    if kernels._classify_numba is None:
        print("numba not importable; only the numpy path is timed")

    # compile outside the timings
    kernels.classify_points(coef, basis, lattice_ball(4, 2), "numba")

    print(f"{'radius':>6} {'points':>9} {'numpy s':>9} {'numba s':>9} {'speedup':>8} {'undecided':>9}")
    for r in args.radius:
        pts = lattice_ball(4, r)
        t_np, (s_np, _) = best_of(lambda: kernels.classify_points(coef, basis, pts, "numpy"), args.repeat)
        t_nb, (s_nb, _) = best_of(lambda: kernels.classify_points(coef, basis, pts, "numba"), args.repeat)
        if not np.array_equal(s_np, s_nb):
            print(f"backends disagree at radius {r}", file=sys.stderr)
            return 1
        undecided = int((s_np == kernels.UNDECIDED).sum())
        print(f"{r:>6} {len(pts):>9} {t_np:>9.4f} {t_nb:>9.4f} {t_np / t_nb:>8.1f} {undecided:>9}")

    sample = lattice_ball(4, 6)[:2000]
    t_exact, _ = best_of(lambda: [classify(P, tuple(int(x) for x in w)) for w in sample], 1)
    print(f"exact path: {len(sample)} points in {t_exact:.3f}s "
          f"({t_exact / len(sample) * 1e6:.0f} us/point)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
