"""Tabulate Pf(adj A) / Pf(A)^(k-1) and adj(adj A) / (Pf(A)^(k-2) A) by size.

With adj A * A = Pf(A) * Id both ratios come out as (-1)^k for n = 2k.

    python scripts/adjoint_sign_table.py --sizes 4,6,8,10
"""

import argparse
import random
from dataclasses import dataclass

from pfaffcurves.field import QQ
from pfaffcurves.skew import SkewPolyMatrix, pfaffian, pfaffian_adjoint


@dataclass
class Config:
    sizes: tuple = (4, 6, 8, 10)
    trials: int = 3
    seed: int = 0


def ratios(n, rng):
    k = n // 2
    A = SkewPolyMatrix.random_constant(n, QQ, rng)
    P = pfaffian(A).constant_value()
    if not P:
        return None
    adj = pfaffian_adjoint(A)
    first = pfaffian(adj).constant_value() / P ** (k - 1)
    double = pfaffian_adjoint(adj)
    second = double[0, 1].constant_value() / (P ** (k - 2) * A[0, 1].constant_value())
    return first, second


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="4,6,8,10")
    ap.add_argument("--trials", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    cfg = Config(tuple(int(t) for t in args.sizes.split(",")), args.trials, args.seed)
    rng = random.Random(cfg.seed)
    print(f"{'n':>3} {'Pf(adj)/Pf^(k-1)':>18} {'adj(adj)/(Pf^(k-2) A)':>22}")
    for n in cfg.sizes:
        seen = set()
        for _ in range(cfg.trials):
            r = ratios(n, rng)
            if r:
                seen.add(r)
        for first, second in sorted(seen):
            print(f"{n:>3} {str(first):>18} {str(second):>22}")


if __name__ == "__main__":
    main()
