"""Sample the quartic residual variety over several primes and count dimensions.

    python scripts/quartic_dimension.py --primes 11,13,17 --samples 8
"""

import argparse
from collections import Counter
from dataclasses import dataclass

from pfaffcurves.quartic import moduli_dimension_estimate, solve_over_prime_field


@dataclass
class Config:
    primes: tuple = (11, 13, 17)
    samples: int = 8
    budget: int = 10**6
    seed: int = 0


def run(cfg: Config):
    rows = []
    for p in cfg.primes:
        report = solve_over_prime_field(p, cfg.budget, cfg.samples, cfg.seed)
        dim = moduli_dimension_estimate(report.solutions, p)
        rows.append((p, report.attempts, Counter(dim.ranks), dim.dimension))
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--primes", default="11,13,17")
    ap.add_argument("--samples", type=int, default=8)
    ap.add_argument("--budget", type=int, default=10**6)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    cfg = Config(tuple(int(t) for t in args.primes.split(",")), args.samples, args.budget, args.seed)
    print(f"{'p':>5} {'attempts':>9} {'jacobian ranks':>20} {'dimension':>10}")
    for p, attempts, ranks, dim in run(cfg):
        hist = ",".join(f"{r}x{n}" for r, n in sorted(ranks.items()))
        print(f"{p:>5} {attempts:>9} {hist:>20} {dim:>10}")


if __name__ == "__main__":
    main()
