"""Survey the Weierstrass cubic family over small primes.

For each (alpha, beta) and prime, enumerate the determinantal representations,
check the pfaffian scale, and tabulate the corank of every representation at
every curve point.

    python scripts/cubic_family_survey.py --curves 0,1:1,1:2,3 --primes 5,7,11,13
"""

import argparse
import warnings
from collections import Counter
from dataclasses import dataclass

from pfaffcurves.cubic import WeierstrassCurve, cubic_pfaffian, enumerate_affine_points
from pfaffcurves.field import GF
from pfaffcurves.linalg import const_rank
from pfaffcurves.poly import curve_points


@dataclass
class Config:
    curves: tuple = ((0, 1), (1, 1), (2, 3))
    primes: tuple = (5, 7, 11, 13)


def survey(alpha, beta, p):
    curve = WeierstrassCurve(alpha, beta, GF(p))
    pts = curve_points(curve.poly, curve.field)
    scales, coranks = Counter(), Counter()
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        reps = [cubic_pfaffian(curve, s, l) for s, l in enumerate_affine_points(curve)]
    for rep in reps:
        scales[rep.scale] += 1
        for pt in pts:
            coranks[6 - const_rank(curve.field, rep.matrix.evaluate(pt))] += 1
    return curve.smooth_candidate, len(reps), len(pts), scales, coranks


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--curves", default="0,1:1,1:2,3")
    ap.add_argument("--primes", default="5,7,11,13")
    args = ap.parse_args()
    cfg = Config(
        tuple(tuple(int(v) for v in c.split(",")) for c in args.curves.split(":")),
        tuple(int(t) for t in args.primes.split(",")),
    )
    print(f"{'curve':>8} {'p':>4} {'smooth':>6} {'reps':>5} {'points':>6}  scales  coranks")
    for a, b in cfg.curves:
        for p in cfg.primes:
            smooth, nreps, npts, scales, coranks = survey(a, b, p)
            sc = ",".join(f"{k}x{v}" for k, v in sorted(scales.items()))
            co = ",".join(f"{k}x{v}" for k, v in sorted(coranks.items()))
            print(f"{f'({a},{b})':>8} {p:>4} {'yes' if smooth else 'no':>6} {nreps:>5} {npts:>6}  {sc}  {co}")


if __name__ == "__main__":
    main()
