"""Command line front end: ``pfaffcurves <verb> <subverb> [files] [flags]``.

Every handler only parses inputs, calls library functions and formats the
result as ``key = value`` lines.  Exit codes: 0 success, 2 parse error,
3 verification failure, 4 budget exhausted.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import cubic, io, quartic, reps, skew
from .errors import ParseError, PfaffError
from .field import GF, QQ, parse_field
from .poly import parse_poly

DEFAULT_BUDGET = 10**6


class Report:
    def __init__(self):
        self.lines: list[str] = []

    def kv(self, key, value):
        self.lines.append(f"{key} = {value}")

    def raw(self, text: str):
        self.lines.extend(text.rstrip("\n").splitlines())

    def text(self) -> str:
        return "\n".join(self.lines) + "\n"


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _field(args, default=None):
    if args.field is None:
        return default
    return parse_field(args.field)


def _primes(args, default):
    if not args.primes:
        return default
    try:
        return [int(t) for t in args.primes.split(",") if t.strip()]
    except ValueError:
        raise ParseError(f"bad prime list {args.primes!r}") from None


def _load_pfaffian(path, field):
    text = _read(path)
    head = text.lstrip().split(None, 1)[0] if text.strip() else ""
    if head == "skew":
        A, curve = io.read_skew(text, field)
        if curve is None:
            raise ParseError("skew matrix file needs a 'curve' line for verification")
        return reps.PfaffianRep.build(A, curve)
    return io.read_pfaffrep(text, field)


# pf ----------------------------------------------------------------------


def cmd_pf(args, out: Report):
    field = _field(args)
    if args.sub == "verify":
        rep = _load_pfaffian(args.file, field)
        out.kv("c", rep.field.fmt(rep.scale))
        out.kv("size", rep.size)
        out.kv("curve", rep.curve.fmt())
        return
    S, _ = io.read_skew(_read(args.file), field)
    if args.sub == "compute":
        out.kv("pfaffian", skew.pfaffian(S).fmt())
    elif args.sub == "adjoint":
        out.raw(io.write_skew(skew.pfaffian_adjoint(S)))


# det ---------------------------------------------------------------------


def cmd_det(args, out: Report):
    rep = io.read_detrep(_read(args.file), _field(args))
    if args.sub == "verify":
        out.kv("c", rep.field.fmt(rep.scale))
        out.kv("size", rep.size)
    elif args.sub == "adjugate":
        adj = reps.matrix_adjugate(rep)
        for i, row in enumerate(adj):
            for j, e in enumerate(row):
                if e:
                    out.kv(f"adj {i + 1} {j + 1}", e.fmt())
    elif args.sub == "lift":
        lifted = reps.decomposable_pfaffian(rep)
        out.kv("c", lifted.field.fmt(lifted.scale))
        out.raw(io.write_pfaffrep(lifted.matrix, lifted.curve))


# construct ---------------------------------------------------------------


def cmd_construct(args, out: Report):
    section = io.read_section_matrix(_read(args.file), _field(args))
    rep = reps.representation_from_B(section)
    out.kv("c", rep.field.fmt(rep.scale))
    out.raw(io.write_pfaffrep(rep.matrix, rep.curve))


# cubic -------------------------------------------------------------------


def cmd_cubic(args, out: Report):
    field = _field(args, QQ)
    curve = cubic.WeierstrassCurve(args.alpha, args.beta, field)
    if args.sub == "family":
        out.kv("curve", curve.poly.fmt())
        out.kv("field", field.descriptor)
        out.kv("discriminant", field.fmt(curve.discriminant))
        out.kv("smooth_candidate", "yes" if curve.smooth_candidate else "no")
        out.kv("determinantal", "x0*Id + x2*N + x1*C(s,l), l^2 = s^3 + alpha*s + beta")
        out.kv("pfaffian", "[[0, M], [-M^t, 0]]")
        if field.characteristic:
            pts = cubic.enumerate_affine_points(curve)
            signs = set()
            for s, l in pts:
                signs.add(field.fmt(cubic.cubic_pfaffian(curve, s, l).scale))
            out.kv("representations", len(pts))
            out.kv("pfaffian_scales", ",".join(sorted(signs)))
    elif args.sub == "point":
        if args.s is None or args.l is None:
            raise ParseError("cubic point needs --s and --l")
        det = cubic.cubic_determinantal(curve, args.s, args.l)
        pf = cubic.cubic_pfaffian(curve, args.s, args.l)
        out.kv("det_c", field.fmt(det.scale))
        out.kv("pf_c", field.fmt(pf.scale))
        out.raw(io.write_detrep(det.matrix, det.curve))
        out.raw(io.write_pfaffrep(pf.matrix, pf.curve))
    elif args.sub == "enumerate":
        if not args.prime:
            raise ParseError("cubic enumerate needs --prime")
        pts = cubic.enumerate_affine_points(curve.over(GF(args.prime)))
        out.kv("prime", args.prime)
        out.kv("count", len(pts))
        for s, l in pts:
            out.kv("point", f"{s} {l}")


# quartic -----------------------------------------------------------------


def cmd_quartic(args, out: Report):
    sub = args.sub
    if sub == "relations":
        rel = quartic.derive_linear_relations()
        for line in rel.format():
            out.raw(line)
        diffs = quartic.compare_relations_with_printed()
        out.kv("printed_match", "yes" if not diffs else "no")
        for d in diffs:
            out.kv(f"discrepancy {d.label}", d.difference)
        return
    if sub == "residuals":
        field = _field(args, QQ)
        for k, (mono, eq) in enumerate(quartic.residual_system(field), 1):
            out.kv(f"residual {k} [x^{mono[0]} y^{mono[1]} z^{mono[2]}]", eq.fmt() + " = 0")
        matches, unmatched = quartic.match_residuals_with_printed()
        out.kv("printed_match", "yes" if not unmatched else "no")
        return
    if sub in ("act", "invariants"):
        if not args.file:
            raise ParseError(f"quartic {sub} needs a parameter file")
        field = _field(args, QQ)
        params, action = io.read_params(_read(args.file), field)
        if sub == "invariants":
            i1, i2 = quartic.invariant_pair(params)
            out.kv("invariant1", field.fmt(i1))
            out.kv("invariant2", field.fmt(i2))
            return
        if action is None:
            raise ParseError("parameter file lacks an 'action <a> <e> <p>' line")
        moved = quartic.apply_group_action(params, action)
        out.raw(io.write_params(moved))
        return
    prime = args.prime or 11
    if sub == "solve":
        report = quartic.solve_over_prime_field(prime, args.budget, args.samples, args.seed)
        out.kv("prime", prime)
        out.kv("solutions", len(report.solutions))
        out.kv("attempts", report.attempts)
        out.kv("evaluations", report.evaluations)
        for k, s in enumerate(report.solutions, 1):
            out.kv(f"solution {k}", " ".join(f"{key}={GF(prime).fmt(v)}" for key, v in s.values.items()))
    elif sub == "dimension":
        report = quartic.solve_over_prime_field(prime, args.budget, args.samples, args.seed)
        dim = quartic.moduli_dimension_estimate(report.solutions, prime)
        out.kv("prime", prime)
        out.kv("samples", len(report.solutions))
        out.kv("jacobian_ranks", ",".join(map(str, dim.ranks)))
        out.kv("count", f"12 - {max(dim.ranks)} - {dim.orbit_dimension}")
        out.kv("dimension", dim.dimension)


# curve -------------------------------------------------------------------


def cmd_curve(args, out: Report):
    F = parse_poly(args.poly, QQ)
    primes = _primes(args, [5, 11, 101])
    for v in reps.smoothness_probe(F, primes, budget=args.budget):
        out.kv(f"F_{v.prime}", v.describe())


# parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", help="QQ or Fp:<prime>")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    common.add_argument("--primes", help="comma separated primes")
    common.add_argument("--out", help="write the report here instead of stdout")

    parser = argparse.ArgumentParser(prog="pfaffcurves", description=__doc__.splitlines()[0])
    verbs = parser.add_subparsers(dest="verb", required=True)

    pf = verbs.add_parser("pf", parents=[common])
    pf.add_argument("sub", choices=["compute", "adjoint", "verify"])
    pf.add_argument("file")
    pf.set_defaults(handler=cmd_pf)

    det = verbs.add_parser("det", parents=[common])
    det.add_argument("sub", choices=["verify", "adjugate", "lift"])
    det.add_argument("file")
    det.set_defaults(handler=cmd_det)

    con = verbs.add_parser("construct", parents=[common])
    con.add_argument("sub", choices=["from-B"])
    con.add_argument("file")
    con.set_defaults(handler=cmd_construct)

    cub = verbs.add_parser("cubic", parents=[common])
    cub.add_argument("sub", choices=["family", "point", "enumerate"])
    cub.add_argument("--alpha", default="0")
    cub.add_argument("--beta", default="1")
    cub.add_argument("--s")
    cub.add_argument("--l")
    cub.add_argument("--prime", type=int)
    cub.set_defaults(handler=cmd_cubic)

    qua = verbs.add_parser("quartic", parents=[common])
    qua.add_argument("sub", choices=["relations", "residuals", "act", "invariants", "solve", "dimension"])
    qua.add_argument("file", nargs="?")
    qua.add_argument("--prime", type=int)
    qua.add_argument("--samples", type=int, default=8)
    qua.set_defaults(handler=cmd_quartic)

    cur = verbs.add_parser("curve", parents=[common])
    cur.add_argument("sub", choices=["smooth"])
    cur.add_argument("poly")
    cur.set_defaults(handler=cmd_curve)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    out = Report()
    try:
        args.handler(args, out)
    except PfaffError as exc:
        print(f"error: {exc.code}", file=sys.stderr)
        print(f"detail: {exc}", file=sys.stderr)
        return exc.exit_status
    except ZeroDivisionError as exc:
        print("error: DIVISION_BY_ZERO", file=sys.stderr)
        print(f"detail: {exc}", file=sys.stderr)
        return 3
    text = out.text()
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
