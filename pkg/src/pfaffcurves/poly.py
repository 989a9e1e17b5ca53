"""Sparse multivariate polynomials over an exact field.

``MPoly`` is a general polynomial in named generators; it carries the
parameter algebra of the quartic computations.  ``Poly`` is the ternary
form in ``x0, x1, x2`` with an enforced homogeneous degree, used for curve
equations and matrix entries.
"""

from __future__ import annotations

import ast
import operator
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import DegreeMismatch, FieldMismatch, NotDivisible, ParseError
from .field import QQ, Field

TERNARY = ("x0", "x1", "x2")
ALIASES = {"x": "x0", "y": "x1", "z": "x2"}

_add_exps = operator.add


def _mono_key(exps):
    return (sum(exps), exps)


class MPoly:
    __slots__ = ("field", "gens", "terms", "_hash")

    def __init__(self, field: Field, gens: Sequence[str], terms: Mapping | None = None):
        self.field = field
        self.gens = tuple(gens)
        clean = {}
        if terms:
            n = len(self.gens)
            for exps, coef in terms.items():
                if len(exps) != n:
                    raise ValueError(f"exponent {exps} does not match {n} generators")
                coef = field(coef)
                if coef:
                    clean[tuple(exps)] = coef
        self.terms = clean
        self._hash = None

    # construction helpers ------------------------------------------------

    @classmethod
    def _raw(cls, field, gens, terms):
        obj = object.__new__(cls)
        obj.field = field
        obj.gens = gens
        obj.terms = terms
        obj._hash = None
        return obj

    def _like(self, terms, degree=None):
        return MPoly._raw(self.field, self.gens, terms)

    @classmethod
    def constant(cls, field, gens, value):
        gens = tuple(gens)
        value = field(value)
        return cls._raw(field, gens, {(0,) * len(gens): value} if value else {})

    @classmethod
    def variable(cls, field, gens, name):
        gens = tuple(gens)
        exps = tuple(int(g == name) for g in gens)
        if sum(exps) != 1:
            raise ValueError(f"unknown generator {name!r}")
        return cls._raw(field, gens, {exps: field.one})

    def zero_like(self):
        return self._like({})

    # inspection ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self):
        return self.terms.get((0,) * len(self.gens), self.field.zero)

    def leading_term(self):
        exps = max(self.terms, key=_mono_key)
        return exps, self.terms[exps]

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), self.field.zero)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: _mono_key(t[0]), reverse=True)

    def variables_used(self) -> set[str]:
        used = set()
        for exps in self.terms:
            used.update(g for g, e in zip(self.gens, exps) if e)
        return used

    # arithmetic ----------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, MPoly):
            return self.constant(self.field, self.gens, other)
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        if other.gens != self.gens:
            raise FieldMismatch(f"generators {self.gens} vs {other.gens}")
        return other

    def _combine(self, other, sign):
        out = dict(self.terms)
        norm = self.field.norm
        for exps, coef in other.terms.items():
            v = norm(out.get(exps, 0) + sign * coef)
            if v:
                out[exps] = v
            else:
                out.pop(exps, None)
        return out

    def __add__(self, other):
        other = self._check(other)
        return self._like(self._combine(other, 1), self._sum_degree(other))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        return self._like(self._combine(other, -1), self._sum_degree(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __neg__(self):
        norm = self.field.norm
        return self._like({e: norm(-c) for e, c in self.terms.items()}, getattr(self, "degree", None))

    def _sum_degree(self, other):
        return None

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            return self.scale(other)
        other = self._check(other)
        out: dict = {}
        get = out.get
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(map(_add_exps, e1, e2))
                out[e] = get(e, 0) + c1 * c2
        norm = self.field.norm
        terms = {}
        for e, c in out.items():
            c = norm(c)
            if c:
                terms[e] = c
        return self._like(terms, self._mul_degree(other))

    __rmul__ = __mul__

    def _mul_degree(self, other):
        return None

    def scale(self, scalar):
        scalar = self.field(scalar)
        if not scalar:
            return self._like({}, getattr(self, "degree", None))
        norm = self.field.norm
        return self._like({e: norm(c * scalar) for e, c in self.terms.items()}, getattr(self, "degree", None))

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.constant(self.field, self.gens, 1)
        result = self._like(result.terms, 0)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.field == other.field and self.gens == other.gens and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == MPoly.constant(self.field, self.gens, other).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.gens, frozenset(self.terms.items())))
        return self._hash

    # calculus and evaluation ---------------------------------------------

    def evaluate(self, values: Sequence):
        """Exact value at a point given in generator order."""
        if len(values) != len(self.gens):
            raise ValueError(f"expected {len(self.gens)} values, got {len(values)}")
        field = self.field
        vals = [field(v) for v in values]
        total = 0
        for exps, coef in self.terms.items():
            term = coef
            for v, e in zip(vals, exps):
                if e:
                    term = term * v**e
            total += term
        return field(total)

    def substitute(self, assignment: Mapping[str, object]):
        """Replace some generators by scalars; the generator tuple is kept."""
        field = self.field
        idx = {self.gens.index(name): field(v) for name, v in assignment.items()}
        out: dict = {}
        for exps, coef in self.terms.items():
            e = list(exps)
            for i, v in idx.items():
                if e[i]:
                    coef = coef * v ** e[i]
                    e[i] = 0
            e = tuple(e)
            out[e] = out.get(e, 0) + coef
        return MPoly(field, self.gens, out)

    def partial(self, var) -> "MPoly":
        k = var if isinstance(var, int) else self.gens.index(ALIASES.get(var, var))
        out = {}
        for exps, coef in self.terms.items():
            if exps[k]:
                e = list(exps)
                e[k] -= 1
                out[tuple(e)] = coef * exps[k]
        return self._like(_normed(self.field, out), self._partial_degree())

    def _partial_degree(self):
        return None

    def split(self, names: Iterable[str]) -> dict:
        """Group terms by the exponents of ``names``.

        Returns a map from those exponent tuples to coefficient polynomials in
        the remaining generators (same generator tuple, split generators zeroed).
        """
        names = list(names)
        pos = [self.gens.index(n) for n in names]
        groups: dict = {}
        for exps, coef in self.terms.items():
            key = tuple(exps[i] for i in pos)
            rest = list(exps)
            for i in pos:
                rest[i] = 0
            groups.setdefault(key, {})[tuple(rest)] = coef
        return {k: MPoly._raw(self.field, self.gens, v) for k, v in groups.items()}

    def degree_in(self, name: str) -> int:
        k = self.gens.index(name)
        return max((e[k] for e in self.terms), default=-1)

    def coefficient_of_power(self, name: str, power: int) -> "MPoly":
        k = self.gens.index(name)
        out = {}
        for exps, coef in self.terms.items():
            if exps[k] == power:
                e = list(exps)
                e[k] = 0
                out[tuple(e)] = coef
        return MPoly._raw(self.field, self.gens, out)

    def compose(self, name: str, value: "MPoly") -> "MPoly":
        """Substitute the polynomial ``value`` for generator ``name``."""
        value = self._check(value)
        deg = self.degree_in(name)
        if deg <= 0:
            return self
        out = self.coefficient_of_power(name, 0)
        power = value
        for k in range(1, deg + 1):
            coef = self.coefficient_of_power(name, k)
            if coef:
                out = out + coef * power
            if k < deg:
                power = power * value
        return MPoly._raw(self.field, self.gens, out.terms)

    def change_gens(self, gens: Sequence[str]) -> "MPoly":
        """Re-express in another generator tuple; unused generators may be dropped."""
        gens = tuple(gens)
        pos = {g: k for k, g in enumerate(gens)}
        out = {}
        for exps, coef in self.terms.items():
            e = [0] * len(gens)
            for g, k in zip(self.gens, exps):
                if k:
                    if g not in pos:
                        raise ValueError(f"generator {g} is used but not in the target ring")
                    e[pos[g]] = k
            out[tuple(e)] = coef
        return MPoly._raw(self.field, gens, out)

    def reduce_mod(self, field: Field) -> "MPoly":
        """Map integer/rational coefficients into another field."""
        return type(self)._rebuild(self, field, {e: field(c) for e, c in self.terms.items()})

    @staticmethod
    def _rebuild(src, field, terms):
        return MPoly(field, src.gens, terms)

    # division ------------------------------------------------------------

    def divmod(self, g: "MPoly"):
        g = self._check(g)
        if g.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        field = self.field
        lead_e, lead_c = g.leading_term()
        lead_inv = field.inv(lead_c)
        rem = dict(self.terms)
        quot: dict = {}
        leftover: dict = {}
        norm = field.norm
        while rem:
            e = max(rem, key=_mono_key)
            c = rem[e]
            shift = tuple(a - b for a, b in zip(e, lead_e))
            if min(shift) < 0:
                leftover[e] = rem.pop(e)
                continue
            q = norm(c * lead_inv)
            quot[shift] = q
            for ge, gc in g.terms.items():
                m = tuple(map(_add_exps, ge, shift))
                v = norm(rem.get(m, 0) - q * gc)
                if v:
                    rem[m] = v
                else:
                    rem.pop(m, None)
        return MPoly._raw(field, self.gens, quot), MPoly._raw(field, self.gens, leftover)

    def exact_div(self, g: "MPoly") -> "MPoly":
        q, r = self.divmod(g)
        if r:
            raise NotDivisible(f"{self.fmt()} is not divisible by {g.fmt()}", remainder=r)
        return self._like(q.terms, self._div_degree(g))

    def _div_degree(self, g):
        return None

    # text ----------------------------------------------------------------

    def fmt(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps, coef in self.sorted_terms():
            mono = "*".join(
                g if e == 1 else f"{g}^{e}" for g, e in zip(self.gens, exps) if e
            )
            text = self.field.fmt(coef)
            neg = text.startswith("-")
            mag = text[1:] if neg else text
            if mono:
                body = mono if mag == "1" else f"{mag}*{mono}"
            else:
                body = mag
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    __str__ = fmt

    def __repr__(self):
        return f"{type(self).__name__}({self.fmt()!r}, {self.field})"


def _normed(field, terms):
    norm = field.norm
    out = {}
    for e, c in terms.items():
        c = norm(c)
        if c:
            out[e] = c
    return out


class Poly(MPoly):
    """Homogeneous ternary form in x0, x1, x2 with a declared degree.

    The zero form keeps its degree tag.  Adding forms of different degree
    raises ``DegreeMismatch`` unless one of them is zero.
    """

    __slots__ = ("degree",)

    def __init__(self, field: Field, terms: Mapping | None = None, degree: int | None = None):
        super().__init__(field, TERNARY, terms)
        degs = {sum(e) for e in self.terms}
        if len(degs) > 1:
            raise DegreeMismatch(f"inhomogeneous form with degrees {sorted(degs)}")
        if degs:
            (d,) = degs
            if degree is not None and degree != d:
                raise DegreeMismatch(f"declared degree {degree} but terms have degree {d}")
            degree = d
        self.degree = 0 if degree is None else degree

    @classmethod
    def _raw(cls, field, gens, terms, degree=0):
        obj = super()._raw(field, gens, terms)
        obj.degree = degree
        return obj

    def _like(self, terms, degree=None):
        if degree is None:
            degree = self.degree
        return Poly._raw(self.field, TERNARY, terms, degree)

    @classmethod
    def constant(cls, field, gens=TERNARY, value=0):
        value = field(value)
        return Poly._raw(field, TERNARY, {(0, 0, 0): value} if value else {}, 0)

    @classmethod
    def zero(cls, field, degree=0):
        return Poly._raw(field, TERNARY, {}, degree)

    @classmethod
    def one(cls, field):
        return Poly._raw(field, TERNARY, {(0, 0, 0): field.one}, 0)

    @classmethod
    def var(cls, field, k):
        k = TERNARY.index(ALIASES.get(k, k)) if isinstance(k, str) else k
        exps = tuple(int(i == k) for i in range(3))
        return Poly._raw(field, TERNARY, {exps: field.one}, 1)

    @classmethod
    def linear(cls, field, coeffs):
        """The form c0*x0 + c1*x1 + c2*x2."""
        terms = {tuple(int(i == k) for i in range(3)): field(c) for k, c in enumerate(coeffs)}
        return Poly(field, terms, degree=1)

    @classmethod
    def from_mpoly(cls, f: MPoly, degree=None):
        if f.gens != TERNARY:
            raise FieldMismatch(f"expected generators {TERNARY}, got {f.gens}")
        return Poly(f.field, f.terms, degree)

    @staticmethod
    def _rebuild(src, field, terms):
        return Poly(field, terms, src.degree)

    def _check(self, other):
        if not isinstance(other, MPoly):
            value = self.field(other)
            return Poly._raw(self.field, TERNARY, {(0, 0, 0): value} if value else {}, 0 if value else self.degree)
        other = super()._check(other)
        if not isinstance(other, Poly):
            other = Poly.from_mpoly(other)
        return other

    def _sum_degree(self, other):
        if other.degree == self.degree:
            return self.degree
        if not other.terms:
            return self.degree
        if not self.terms:
            return other.degree
        raise DegreeMismatch(f"cannot add forms of degree {self.degree} and {other.degree}")

    def _mul_degree(self, other):
        return self.degree + other.degree

    def _partial_degree(self):
        return max(self.degree - 1, 0)

    def _div_degree(self, g):
        return self.degree - g.degree

    def __call__(self, *pt):
        if len(pt) == 1:
            (pt,) = pt
        return self.evaluate(pt)

    def __hash__(self):
        return MPoly.__hash__(self)

    def __eq__(self, other):
        return MPoly.__eq__(self, other)

    def __reduce__(self):
        return (Poly, (self.field, self.terms, self.degree))

    def gradient(self) -> tuple["Poly", "Poly", "Poly"]:
        return tuple(self.partial(k) for k in range(3))


# parsing -----------------------------------------------------------------


def parse_mpoly(text: str, field: Field = QQ, gens: Sequence[str] = TERNARY, aliases=None) -> MPoly:
    """Parse ``+ - * ^ /`` expressions with parentheses into an ``MPoly``.

    ``/`` is only accepted between constants.  Whitespace is insignificant.
    """
    gens = tuple(gens)
    aliases = dict(aliases or {})
    source = text.replace("^", "**")
    if "**" in text:
        raise ParseError("'**' is not part of the grammar; use '^'", text.index("**"))
    try:
        tree = ast.parse(source.strip(), mode="eval")
    except SyntaxError as exc:
        pos = (exc.offset or 1) - 1
        pos -= source[:pos].count("**")  # map back to '^'
        raise ParseError(f"syntax error in {text!r}", pos) from None

    def pos_of(node):
        off = getattr(node, "col_offset", 0)
        stripped = len(source) - len(source.lstrip())
        return off + stripped - source[: off + stripped].count("**")

    def const(v):
        return MPoly.constant(field, gens, v)

    def walk(node):
        if isinstance(node, ast.Expression):
            return walk(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
            return const(node.value)
        if isinstance(node, ast.Name):
            name = aliases.get(node.id, node.id)
            if name not in gens:
                raise ParseError(f"unknown variable {node.id!r}", pos_of(node))
            return MPoly.variable(field, gens, name)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            inner = walk(node.operand)
            return -inner if isinstance(node.op, ast.USub) else inner
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                exp = node.right
                if not (isinstance(exp, ast.Constant) and isinstance(exp.value, int) and exp.value >= 0):
                    raise ParseError("exponent must be a non-negative integer", pos_of(exp))
                return walk(node.left) ** exp.value
            left, right = walk(node.left), walk(node.right)
            if isinstance(node.op, ast.Add):
                return left + right
            if isinstance(node.op, ast.Sub):
                return left - right
            if isinstance(node.op, ast.Mult):
                return left * right
            if isinstance(node.op, ast.Div):
                if not (left.is_constant() and right.is_constant()) or right.is_zero():
                    raise ParseError("division only allowed between nonzero constants", pos_of(node))
                return left.scale(field.inv(right.constant_value()))
        raise ParseError(f"unsupported syntax {type(node).__name__}", pos_of(node))

    return walk(tree)


def parse_poly(text: str, field: Field = QQ) -> Poly:
    """Parse a homogeneous ternary form; ``x, y, z`` alias ``x0, x1, x2``."""
    f = parse_mpoly(text, field, TERNARY, ALIASES)
    if not f.is_homogeneous():
        raise ParseError(f"inhomogeneous polynomial {text!r}")
    return Poly(field, f.terms)


def format_poly(f: MPoly) -> str:
    return f.fmt()


# points ------------------------------------------------------------------


def make_point(field: Field, coords) -> tuple:
    pt = tuple(field(c) for c in coords)
    if len(pt) != 3:
        raise ValueError("points have three coordinates")
    if not any(pt):
        raise ValueError("(0, 0, 0) is not a projective point")
    return pt


def projective_plane(field: Field):
    """All points of P^2(F_p), normalized so the first nonzero coordinate is 1.

    Order: (0, 0, 1), then (0, 1, b), then (1, a, b).
    """
    p = field.characteristic
    if not p:
        raise ValueError("projective enumeration needs a finite field")
    yield (0, 0, 1)
    for b in range(p):
        yield (0, 1, b)
    for a in range(p):
        for b in range(p):
            yield (1, a, b)


def curve_points(f: Poly, field: Field | None = None):
    """Exhaustive list of F_p-rational points of the curve f = 0."""
    field = field or f.field
    if f.field != field:
        f = f.reduce_mod(field)
    return [pt for pt in projective_plane(field) if not f.evaluate(pt)]
