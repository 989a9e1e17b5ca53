"""Exact scalar fields: the rationals and prime fields F_p.

Elements are plain Python values so they hash and compare cheaply:
``fractions.Fraction`` for QQ and ``int`` residues in ``[0, p)`` for F_p.
A field object knows how to coerce, normalize, invert and print them.
"""

from __future__ import annotations

import functools
import random
from fractions import Fraction

from .errors import ParseError, UnsupportedField


class Field:
    descriptor: str
    characteristic: int

    def __call__(self, value):
        raise NotImplementedError

    def norm(self, value):
        """Bring the raw result of ``+``/``-``/``*`` back to canonical form."""
        return value

    def inv(self, value):
        raise NotImplementedError

    def div(self, a, b):
        return self.norm(a * self.inv(b))

    def fmt(self, value) -> str:
        raise NotImplementedError

    def random(self, rng: random.Random, bound: int = 9):
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def __repr__(self):
        return self.descriptor

    def __reduce__(self):
        return (parse_field, (self.descriptor,))


class RationalField(Field):
    descriptor = "QQ"
    characteristic = 0

    def __call__(self, value):
        if isinstance(value, str):
            return parse_rational(value)
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        raise TypeError(f"cannot coerce {value!r} into QQ")

    def inv(self, value):
        if value == 0:
            raise ZeroDivisionError("inverse of zero in QQ")
        return 1 / Fraction(value)

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in QQ")
        return Fraction(a) / b

    def fmt(self, value) -> str:
        value = Fraction(value)
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"

    def random(self, rng, bound=9):
        num = rng.randint(-bound, bound)
        den = rng.choice((1, 1, 1, 2, 3))
        return Fraction(num, den)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


class PrimeField(Field):
    def __init__(self, p: int):
        if p < 2 or not _is_prime(p):
            raise UnsupportedField(f"{p} is not a prime")
        self.p = p
        self.characteristic = p
        self.descriptor = f"Fp:{p}"

    def __call__(self, value):
        if isinstance(value, str):
            value = parse_rational(value)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator of {value} vanishes mod {self.p}")
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        if isinstance(value, int):
            return value % self.p
        raise TypeError(f"cannot coerce {value!r} into {self.descriptor}")

    def norm(self, value):
        return value % self.p

    def inv(self, value):
        if value % self.p == 0:
            raise ZeroDivisionError(f"inverse of zero in {self.descriptor}")
        return pow(value, -1, self.p)

    def fmt(self, value) -> str:
        return str(value % self.p)

    def random(self, rng, bound=None):
        return rng.randrange(self.p)

    def elements(self):
        return range(self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))


QQ = RationalField()


@functools.lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def parse_field(descriptor: str) -> Field:
    """Parse ``"QQ"`` or ``"Fp:<prime>"``."""
    text = descriptor.strip()
    if text == "QQ":
        return QQ
    if text.startswith("Fp:"):
        try:
            p = int(text[3:])
        except ValueError:
            raise ParseError(f"bad field descriptor {descriptor!r}") from None
        return GF(p)
    raise ParseError(f"bad field descriptor {descriptor!r}")


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad scalar {text!r}") from None


def require_odd_prime(field: Field, minimum: int = 3) -> None:
    """Reject characteristic 2 and, by default, 3 (coefficients 1/2, 3/4 need it)."""
    if field.characteristic and field.characteristic <= minimum:
        raise UnsupportedField(
            f"characteristic {field.characteristic} unsupported; need p > {minimum}"
        )


def _is_prime(n: int) -> bool:
    if n < 4:
        return n >= 2
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True
