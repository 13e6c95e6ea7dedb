"""Exact coefficient fields: the rationals and prime fields GF(p)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import re

_RATIONAL = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+))?\s*$")


def _parse_fraction(text: str) -> Fraction:
    m = _RATIONAL.match(text)
    if not m:
        raise ValueError(f"not a scalar: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Residue:
    """An element of GF(p), kept reduced to ``0 <= value < modulus``."""

    __slots__ = ("value", "modulus")

    def __init__(self, value: int, modulus: int):
        self.value = value % modulus
        self.modulus = modulus

    def _coerce(self, other):
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise ValueError("residues modulo different primes")
            return other.value
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.modulus)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(self.value + o, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(self.value - o, self.modulus)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(o - self.value, self.modulus)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(self.value * o, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(-self.value, self.modulus)

    def inverse(self) -> Residue:
        if self.value == 0:
            raise ZeroDivisionError("zero has no inverse")
        return Residue(pow(self.value, -1, self.modulus), self.modulus)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * Residue(o, self.modulus).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self.inverse() * o

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.modulus == other.modulus and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"Residue({self.value}, {self.modulus})"

    def __str__(self):
        return str(self.value)


@dataclass(frozen=True)
class Rationals:
    """The field Q with :class:`fractions.Fraction` elements."""

    name = "q"

    def __call__(self, x) -> Fraction:
        if isinstance(x, str):
            return _parse_fraction(x)
        if isinstance(x, Residue):
            raise TypeError("cannot coerce a residue into Q")
        return Fraction(x)

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    @property
    def characteristic(self) -> int:
        return 0

    def __str__(self):
        return "q"


@dataclass(frozen=True)
class PrimeField:
    """GF(p) for a prime ``p < 2**31``."""

    p: int

    def __post_init__(self):
        if not (isinstance(self.p, int) and 1 < self.p < 2**31 and is_prime(self.p)):
            raise ValueError(f"GF(p) needs a prime p < 2^31, got {self.p!r}")

    def __call__(self, x) -> Residue:
        if isinstance(x, str):
            x = _parse_fraction(x)
        if isinstance(x, Residue):
            if x.modulus != self.p:
                raise ValueError("residue from a different prime field")
            return x
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"{x} is undefined in GF({self.p})")
            return Residue(x.numerator, self.p) / x.denominator
        return Residue(int(x), self.p)

    @property
    def zero(self) -> Residue:
        return Residue(0, self.p)

    @property
    def one(self) -> Residue:
        return Residue(1, self.p)

    @property
    def characteristic(self) -> int:
        return self.p

    def __str__(self):
        return f"gf:{self.p}"


QQ = Rationals()


def parse_field(text: str):
    """Parse ``q`` or ``gf:p`` as used by the ``--field`` flag."""
    text = text.strip().lower()
    if text in ("q", "qq", "rationals"):
        return QQ
    if text.startswith("gf:"):
        try:
            p = int(text[3:])
        except ValueError:
            raise ValueError(f"bad field modulus in {text!r}") from None
        return PrimeField(p)
    raise ValueError(f"unknown field {text!r}; expected 'q' or 'gf:p'")
