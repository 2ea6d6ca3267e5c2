"""Coefficient fields: the rationals (via gmpy2.mpq) or a prime field GF(p)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import gmpy2
from sympy import isprime

mpq = gmpy2.mpq


@dataclass(frozen=True)
class FieldSpec:
    """A coefficient field. ``p is None`` means the rationals.

    Rational elements are ``gmpy2.mpq``; prime-field elements are plain ints
    in ``range(p)``.
    """

    p: int | None = None

    def __post_init__(self):
        if self.p is not None:
            if not (2 < self.p < 2**31) or not isprime(self.p):
                raise ValueError(f"prime field needs an odd prime below 2^31, got {self.p}")

    @classmethod
    def rationals(cls) -> FieldSpec:
        return cls(None)

    @classmethod
    def prime(cls, p: int) -> FieldSpec:
        return cls(int(p))

    @classmethod
    def parse(cls, text: str) -> FieldSpec:
        """Parse ``rational`` or ``prime:<p>``."""
        text = text.strip()
        if text in ("rational", "QQ", "Q"):
            return cls.rationals()
        if text.startswith("prime:"):
            return cls.prime(int(text[6:]))
        raise ValueError(f"unknown field {text!r}; expected 'rational' or 'prime:<p>'")

    @property
    def is_prime(self) -> bool:
        return self.p is not None

    @property
    def name(self) -> str:
        return "rational" if self.p is None else f"prime:{self.p}"

    def __str__(self):
        return self.name

    # element handling -------------------------------------------------

    def __call__(self, value):
        """Coerce an int, Fraction, mpq or 'a/b' string into this field."""
        p = self.p
        if p is None:
            if isinstance(value, str):
                return mpq(Fraction(value))
            if isinstance(value, Fraction):
                return mpq(value.numerator, value.denominator)
            return mpq(value)
        if isinstance(value, (Fraction, type(mpq(0)))):
            num, den = int(value.numerator), int(value.denominator)
            if den % p == 0:
                raise ZeroDivisionError(f"denominator {den} vanishes mod {p}")
            return num * pow(den, -1, p) % p
        return int(value) % p

    @property
    def zero(self):
        return mpq(0) if self.p is None else 0

    @property
    def one(self):
        return mpq(1) if self.p is None else 1

    def inv(self, a):
        if self.p is None:
            return 1 / a
        return pow(a, -1, self.p)

    def neg(self, a):
        return -a if self.p is None else (-a) % self.p

    def to_fraction(self, a) -> Fraction:
        """Rational value of ``a``; prime-field elements map to their least residue."""
        if self.p is None:
            return Fraction(int(a.numerator), int(a.denominator))
        return Fraction(int(a))

    def format(self, a) -> str:
        if self.p is None:
            if a.denominator == 1:
                return str(int(a.numerator))
            return f"{int(a.numerator)}/{int(a.denominator)}"
        return str(int(a))


QQ = FieldSpec.rationals()


def rational_reconstruction(a: int, m: int) -> Fraction | None:
    """Recover n/d with |n|, d <= sqrt(m/2) from a residue ``a`` mod ``m``."""
    a %= m
    bound = gmpy2.isqrt(m // 2)
    r0, r1 = m, a
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound:
        return None
    if gmpy2.gcd(r1, abs(s1)) != 1:
        return None
    return Fraction(int(r1), int(s1))
