"""Exact numbers of the form r * sqrt(b)**s with r rational and s in {0, 1}."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

from .errors import ParityMismatch

Number = Union[int, Fraction]


class ExactScalar:
    """``coeff * sqrt(base) ** half_power``, kept in canonical form.

    Canonical means: half_power is 0 or 1, a perfect-square base never
    carries a symbolic root, and zero always has half_power 0. Equality
    and hashing are by value.
    """

    __slots__ = ("coeff", "half_power", "base")

    def __init__(self, coeff: Number | str = 0, half_power: int = 0, base: int = 1):
        if base < 1:
            raise ValueError("base must be a positive integer")
        c = Fraction(coeff)
        base = int(base)
        hp = int(half_power)
        c *= Fraction(base) ** (hp // 2)
        hp %= 2
        if hp:
            r = math.isqrt(base)
            if r * r == base:
                c *= r
                hp = 0
        if c == 0:
            hp = 0
        self.coeff = c
        self.half_power = hp
        self.base = base

    @classmethod
    def sqrt_power(cls, base: int, k: int) -> "ExactScalar":
        """base ** (k / 2) for any integer k."""
        if k >= 0:
            return cls(Fraction(base) ** (k // 2), k % 2, base)
        # base^(-k/2) = base^((1-k)//2 ... ) folded so the symbolic part stays sqrt(base)
        up = -k
        if up % 2 == 0:
            return cls(Fraction(1, base ** (up // 2)), 0, base)
        return cls(Fraction(1, base ** ((up + 1) // 2)), 1, base)

    def _compatible(self, other: "ExactScalar") -> None:
        if self.half_power and other.half_power and self.base != other.base:
            raise ParityMismatch(f"cannot combine sqrt({self.base}) with sqrt({other.base})")

    @staticmethod
    def _lift(x) -> "ExactScalar":
        if isinstance(x, ExactScalar):
            return x
        if isinstance(x, (int, Fraction)):
            return ExactScalar(x)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if other.coeff == 0:
            return self
        if self.coeff == 0:
            return other
        if self.half_power != other.half_power:
            raise ParityMismatch(f"cannot add {self!r} and {other!r}")
        self._compatible(other)
        base = self.base if self.half_power else max(self.base, other.base)
        return ExactScalar(self.coeff + other.coeff, self.half_power, base)

    __radd__ = __add__

    def __neg__(self) -> "ExactScalar":
        return ExactScalar(-self.coeff, self.half_power, self.base)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if self.half_power and other.half_power:
            self._compatible(other)
            return ExactScalar(self.coeff * other.coeff * self.base, 0, self.base)
        if self.half_power:
            return ExactScalar(self.coeff * other.coeff, 1, self.base)
        if other.half_power:
            return ExactScalar(self.coeff * other.coeff, 1, other.base)
        return ExactScalar(self.coeff * other.coeff, 0, max(self.base, other.base))

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        other = self._lift(other)
        if other is NotImplemented:
            return False
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def _key(self):
        return (self.coeff, self.half_power, self.base if self.half_power else None)

    def __bool__(self) -> bool:
        return self.coeff != 0

    def __float__(self) -> float:
        return float(self.coeff) * (math.sqrt(self.base) if self.half_power else 1.0)

    def is_rational(self) -> bool:
        return self.half_power == 0

    def to_json(self) -> dict:
        return {
            "coeff": f"{self.coeff.numerator}/{self.coeff.denominator}",
            "half_power": self.half_power,
            "base": self.base,
        }

    @classmethod
    def from_json(cls, d: dict) -> "ExactScalar":
        return cls(Fraction(d["coeff"]), int(d["half_power"]), int(d["base"]))

    def render(self) -> str:
        """``p/q`` or ``p/q·√b``; integers drop the denominator."""
        c = self.coeff
        s = str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
        return f"{s}·√{self.base}" if self.half_power else s

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"ExactScalar({self.render()})"
