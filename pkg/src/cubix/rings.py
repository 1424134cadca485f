"""Coefficient rings Z, Z/m and Q."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Coeff = Union[int, Fraction]


@dataclass(frozen=True)
class CoeffRing:
    kind: str  # "Z", "Zmod" or "Q"
    modulus: int = 0

    def __post_init__(self) -> None:
        if self.kind not in ("Z", "Zmod", "Q"):
            raise ValueError(f"unknown coefficient ring {self.kind!r}")
        if self.kind == "Zmod":
            if self.modulus < 2:
                raise ValueError("Z/m needs m >= 2")
        elif self.modulus:
            raise ValueError(f"{self.kind} takes no modulus")

    @property
    def is_finite(self) -> bool:
        return self.kind == "Zmod"

    def __call__(self, value) -> Coeff:
        """Canonical representative of ``value`` in this ring."""
        if isinstance(value, str):
            value = Fraction(value)
        if self.kind == "Q":
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator != 1:
                if self.kind == "Z":
                    raise ValueError(f"{value} is not an integer")
                value = value.numerator * pow(value.denominator, -1, self.modulus)
            else:
                value = value.numerator
        value = int(value)
        return value % self.modulus if self.kind == "Zmod" else value

    def elements(self):
        if not self.is_finite:
            raise ValueError(f"{self} is infinite")
        return range(self.modulus)

    def format(self, value: Coeff) -> str:
        return str(value)

    def __str__(self) -> str:
        return f"Z/{self.modulus}" if self.kind == "Zmod" else self.kind


ZZ = CoeffRing("Z")
QQ = CoeffRing("Q")


def Zmod(m: int) -> CoeffRing:
    return CoeffRing("Zmod", m)
