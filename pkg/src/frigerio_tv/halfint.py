"""Exact half-integer colours and the admissibility predicates.

A colour ``i`` in {0, 1/2, 1, ..., (r-2)/2} is stored as the integer ``2*i``
so every parity and inequality test is exact integer arithmetic.  The hot
enumeration and state-sum loops work directly on these doubled integers;
:class:`HalfInt` is the public value type wrapped around them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import AdmissibilityError, DomainError


@dataclass(frozen=True, order=True, slots=True)
class HalfInt:
    """Non-negative half-integer ``doubled / 2``."""

    doubled: int

    def __post_init__(self):
        if not isinstance(self.doubled, int) or self.doubled < 0:
            raise DomainError(f"HalfInt needs a non-negative integer doubled value, got {self.doubled!r}")

    @classmethod
    def of(cls, value) -> "HalfInt":
        """Build from an int, a Fraction, a float such as 1.5, or a string like "3/2"."""
        if isinstance(value, HalfInt):
            return value
        if isinstance(value, str):
            value = Fraction(value)
        twice = Fraction(value) * 2
        if twice.denominator != 1:
            raise DomainError(f"{value!r} is not a half-integer")
        return cls(int(twice))

    @property
    def is_integer(self) -> bool:
        return self.doubled % 2 == 0

    def __add__(self, other):
        return HalfInt(self.doubled + HalfInt.of(other).doubled)

    def __sub__(self, other):
        return HalfInt(self.doubled - HalfInt.of(other).doubled)

    def __float__(self):
        return self.doubled / 2

    def as_fraction(self) -> Fraction:
        return Fraction(self.doubled, 2)

    def __str__(self):
        if self.doubled % 2 == 0:
            return str(self.doubled // 2)
        return f"{self.doubled}/2"

    def __repr__(self):
        return f"HalfInt({self})"


@dataclass(frozen=True)
class ColorRange:
    """The colour set I_r = {0, 1/2, ..., (r-2)/2}."""

    r: int

    def __post_init__(self):
        if self.r < 3:
            raise DomainError(f"level r must be >= 3, got {self.r}")

    @property
    def elements(self) -> list[HalfInt]:
        return [HalfInt(d) for d in range(self.r - 1)]

    def __len__(self):
        return self.r - 1

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, item):
        return isinstance(item, HalfInt) and item.doubled <= self.r - 2


def admissible_doubled(i2: int, j2: int, k2: int, r: int) -> bool:
    """Admissibility on doubled colours (no range check)."""
    total = i2 + j2 + k2
    return (
        i2 + j2 >= k2
        and j2 + k2 >= i2
        and k2 + i2 >= j2
        and total % 2 == 0
        and total <= 2 * (r - 2)
    )


def _check_range(r, *colours):
    for c in colours:
        if c.doubled > r - 2:
            raise DomainError(f"colour {c} exceeds (r-2)/2 = {Fraction(r - 2, 2)}")


def is_admissible_triple(i: HalfInt, j: HalfInt, k: HalfInt, r: int) -> bool:
    """Triangle inequalities, integer sum, and sum <= r - 2."""
    _check_range(r, i, j, k)
    return admissible_doubled(i.doubled, j.doubled, k.doubled, r)


def is_admissible_iik(i: HalfInt, k: HalfInt, r: int) -> bool:
    """Closed form for (i, i, k): k integral and k/2 <= i <= (r-2-k)/2."""
    # doubled: k2 even, k2 <= 2*i2 and 2*i2 <= 2(r-2) - k2
    return k.doubled % 2 == 0 and k.doubled <= 2 * i.doubled <= 2 * (r - 2) - k.doubled


def require_admissible(i2: int, j2: int, k2: int, r: int) -> None:
    if not admissible_doubled(i2, j2, k2, r):
        raise AdmissibilityError(
            f"triple ({HalfInt(i2)}, {HalfInt(j2)}, {HalfInt(k2)}) is not admissible at r={r}"
        )
