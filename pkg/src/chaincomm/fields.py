"""Exact coefficient fields: arbitrary-precision rationals and prime fields.

Scalars are plain Python values: ``fractions.Fraction`` over the rationals
and canonical integers in ``range(p)`` over F_p.  The field object supplies
the arithmetic, so everything downstream stays field-agnostic and exact.
No floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

Scalar = Union[Fraction, int]


def is_prime(n: int) -> bool:
    """Trial-division primality check; moduli are expected to be small."""
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class Field:
    """Common interface of :class:`Rationals` and :class:`PrimeField`."""

    kind: str = "?"
    finite: bool = False

    @property
    def zero(self) -> Scalar:
        return self.normalize(0)

    @property
    def one(self) -> Scalar:
        return self.normalize(1)

    @property
    def size(self) -> int | None:
        """Number of elements, or None for an infinite field."""
        return None

    def normalize(self, value) -> Scalar:
        raise NotImplementedError

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        return self.normalize(a + b)

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        return self.normalize(a - b)

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        return self.normalize(a * b)

    def neg(self, a: Scalar) -> Scalar:
        return self.normalize(-a)

    def invert(self, a: Scalar) -> Scalar:
        raise NotImplementedError

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        return self.mul(a, self.invert(b))

    def is_zero(self, a: Scalar) -> bool:
        return a == 0

    def elements(self) -> Iterator[Scalar]:
        """All field elements in canonical order (finite fields only)."""
        raise TypeError(f"cannot enumerate the elements of {self}")

    def alternating_sign(self, degree: int) -> Scalar:
        """(-1)**degree as a field element; degrees may be negative."""
        return self.one if degree % 2 == 0 else self.neg(self.one)


@dataclass(frozen=True)
class Rationals(Field):
    """The field of rational numbers with arbitrary-precision arithmetic."""

    kind = "Q"
    finite = False

    def normalize(self, value) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        raise TypeError(f"not a rational scalar: {value!r}")

    def invert(self, a: Scalar) -> Fraction:
        a = self.normalize(a)
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def __repr__(self) -> str:
        return "Rationals()"


@dataclass(frozen=True)
class PrimeField(Field):
    """The prime field F_p; elements are canonical integers in range(p)."""

    modulus: int

    kind = "Fp"
    finite = True

    def __post_init__(self) -> None:
        if not isinstance(self.modulus, int) or not is_prime(self.modulus):
            raise ValueError(f"modulus must be a prime integer, got {self.modulus!r}")

    @property
    def size(self) -> int:
        return self.modulus

    def normalize(self, value) -> int:
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeError(f"not an F_{self.modulus} scalar: {value!r}")
        return value % self.modulus

    def invert(self, a: Scalar) -> int:
        a = self.normalize(a)
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.modulus - 2, self.modulus)

    def elements(self) -> Iterator[int]:
        return iter(range(self.modulus))

    def __repr__(self) -> str:
        return f"PrimeField({self.modulus})"


RATIONALS = Rationals()
GF2 = PrimeField(2)
