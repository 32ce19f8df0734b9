"""Exact arithmetic in the prime field Z_d and in arbitrary-precision rationals.

Everything downstream (symplectic vectors, gate algebra, polynomial systems)
is built on the two value types defined here: ``FpElem`` for elements of Z_d
with d an odd prime, and ``BigRational`` (an alias of ``fractions.Fraction``)
for exact rational coefficients.

Field elements carry their modulus: arithmetic between elements of different
moduli raises ``MixedModulusError`` instead of silently coercing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class ZeroInverseError(ZeroDivisionError):
    """Raised when inverting 0 in Z_d."""


class MixedModulusError(ValueError):
    """Raised when combining field elements with different moduli."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Modulus:
    """An odd prime modulus d >= 3.

    Primality is checked at construction; d = 2 is rejected because the whole
    pipeline works over Z[1/2] and requires 2 to be invertible.
    """

    d: int

    def __post_init__(self):
        if not is_prime(self.d):
            raise ValueError(f"modulus {self.d} is not prime")
        if self.d == 2:
            raise ValueError("d = 2 is excluded (2 must be invertible)")
        if self.d >= 1 << 31:
            raise ValueError("only small primes are supported")

    @property
    def half_unit(self) -> int:
        """The inverse of 2 mod d, as a plain int."""
        return (self.d + 1) // 2

    def elem(self, value: int) -> "FpElem":
        return FpElem(value % self.d, self)

    def __repr__(self):
        return f"Modulus({self.d})"


@dataclass(frozen=True)
class FpElem:
    """An element of Z_d, always stored reduced to [0, d)."""

    value: int
    modulus: Modulus

    def __post_init__(self):
        if not 0 <= self.value < self.modulus.d:
            object.__setattr__(self, "value", self.value % self.modulus.d)

    def _check(self, other: "FpElem"):
        if self.modulus.d != other.modulus.d:
            raise MixedModulusError(
                f"mixed moduli {self.modulus.d} and {other.modulus.d}"
            )

    def __add__(self, other: "FpElem") -> "FpElem":
        self._check(other)
        return FpElem((self.value + other.value) % self.modulus.d, self.modulus)

    def __sub__(self, other: "FpElem") -> "FpElem":
        self._check(other)
        return FpElem((self.value - other.value) % self.modulus.d, self.modulus)

    def __mul__(self, other: "FpElem") -> "FpElem":
        self._check(other)
        return FpElem((self.value * other.value) % self.modulus.d, self.modulus)

    def __neg__(self) -> "FpElem":
        return FpElem((-self.value) % self.modulus.d, self.modulus)

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value


def inv(a: FpElem) -> FpElem:
    """Multiplicative inverse in Z_d; raises ZeroInverseError on a = 0."""
    if a.value == 0:
        raise ZeroInverseError("0 has no inverse in Z_d")
    return FpElem(pow(a.value, -1, a.modulus.d), a.modulus)


def half(a: FpElem) -> FpElem:
    """The unique b with 2b = a in Z_d (d odd, so 2 is invertible)."""
    return FpElem((a.value * a.modulus.half_unit) % a.modulus.d, a.modulus)


# Exact rational coefficients.  fractions.Fraction already maintains the
# lowest-terms/positive-denominator invariants we need, on top of Python's
# arbitrary-precision ints.
BigRational = Fraction


def rational_to_str(r: Fraction) -> str:
    """Serialize as "num/den", omitting the denominator when it is 1."""
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def rational_from_str(s: str) -> Fraction:
    return Fraction(s)
