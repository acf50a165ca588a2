"""Base field descriptors and exact scalars over them.

Four kinds of base field are supported: the rationals, odd prime fields, and
two formally tagged copies of the rationals whose classification semantics
are those of the reals and of a quadratically closed field.  Scalars over the
rational kinds are `fractions.Fraction` values (lowest terms); prime-field
scalars are residues in [0, p).  Structural equality is therefore exact
mathematical equality.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import FieldMismatchError, MathDomainError
from .primes import is_probable_prime


class FieldKind(enum.Enum):
    RATIONALS = "QQ"
    PRIME_FIELD = "GF"
    FORMAL_REAL = "RR"
    FORMAL_COMPLEX = "CC"


@dataclass(frozen=True)
class FieldSpec:
    kind: FieldKind
    p: int | None = None

    def __post_init__(self):
        if self.kind is FieldKind.PRIME_FIELD:
            if self.p is None or self.p < 3 or self.p % 2 == 0:
                raise MathDomainError("prime field modulus must be an odd prime")
            if not is_probable_prime(self.p):
                raise MathDomainError(f"modulus {self.p} is not prime")
        elif self.p is not None:
            raise MathDomainError("modulus is only meaningful for prime fields")

    @property
    def uses_fractions(self) -> bool:
        return self.kind is not FieldKind.PRIME_FIELD

    @property
    def is_ordered(self) -> bool:
        """Sign talk makes sense: the rationals and the formal-real field."""
        return self.kind in (FieldKind.RATIONALS, FieldKind.FORMAL_REAL)

    def descriptor(self) -> str:
        if self.kind is FieldKind.PRIME_FIELD:
            return f"GF:{self.p}"
        return self.kind.value

    def scalar(self, value) -> "Scalar":
        return Scalar(self, value)

    def zero(self) -> "Scalar":
        return Scalar(self, 0)

    def one(self) -> "Scalar":
        return Scalar(self, 1)

    def __repr__(self):
        return self.descriptor()


QQ = FieldSpec(FieldKind.RATIONALS)
RR = FieldSpec(FieldKind.FORMAL_REAL)
CC = FieldSpec(FieldKind.FORMAL_COMPLEX)


def GF(p: int) -> FieldSpec:
    return FieldSpec(FieldKind.PRIME_FIELD, p)


class Scalar:
    """An exact element of a base field."""

    __slots__ = ("field", "value")

    def __init__(self, field: FieldSpec, value):
        if isinstance(value, Scalar):
            if value.field != field:
                raise FieldMismatchError("scalar belongs to a different field")
            value = value.value
        if field.uses_fractions:
            if isinstance(value, float):
                raise MathDomainError("floats are not exact; pass Fraction or int")
            value = Fraction(value)
        else:
            if isinstance(value, Fraction):
                if value.denominator % field.p == 0:
                    raise MathDomainError("denominator vanishes modulo p")
                value = value.numerator * pow(value.denominator, -1, field.p)
            value = int(value) % field.p
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    # ---- coercion helpers ----

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatchError(
                    f"cannot mix scalars over {self.field} and {other.field}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return Scalar(self.field, other)
        return None

    # ---- arithmetic ----

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(self.field, self.value + o.value)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(self.field, self.value - o.value)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(self.field, o.value - self.value)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(self.field, self.value * o.value)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        if self.field.uses_fractions:
            return Scalar(self.field, self.value**exponent)
        return Scalar(self.field, pow(self.value, exponent, self.field.p))

    def __neg__(self):
        return Scalar(self.field, -self.value)

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise MathDomainError("division by zero")
        if self.field.uses_fractions:
            return Scalar(self.field, 1 / self.value)
        return Scalar(self.field, pow(self.value, -1, self.field.p))

    # ---- predicates ----

    def is_zero(self) -> bool:
        return self.value == 0

    def sign(self) -> int:
        if not self.field.is_ordered:
            raise MathDomainError(f"{self.field} carries no ordering")
        return (self.value > 0) - (self.value < 0)

    def as_fraction(self) -> Fraction:
        if not self.field.uses_fractions:
            raise MathDomainError("prime-field scalar has no canonical fraction")
        return self.value

    # ---- equality and display ----

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Scalar(self.field, other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.field == other.field and self.value == other.value

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return not self.is_zero()

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"Scalar({self.field}, {self.value})"
