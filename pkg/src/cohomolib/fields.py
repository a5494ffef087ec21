"""A tiny exact quadratic extension Q(sqrt(d)) over the rationals.

Regular Cartan elements on the zero locus of the quadratic invariant have no
rational coordinates (a sum of squares cannot vanish over Q), so the scanning
scenarios that sit on that locus need an imaginary quadratic field.  Only the
Cartan-element plumbing touches these scalars; all lattice and module data
stays in plain Fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _coerce(x, d):
    if isinstance(x, QuadExt):
        if x.d != d:
            raise TypeError("mixing incompatible quadratic fields")
        return x
    if isinstance(x, (int, Fraction)):
        return QuadExt(Fraction(x), Fraction(0), d)
    return NotImplemented


@dataclass(frozen=True)
class QuadExt:
    """a + b*sqrt(d) with exact rational a, b and square-free integer d."""

    a: Fraction
    b: Fraction
    d: int

    @staticmethod
    def of(a, b=0, d=-3) -> "QuadExt":
        return QuadExt(Fraction(a), Fraction(b), d)

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __add__(self, other):
        o = _coerce(other, self.d)
        if o is NotImplemented:
            return NotImplemented
        return QuadExt(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = _coerce(other, self.d)
        if o is NotImplemented:
            return NotImplemented
        return QuadExt(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        o = _coerce(other, self.d)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = _coerce(other, self.d)
        if o is NotImplemented:
            return NotImplemented
        return QuadExt(self.a * o.a + self.d * self.b * o.b,
                       self.a * o.b + self.b * o.a, self.d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _coerce(other, self.d)
        if o is NotImplemented:
            return NotImplemented
        # multiply by the conjugate; the norm a^2 - d b^2 is nonzero for d < 0
        norm = o.a * o.a - self.d * o.b * o.b
        if norm == 0:
            raise ZeroDivisionError("division by zero in quadratic field")
        conj = QuadExt(o.a / norm, -o.b / norm, self.d)
        return self * conj

    def __rtruediv__(self, other):
        o = _coerce(other, self.d)
        if o is NotImplemented:
            return NotImplemented
        return o / self

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if isinstance(other, QuadExt):
            return self.d == other.d and self.a == other.a and self.b == other.b
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __repr__(self):
        if self.b == 0:
            return str(self.a)
        return f"({self.a}+{self.b}*sqrt({self.d}))"
