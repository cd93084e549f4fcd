"""Coefficient rings as small strategy objects.

Every normal-form routine is written once against this interface:
``zero``/``one``, ``size`` (Euclidean size, -1 for zero), ``divmod``,
``normalizing_unit`` and ``inverse_unit``.
"""

from __future__ import annotations

from fractions import Fraction

from .laurent import LaurentPoly


class IntegerRing:
    name = "ZZ"
    zero = 0
    one = 1

    def coerce(self, a):
        if isinstance(a, bool) or not isinstance(a, int):
            if isinstance(a, Fraction) and a.denominator == 1:
                return int(a)
            raise TypeError(f"{a!r} is not an integer")
        return a

    def size(self, a):
        return abs(a) if a else -1

    def divmod(self, a, b):
        # symmetric remainder keeps entries small
        q, r = divmod(a, b)
        if r and 2 * abs(r) > abs(b):
            q, r = q + 1, r - b
        return q, r

    def is_unit(self, a):
        return a in (1, -1)

    def normalizing_unit(self, a):
        return -1 if a < 0 else 1

    def inverse_unit(self, u):
        return u

    def __repr__(self):
        return "ZZ"


class RationalField:
    name = "QQ"
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, a):
        return Fraction(a)

    def size(self, a):
        return 0 if a else -1

    def divmod(self, a, b):
        return a / b, Fraction(0)

    def is_unit(self, a):
        return bool(a)

    def normalizing_unit(self, a):
        return 1 / a if a else Fraction(1)

    def inverse_unit(self, u):
        return 1 / u

    def __repr__(self):
        return "QQ"


class LaurentRing:
    name = "QQ[t,t^-1]"
    zero = LaurentPoly()
    one = LaurentPoly.constant(1)

    def coerce(self, a):
        if isinstance(a, LaurentPoly):
            return a
        return LaurentPoly.constant(a)

    def size(self, a):
        return a.span()

    def divmod(self, a, b):
        return a.divmod(b)

    def is_unit(self, a):
        return a.is_unit()

    def normalizing_unit(self, a):
        return a.normalizing_unit()

    def inverse_unit(self, u):
        return u.unit_inverse()

    def __repr__(self):
        return "QQ[t,t^-1]"


ZZ = IntegerRing()
QQ = RationalField()
LAURENT = LaurentRing()

RINGS = {r.name: r for r in (ZZ, QQ, LAURENT)}
