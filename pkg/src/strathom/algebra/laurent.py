"""Laurent polynomials in one variable ``t`` with rational coefficients.

The ring Q[t, t^-1] is a PID; it becomes Euclidean once every element is
shifted by the unit ``t^-low`` so that its lowest exponent is zero.  The
Euclidean size of a nonzero element is its exponent span ``high - low``,
so the units ``c * t^k`` are exactly the elements of size 0.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, Mapping, Tuple, Union

Scalar = Union[int, Fraction]


def _to_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    raise TypeError(f"cannot use {type(c).__name__} as a rational coefficient")


class LaurentPoly:
    """Immutable element of Q[t, t^-1].

    Stored as a map ``exponent -> Fraction`` with zero coefficients dropped,
    so equality is equality of the coefficient maps.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, Scalar] | None = None):
        c: Dict[int, Fraction] = {}
        if coeffs:
            for k, v in coeffs.items():
                v = _to_fraction(v)
                if v:
                    c[int(k)] = v
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, c: Dict[int, Fraction]) -> "LaurentPoly":
        p = cls.__new__(cls)
        p._c = c
        p._hash = None
        return p

    @classmethod
    def constant(cls, c: Scalar) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, c: Scalar, k: int) -> "LaurentPoly":
        return cls({k: c})

    @classmethod
    def from_coefficients(cls, coeffs: Iterable[Scalar], low: int = 0) -> "LaurentPoly":
        """Build ``sum coeffs[i] * t^(low + i)``."""
        return cls({low + i: c for i, c in enumerate(coeffs)})

    # -- inspection -------------------------------------------------------

    @property
    def coefficients(self) -> Dict[int, Fraction]:
        return dict(self._c)

    def terms(self) -> Tuple[Tuple[int, Fraction], ...]:
        return tuple(sorted(self._c.items()))

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    @property
    def low(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no lowest exponent")
        return min(self._c)

    @property
    def high(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no highest exponent")
        return max(self._c)

    def span(self) -> int:
        """Euclidean size: ``high - low``, or -1 for zero."""
        if not self._c:
            return -1
        return max(self._c) - min(self._c)

    def is_unit(self) -> bool:
        return len(self._c) == 1

    def leading_coefficient(self) -> Fraction:
        return self._c[self.high]

    def coefficient_list(self) -> list:
        """Coefficients from ``low`` to ``high`` inclusive."""
        if not self._c:
            return []
        lo, hi = self.low, self.high
        return [self._c.get(k, Fraction(0)) for k in range(lo, hi + 1)]

    def evaluate(self, x):
        """Evaluate at a nonzero rational (or anything supporting ``**``)."""
        return sum((v * x ** k for k, v in self._c.items()), Fraction(0))

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "LaurentPoly | None":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction, Rational)):
            return LaurentPoly({0: other})
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        c = dict(self._c)
        for k, v in o._c.items():
            s = c.get(k, 0) + v
            if s:
                c[k] = s
            else:
                c.pop(k, None)
        return LaurentPoly._raw(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self._c or not o._c:
            return LaurentPoly._raw({})
        c: Dict[int, Fraction] = {}
        for k1, v1 in self._c.items():
            for k2, v2 in o._c.items():
                k = k1 + k2
                c[k] = c.get(k, 0) + v1 * v2
        return LaurentPoly._raw({k: v for k, v in c.items() if v})

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            if not self.is_unit():
                raise ValueError("only units can be raised to negative powers")
            ((k, v),) = self._c.items()
            return LaurentPoly._raw({k * e: Fraction(1) / v ** (-e)})
        out = LaurentPoly._raw({0: Fraction(1)})
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``t^k``."""
        return LaurentPoly._raw({e + k: v for e, v in self._c.items()})

    def scale(self, c: Scalar) -> "LaurentPoly":
        c = _to_fraction(c)
        if not c:
            return LaurentPoly._raw({})
        return LaurentPoly._raw({e: v * c for e, v in self._c.items()})

    def unit_inverse(self) -> "LaurentPoly":
        if not self.is_unit():
            raise ZeroDivisionError(f"{self} is not a unit of Q[t, t^-1]")
        ((k, v),) = self._c.items()
        return LaurentPoly._raw({-k: 1 / v})

    def divmod(self, other: "LaurentPoly") -> Tuple["LaurentPoly", "LaurentPoly"]:
        """Euclidean division with ``remainder.span() < other.span()``.

        Both operands are shifted to lowest exponent 0 and divided in Q[t];
        the shifts are then put back so that ``self == q * other + r``.
        """
        other = self._coerce(other)
        if not other._c:
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if not self._c:
            return LaurentPoly._raw({}), LaurentPoly._raw({})
        la, lb = self.low, other.low
        num = {k - la: v for k, v in self._c.items()}
        den_deg = other.high - lb
        den = {k - lb: v for k, v in other._c.items()}
        lead = den[den_deg]
        q: Dict[int, Fraction] = {}
        while num:
            top = max(num)
            if top < den_deg:
                break
            f = num[top] / lead
            s = top - den_deg
            q[s] = f
            for k, v in den.items():
                kk = k + s
                nv = num.get(kk, 0) - f * v
                if nv:
                    num[kk] = nv
                else:
                    num.pop(kk, None)
        quo = LaurentPoly._raw({k + la - lb: v for k, v in q.items()})
        rem = LaurentPoly._raw({k + la: v for k, v in num.items()})
        return quo, rem

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def divides(self, other: "LaurentPoly") -> bool:
        """True when ``self`` divides ``other`` in Q[t, t^-1]."""
        other = self._coerce(other)
        if not self._c:
            return not other._c
        return not other.divmod(self)[1]

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def normalized(self) -> "LaurentPoly":
        """Associate with lowest exponent 0 and leading coefficient 1."""
        if not self._c:
            return self
        lo, lead = self.low, self.leading_coefficient()
        return LaurentPoly._raw({k - lo: v / lead for k, v in self._c.items()})

    def normalizing_unit(self) -> "LaurentPoly":
        """The unit ``u`` with ``u * self == self.normalized()``."""
        if not self._c:
            return LaurentPoly._raw({0: Fraction(1)})
        return LaurentPoly._raw({-self.low: 1 / self.leading_coefficient()})

    @staticmethod
    def gcd(a: "LaurentPoly", b: "LaurentPoly") -> "LaurentPoly":
        while b:
            a, b = b, a.divmod(b)[1]
        return a.normalized()

    # -- comparison / display ---------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._c == o._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for k in sorted(self._c, reverse=True):
            v = self._c[k]
            sign = "-" if v < 0 else "+"
            a = abs(v)
            if k == 0:
                body = str(a)
            else:
                mono = "t" if k == 1 else f"t^{k}"
                body = mono if a == 1 else f"{a}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


T = LaurentPoly.monomial(1, 1)
ONE = LaurentPoly.constant(1)
ZERO = LaurentPoly()
