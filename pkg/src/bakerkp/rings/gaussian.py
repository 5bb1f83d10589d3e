"""Exact Gaussian rational arithmetic, the base field of every exact computation.

A GaussianRational is re + im*i with both parts arbitrary-precision rationals
(gmpy2.mpq, so fractions are always reduced and equality is exact).  The class
is deliberately small and allocation-lean: it sits in the innermost loops of
the jet and etale multiplications.
"""

from __future__ import annotations

from typing import Union

import gmpy2
from gmpy2 import mpq, mpz

from bakerkp.errors import ParameterError, SingularityError

_Q0 = mpq(0)
_Q1 = mpq(1)

RationalLike = Union[int, str, mpq]


def _q(value: RationalLike) -> mpq:
    if type(value) is mpq:
        return value
    return mpq(value)


def _new(re: mpq, im: mpq) -> "GaussianRational":
    z = object.__new__(GaussianRational)
    z.re = re
    z.im = im
    return z


class GaussianRational:
    """Element of Q(i) in canonical reduced form."""

    __slots__ = ("re", "im")

    def __init__(self, re: RationalLike = 0, im: RationalLike = 0):
        self.re = _q(re)
        self.im = _q(im)

    def __add__(self, other):
        if type(other) is GaussianRational:
            return _new(self.re + other.re, self.im + other.im)
        if isinstance(other, int):
            return _new(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if type(other) is GaussianRational:
            return _new(self.re - other.re, self.im - other.im)
        if isinstance(other, int):
            return _new(self.re - other, self.im)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, int):
            return _new(other - self.re, -self.im)
        return NotImplemented

    def __mul__(self, other):
        if type(other) is GaussianRational:
            ai, bi = self.im, other.im
            if ai or bi:
                ar, br = self.re, other.re
                return _new(ar * br - ai * bi, ar * bi + ai * br)
            return _new(self.re * other.re, _Q0)
        if isinstance(other, int):
            return _new(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self):
        return _new(-self.re, -self.im)

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        acc = ONE
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def __eq__(self, other):
        if type(other) is GaussianRational:
            return self.re == other.re and self.im == other.im
        if isinstance(other, int):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def inverse(self) -> "GaussianRational":
        if self.im:
            n = self.re * self.re + self.im * self.im
            return _new(self.re / n, -self.im / n)
        if not self.re:
            raise SingularityError("inverse of zero in Q(i)")
        return _new(_Q1 / self.re, _Q0)

    def conjugate(self) -> "GaussianRational":
        return _new(self.re, -self.im)

    def __truediv__(self, other):
        if type(other) is GaussianRational:
            return self * other.inverse()
        if isinstance(other, int):
            if other == 0:
                raise SingularityError("division by zero")
            return _new(self.re / other, self.im / other)
        return NotImplemented

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        if not self.im:
            return f"GaussianRational('{self.re}')"
        return f"GaussianRational('{self.re}', '{self.im}')"

    def to_json(self):
        """JSON form: bare "p/q" string when real, {"re","im"} otherwise."""
        if not self.im:
            return str(self.re)
        return {"re": str(self.re), "im": str(self.im)}


ZERO = _new(_Q0, _Q0)
ONE = _new(_Q1, _Q0)
I_UNIT = _new(_Q0, _Q1)


def gauss(re: RationalLike = 0, im: RationalLike = 0) -> GaussianRational:
    return _new(_q(re), _q(im))


def gauss_from_json(obj) -> GaussianRational:
    """Accept int, "p/q" string, or {"re": "p/q", "im": "p/q"}."""
    if isinstance(obj, (int, str)):
        return _new(_q(obj), _Q0)
    if isinstance(obj, dict):
        return _new(_q(obj.get("re", 0)), _q(obj.get("im", 0)))
    raise ParameterError(f"cannot parse scalar {obj!r}")


def _rational_sqrt(r: mpq):
    """Exact square root of a nonnegative rational, or None."""
    if r < 0:
        return None
    num, den = r.numerator, r.denominator
    if not (gmpy2.is_square(num) and gmpy2.is_square(den)):
        return None
    return mpq(gmpy2.isqrt(num), gmpy2.isqrt(den))


def gaussian_sqrt_exact(z: GaussianRational):
    """A square root of z inside Q(i), or None when no such root exists.

    The returned branch is deterministic: re > 0, or re == 0 and im >= 0.
    """
    if not z:
        return ZERO
    if not z.im:
        r = _rational_sqrt(z.re)
        if r is not None:
            return _new(r, _Q0)
        r = _rational_sqrt(-z.re)
        if r is not None:
            return _new(_Q0, r)
        return None
    # c + di with c^2 - d^2 = re, 2cd = im; then (c^2 + d^2)^2 = |z|^2.
    t = _rational_sqrt(z.re * z.re + z.im * z.im)
    if t is None:
        return None
    c2 = (z.re + t) / 2
    c = _rational_sqrt(c2)
    if c is None or not c:
        return None
    d = z.im / (2 * c)
    root = _new(c, d)
    if root * root == z:
        return root if (root.re > 0 or (root.re == 0 and root.im >= 0)) else -root
    return None


class _GaussianField:
    """Ring-protocol wrapper for Q(i); a stateless singleton."""

    zero = ZERO
    one = ONE
    i = I_UNIT
    exact = True

    @staticmethod
    def from_gaussian(q: GaussianRational) -> GaussianRational:
        return q

    @staticmethod
    def from_int(n: int) -> GaussianRational:
        return _new(_q(n), _Q0)

    @staticmethod
    def inv(x: GaussianRational) -> GaussianRational:
        return x.inverse()

    @staticmethod
    def is_zero(x: GaussianRational) -> bool:
        return not x

    @staticmethod
    def max_abs(x: GaussianRational) -> float:
        return abs(complex(x))

    def __repr__(self):
        return "QQI"


GaussianField = _GaussianField
QQI = _GaussianField()
