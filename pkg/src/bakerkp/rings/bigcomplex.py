"""Arbitrary-precision complex floats for numeric fallback mode.

Exact mode covers curves whose constants stay inside Q(i); anything else
(an irrational branch constant such as sqrt(-3*nu_0), or the 8th root of
unity transform) runs here.  Arithmetic is routed through one gmpy2 context
per ComplexField so every operation is correctly rounded at the field's
working precision, which must be at least 128 bits.
"""

from __future__ import annotations

import gmpy2

from bakerkp.errors import ParameterError, SingularityError
from bakerkp.rings.gaussian import GaussianRational

MIN_PRECISION = 128
DEFAULT_PRECISION = 256


class ComplexField:
    """Ring-protocol wrapper around a fixed-precision gmpy2 context."""

    exact = False

    def __init__(self, precision: int = DEFAULT_PRECISION):
        if precision < MIN_PRECISION:
            raise ParameterError(f"precision {precision} < {MIN_PRECISION} bits")
        self.precision = precision
        self._ctx = gmpy2.context(precision=precision, allow_complex=True)
        self.zero = BigFloatComplex(self, gmpy2.mpc(0, precision=precision))
        self.one = BigFloatComplex(self, gmpy2.mpc(1, precision=precision))
        self.i = BigFloatComplex(self, gmpy2.mpc(0, 1, precision=precision))

    def __eq__(self, other):
        return isinstance(other, ComplexField) and self.precision == other.precision

    def __hash__(self):
        return hash(("ComplexField", self.precision))

    def __repr__(self):
        return f"ComplexField({self.precision})"

    def from_gaussian(self, q: GaussianRational) -> "BigFloatComplex":
        re = gmpy2.mpfr(q.re, self.precision)
        im = gmpy2.mpfr(q.im, self.precision)
        return BigFloatComplex(self, gmpy2.mpc(re, im, precision=self.precision))

    def from_int(self, n: int) -> "BigFloatComplex":
        return BigFloatComplex(self, gmpy2.mpc(n, precision=self.precision))

    def from_complex(self, z: complex) -> "BigFloatComplex":
        return BigFloatComplex(self, gmpy2.mpc(z, precision=self.precision))

    def inv(self, x: "BigFloatComplex") -> "BigFloatComplex":
        if x.z == 0:
            raise SingularityError("inverse of numeric zero")
        return BigFloatComplex(self, self._ctx.div(self.one.z, x.z))

    def sqrt(self, x: "BigFloatComplex") -> "BigFloatComplex":
        """Principal branch square root."""
        return BigFloatComplex(self, self._ctx.sqrt(x.z))

    def is_zero(self, x: "BigFloatComplex") -> bool:
        return x.z == 0

    def max_abs(self, x: "BigFloatComplex") -> float:
        return float(self._ctx.abs(x.z))


class BigFloatComplex:
    """Complex number tied to a ComplexField's precision."""

    __slots__ = ("field", "z")

    def __init__(self, field: ComplexField, z):
        self.field = field
        self.z = z

    def _check(self, other: "BigFloatComplex"):
        if self.field is not other.field and self.field != other.field:
            raise ParameterError("numeric operands have different precision")

    def __add__(self, other):
        if type(other) is not BigFloatComplex:
            if isinstance(other, int):
                return BigFloatComplex(self.field, self.field._ctx.add(self.z, other))
            return NotImplemented
        self._check(other)
        return BigFloatComplex(self.field, self.field._ctx.add(self.z, other.z))

    __radd__ = __add__

    def __sub__(self, other):
        if type(other) is not BigFloatComplex:
            if isinstance(other, int):
                return BigFloatComplex(self.field, self.field._ctx.sub(self.z, other))
            return NotImplemented
        self._check(other)
        return BigFloatComplex(self.field, self.field._ctx.sub(self.z, other.z))

    def __rsub__(self, other):
        if isinstance(other, int):
            return BigFloatComplex(self.field, self.field._ctx.sub(gmpy2.mpc(other), self.z))
        return NotImplemented

    def __mul__(self, other):
        if type(other) is not BigFloatComplex:
            if isinstance(other, int):
                return BigFloatComplex(self.field, self.field._ctx.mul(self.z, other))
            return NotImplemented
        self._check(other)
        return BigFloatComplex(self.field, self.field._ctx.mul(self.z, other.z))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if type(other) is not BigFloatComplex:
            return NotImplemented
        self._check(other)
        if other.z == 0:
            raise SingularityError("division by numeric zero")
        return BigFloatComplex(self.field, self.field._ctx.div(self.z, other.z))

    def __neg__(self):
        # unary minus on mpc rounds at the global context; stay in ours
        return BigFloatComplex(self.field, self.field._ctx.minus(self.z))

    def __pow__(self, n: int):
        acc = self.field.one
        base = self
        if n < 0:
            base = self.field.inv(self)
            n = -n
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def __bool__(self):
        return self.z != 0

    def __eq__(self, other):
        if type(other) is not BigFloatComplex:
            return NotImplemented
        return self.field == other.field and self.z == other.z

    def __complex__(self):
        return complex(self.z)

    def __abs__(self):
        return float(self.field._ctx.abs(self.z))

    def __repr__(self):
        return f"BigFloatComplex({self.z!r})"

    def to_json(self):
        return {"re": repr(self.z.real), "im": repr(self.z.imag)}
