"""Truncated trivariate power series (jets) over any scalar ring.

A Jet3 is a polynomial in formal flow parameters t1, t2, t3 with every
monomial of total degree > order discarded.  Iterated directional derivatives
of a function along commuting flows are read off a jet's coefficients:
the coefficient of t^alpha times alpha! is the mixed partial derivative.

Exponent triples are packed into a single int (10 bits per variable) so the
multiplication loop, the hottest path of the whole library, works on plain
int keys.
"""

from __future__ import annotations

from gmpy2 import mpq

from bakerkp.errors import ParameterError, SingularityError
from bakerkp.rings.gaussian import GaussianRational, gauss

_SHIFT = 10
_MASK = (1 << _SHIFT) - 1
NVARS = 3


def _pack(exps) -> int:
    a, b, c = exps
    return a | (b << _SHIFT) | (c << (2 * _SHIFT))


def _unpack(key: int):
    return (key & _MASK, (key >> _SHIFT) & _MASK, key >> (2 * _SHIFT))


class JetRing:
    """Jets in t1, t2, t3 truncated at a fixed total order, over a base ring."""

    def __init__(self, base, order: int):
        if order < 0:
            raise ParameterError("jet order must be >= 0")
        if order > _MASK:
            raise ParameterError(f"jet order {order} too large")
        self.base = base
        self.order = order
        self.exact = getattr(base, "exact", True)
        self.zero = Jet3(self, {})
        self.one = Jet3(self, {0: base.one})

    def __eq__(self, other):
        return (
            isinstance(other, JetRing)
            and self.order == other.order
            and self.base == other.base
        )

    def __hash__(self):
        return hash(("JetRing", self.order, self.base))

    def __repr__(self):
        return f"JetRing({self.base!r}, order={self.order})"

    def const(self, value) -> "Jet3":
        if self.base.is_zero(value):
            return self.zero
        return Jet3(self, {0: value})

    def var(self, v: int) -> "Jet3":
        """The monomial t_{v+1}."""
        if not 0 <= v < NVARS:
            raise ParameterError(f"jet variable {v} out of range")
        if self.order < 1:
            return self.zero
        return Jet3(self, {1 << (v * _SHIFT): self.base.one})

    def from_gaussian(self, q: GaussianRational) -> "Jet3":
        return self.const(self.base.from_gaussian(q))

    def from_int(self, n: int) -> "Jet3":
        return self.const(self.base.from_int(n))

    def from_coefficients(self, coeffs: dict) -> "Jet3":
        """Build from a {(a, b, c): scalar} map; drops zeros, checks the order."""
        out = {}
        for exps, v in coeffs.items():
            if sum(exps) > self.order:
                raise ParameterError(f"monomial {exps} exceeds jet order {self.order}")
            if not self.base.is_zero(v):
                out[_pack(exps)] = v
        return Jet3(self, out)

    def inv(self, x: "Jet3") -> "Jet3":
        return x.inverse()

    def is_zero(self, x: "Jet3") -> bool:
        return not x.c

    def max_abs(self, x: "Jet3") -> float:
        return max((self.base.max_abs(v) for v in x.c.values()), default=0.0)

    def _int_factor(self, n: int):
        """A scalar multiplier equal to 1/n, cached per ring."""
        cache = getattr(self, "_int_factor_cache", None)
        if cache is None:
            cache = self._int_factor_cache = {}
        s = cache.get(n)
        if s is None:
            if self.exact:
                s = gauss(mpq(1, n))
            else:
                s = self.base.inv(self.base.from_int(n))
            cache[n] = s
        return s


class Jet3:
    """Sparse truncated power series; immutable by convention."""

    __slots__ = ("ring", "c")

    def __init__(self, ring: JetRing, coeffs: dict):
        self.ring = ring
        self.c = coeffs

    def _check(self, other: "Jet3"):
        if self.ring is not other.ring and self.ring != other.ring:
            raise ParameterError("jet operands have different ring parameters")

    @property
    def order(self) -> int:
        return self.ring.order

    def coefficients(self) -> dict:
        """Public coefficient map keyed by exponent triples."""
        return {_unpack(k): v for k, v in self.c.items()}

    def coeff(self, exps):
        """Coefficient of t^exps, as a base-ring scalar."""
        v = self.c.get(_pack(exps))
        return self.ring.base.zero if v is None else v

    def constant_term(self):
        return self.coeff((0, 0, 0))

    def __add__(self, other):
        if type(other) is not Jet3:
            return NotImplemented
        self._check(other)
        base_is_zero = self.ring.base.is_zero
        out = dict(self.c)
        for k, v in other.c.items():
            acc = out.get(k)
            s = v if acc is None else acc + v
            if base_is_zero(s):
                if acc is not None:
                    del out[k]
            else:
                out[k] = s
        return Jet3(self.ring, out)

    def __sub__(self, other):
        if type(other) is not Jet3:
            return NotImplemented
        self._check(other)
        base_is_zero = self.ring.base.is_zero
        out = dict(self.c)
        for k, v in other.c.items():
            acc = out.get(k)
            s = -v if acc is None else acc - v
            if base_is_zero(s):
                if acc is not None:
                    del out[k]
            else:
                out[k] = s
        return Jet3(self.ring, out)

    def __neg__(self):
        return Jet3(self.ring, {k: -v for k, v in self.c.items()})

    def __mul__(self, other):
        if type(other) is not Jet3:
            if isinstance(other, (GaussianRational, int)):
                return self.scale(other)
            return NotImplemented
        self._check(other)
        a, b = self.c, other.c
        if len(a) == 1 and 0 in a:
            return other.scale(a[0])
        if len(b) == 1 and 0 in b:
            return self.scale(b[0])
        order = self.ring.order
        rhs = [(k, (k & _MASK) + ((k >> _SHIFT) & _MASK) + (k >> (2 * _SHIFT)), v) for k, v in b.items()]
        out = {}
        for k1, v1 in a.items():
            d1 = order - ((k1 & _MASK) + ((k1 >> _SHIFT) & _MASK) + (k1 >> (2 * _SHIFT)))
            for k2, d2, v2 in rhs:
                if d2 > d1:
                    continue
                k = k1 + k2
                p = v1 * v2
                acc = out.get(k)
                out[k] = p if acc is None else acc + p
        base_is_zero = self.ring.base.is_zero
        return Jet3(self.ring, {k: v for k, v in out.items() if not base_is_zero(v)})

    def __rmul__(self, other):
        if isinstance(other, (GaussianRational, int)):
            return self.scale(other)
        return NotImplemented

    def scale(self, s) -> "Jet3":
        """Multiply every coefficient by a scalar (base element, Gaussian, or int)."""
        if isinstance(s, int):
            if s == 0:
                return self.ring.zero
            if s == 1:
                return self
        elif isinstance(s, GaussianRational) and not self.ring.exact:
            s = self.ring.base.from_gaussian(s)
        base_is_zero = self.ring.base.is_zero
        out = {}
        for k, v in self.c.items():
            p = v * s
            if not base_is_zero(p):
                out[k] = p
        return Jet3(self.ring, out)

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        if type(other) is not Jet3:
            return NotImplemented
        return self.ring == other.ring and self.c == other.c

    def truncate(self, order: int) -> "Jet3":
        """Copy into a ring of the given (not larger) order, dropping high terms."""
        if order > self.ring.order:
            raise ParameterError("cannot truncate upward")
        ring = JetRing(self.ring.base, order)
        out = {}
        for k, v in self.c.items():
            if (k & _MASK) + ((k >> _SHIFT) & _MASK) + (k >> (2 * _SHIFT)) <= order:
                out[k] = v
        return Jet3(ring, out)

    def derivative(self, v: int) -> "Jet3":
        """Formal d/dt_{v+1}; coefficients above order-1 are no longer complete."""
        shift = v * _SHIFT
        unit = 1 << shift
        out = {}
        for k, val in self.c.items():
            e = (k >> shift) & _MASK
            if e:
                out[k - unit] = val * e if e > 1 else val
        return Jet3(self.ring, out)

    def integrate(self, v: int) -> "Jet3":
        """Formal antiderivative in t_{v+1} with zero constant, truncated."""
        ring = self.ring
        shift = v * _SHIFT
        unit = 1 << shift
        out = {}
        for k, val in self.c.items():
            if (k & _MASK) + ((k >> _SHIFT) & _MASK) + (k >> (2 * _SHIFT)) >= ring.order:
                continue
            e = ((k >> shift) & _MASK) + 1
            out[k + unit] = val if e == 1 else val * ring._int_factor(e)
        return Jet3(ring, out)

    def inverse(self) -> "Jet3":
        """Newton iteration u -> u(2 - a u); needs an invertible constant term."""
        ring = self.ring
        a0 = self.c.get(0)
        if a0 is None:
            raise SingularityError("jet inverse: constant term is zero")
        u = ring.const(ring.base.inv(a0))
        if len(self.c) == 1:
            return u
        two = ring.from_int(2)
        correct = 1
        while correct <= ring.order:
            u = u * (two - self * u)
            correct *= 2
        return u

    def __repr__(self):
        items = ", ".join(f"{_unpack(k)}: {v!r}" for k, v in sorted(self.c.items()))
        return f"Jet3(order={self.ring.order}, {{{items}}})"

    def to_json(self):
        def scalar_json(v):
            return v.to_json() if hasattr(v, "to_json") else str(v)

        return {
            "order": self.ring.order,
            "coefficients": {
                ",".join(map(str, _unpack(k))): scalar_json(v)
                for k, v in sorted(self.c.items())
            },
        }
