"""Etale quadratic extensions of Q(i).

Adjoining square roots Y_1, ..., Y_g with fixed squares Y_j^2 = n_j gives a
2^g-dimensional commutative algebra Q(i)[Y_1, ..., Y_g] / (Y_j^2 - n_j).  A
divisor whose y-coordinates are irrational lives here: exact arithmetic never
needs the actual complex values, only the relations n_j = N(x_j).

Elements are stored sparsely as {subset bitmask: GaussianRational}, the mask
selecting which generators appear in the monomial.  Multiplication XORs masks
and folds the squared generators from the overlap into the coefficient.
"""

from __future__ import annotations

from bakerkp.errors import ParameterError, SingularityError
from bakerkp.rings.gaussian import GaussianRational, QQI, gauss_from_json


class EtaleAlgebra:
    """The ring Q(i)[Y_1..Y_g]/(Y_j^2 - n_j) with all n_j nonzero."""

    exact = True

    def __init__(self, relations):
        relations = tuple(relations)
        for j, n in enumerate(relations):
            if not isinstance(n, GaussianRational):
                raise ParameterError("relations must be GaussianRational values")
            if not n:
                raise SingularityError(f"relation n_{j+1} = 0 is not etale")
        self.relations = relations
        self.ngens = len(relations)
        # Product of n_j over every subset, indexed by bitmask.
        nprod = [QQI.one] * (1 << self.ngens)
        for j, n in enumerate(relations):
            bit = 1 << j
            for m in range(bit):
                nprod[m | bit] = nprod[m] * n
        self._nprod = nprod
        self.zero = EtaleScalar(self, {})
        self.one = EtaleScalar(self, {0: QQI.one})

    def __eq__(self, other):
        return isinstance(other, EtaleAlgebra) and self.relations == other.relations

    def __hash__(self):
        return hash(self.relations)

    def __repr__(self):
        return f"EtaleAlgebra({list(self.relations)!r})"

    @property
    def dimension(self) -> int:
        return 1 << self.ngens

    def gen(self, j: int) -> "EtaleScalar":
        """The j-th adjoined square root (0-based), with gen(j)^2 = n_j."""
        if not 0 <= j < self.ngens:
            raise ParameterError(f"generator index {j} out of range")
        return EtaleScalar(self, {1 << j: QQI.one})

    def from_gaussian(self, q: GaussianRational) -> "EtaleScalar":
        return EtaleScalar(self, {0: q}) if q else self.zero

    def from_int(self, n: int) -> "EtaleScalar":
        return self.from_gaussian(QQI.from_int(n))

    def inv(self, x: "EtaleScalar") -> "EtaleScalar":
        return x.inverse()

    @staticmethod
    def is_zero(x: "EtaleScalar") -> bool:
        return not x.c

    @staticmethod
    def max_abs(x: "EtaleScalar") -> float:
        return max((abs(complex(v)) for v in x.c.values()), default=0.0)


class EtaleScalar:
    """Sparse element of an EtaleAlgebra."""

    __slots__ = ("alg", "c")

    def __init__(self, alg: EtaleAlgebra, coeffs: dict):
        self.alg = alg
        self.c = coeffs

    def _check(self, other: "EtaleScalar"):
        if self.alg is not other.alg and self.alg != other.alg:
            raise ParameterError("etale operands have different relations")

    def __add__(self, other):
        if type(other) is not EtaleScalar:
            return NotImplemented
        self._check(other)
        out = dict(self.c)
        for m, v in other.c.items():
            acc = out.get(m)
            s = v if acc is None else acc + v
            if s:
                out[m] = s
            elif acc is not None:
                del out[m]
        return EtaleScalar(self.alg, out)

    def __sub__(self, other):
        if type(other) is not EtaleScalar:
            return NotImplemented
        self._check(other)
        out = dict(self.c)
        for m, v in other.c.items():
            acc = out.get(m)
            s = -v if acc is None else acc - v
            if s:
                out[m] = s
            elif acc is not None:
                del out[m]
        return EtaleScalar(self.alg, out)

    def __mul__(self, other):
        if type(other) is not EtaleScalar:
            if isinstance(other, (GaussianRational, int)):
                return self.scale(other)
            return NotImplemented
        self._check(other)
        nprod = self.alg._nprod
        out = {}
        rhs = list(other.c.items())
        for m1, v1 in self.c.items():
            for m2, v2 in rhs:
                p = v1 * v2
                ov = m1 & m2
                if ov:
                    p = p * nprod[ov]
                m = m1 ^ m2
                acc = out.get(m)
                out[m] = p if acc is None else acc + p
        return EtaleScalar(self.alg, {m: v for m, v in out.items() if v})

    def __rmul__(self, other):
        if isinstance(other, (GaussianRational, int)):
            return self.scale(other)
        return NotImplemented

    def scale(self, q) -> "EtaleScalar":
        if not q:
            return self.alg.zero
        return EtaleScalar(self.alg, {m: v * q for m, v in self.c.items()})

    def __neg__(self):
        return EtaleScalar(self.alg, {m: -v for m, v in self.c.items()})

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        acc = self.alg.one
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        if type(other) is not EtaleScalar:
            return NotImplemented
        return self.alg == other.alg and self.c == other.c

    def __hash__(self):
        return hash((self.alg, tuple(sorted(self.c.items(), key=lambda kv: kv[0]))))

    def flip(self, j: int) -> "EtaleScalar":
        """The involution Y_j -> -Y_j, a ring homomorphism."""
        bit = 1 << j
        return EtaleScalar(self.alg, {m: (-v if m & bit else v) for m, v in self.c.items()})

    def base_part(self) -> GaussianRational:
        """Coefficient of the empty monomial."""
        return self.c.get(0, QQI.zero)

    def is_base(self) -> bool:
        return all(m == 0 for m in self.c)

    def inverse(self) -> "EtaleScalar":
        """Invert by eliminating generators one at a time.

        With a = p + q*Y_g, the product a * flip_g(a) = p^2 - q^2 n_g has no
        Y_g, so 1/a = flip_g(a) * inverse(p^2 - q^2 n_g); recursing down to the
        base field costs O(g) multiplications.
        """
        live = 0
        for m in self.c:
            live |= m
        if live == 0:
            q = self.c.get(0)
            if q is None or not q:
                raise SingularityError("etale inverse of zero")
            return self.alg.from_gaussian(q.inverse())
        j = live.bit_length() - 1
        conj = self.flip(j)
        prod = self * conj
        if not prod.c:
            raise SingularityError(
                f"etale element is a zero divisor (conjugate product vanished at Y_{j+1}"
                f", relation n_{j+1} = {self.alg.relations[j]!r})"
            )
        return conj * prod.inverse()

    def norm(self) -> GaussianRational:
        """Product over all 2^g sign patterns; always lands in the base field."""
        acc = self
        for j in range(self.alg.ngens):
            acc = acc * acc.flip(j)
        if not acc.is_base():
            raise SingularityError("etale norm did not reduce to the base field")
        return acc.base_part()

    def __repr__(self):
        return f"EtaleScalar({self.c!r})"

    def to_json(self):
        return {str(m): v.to_json() for m, v in sorted(self.c.items())}


def etale_from_json(alg: EtaleAlgebra, obj: dict) -> EtaleScalar:
    coeffs = {}
    for key, val in obj.items():
        q = gauss_from_json(val)
        if q:
            coeffs[int(key)] = q
    return EtaleScalar(alg, coeffs)
