"""Hyperelliptic curve models and divisors on their symmetric products.

Two models are supported.  The odd model C is a monic curve

    Y^2 = X^(2g+1) + lam_2 X^(2g) + ... + lam_{4g}. X + lam_{4g+2}

with one point at infinity; the even model V is

    y^2 = nu_0 x^(2g+2) + nu_2 x^(2g+1) + ... + nu_{4g+4},   nu_0 != 0

with two.  The coefficient subscripts are weights: wt(x) = 2, wt(y) = 2g+2
(2g+1 on the odd model), wt(nu_i) = wt(lam_i) = i, making both defining
equations weight homogeneous (4g+4 resp. 4g+2).  Every function this library
evaluates is a function of an unordered g-tuple of affine curve points, the
symmetric-product coordinate; SymDivisor holds such a tuple.

Coefficients and x-coordinates are exact Gaussian rationals.  y-coordinates
may be given explicitly or as a sign tag, in which case exact arithmetic
adjoins them through an etale extension and numeric mode takes the principal
square root.
"""

from __future__ import annotations

from dataclasses import dataclass

from bakerkp.errors import ParameterError, PreconditionError, SingularityError
from bakerkp.polys import (
    poly_compose_shift,
    poly_derivative,
    poly_eval,
    poly_eval_with_derivative,
    poly_from_roots,
    poly_mul,
    poly_scale,
    poly_trim,
    resultant,
)
from bakerkp.rings import (
    ComplexField,
    DEFAULT_PRECISION,
    EtaleAlgebra,
    GaussianRational,
    QQI,
    gauss,
    gauss_from_json,
    gaussian_sqrt_exact,
)


def _as_gauss(v) -> GaussianRational:
    if isinstance(v, GaussianRational):
        return v
    try:
        return gauss(v)
    except (TypeError, ValueError):
        raise ParameterError(f"expected an exact scalar, got {v!r}") from None


class _CurveBase:
    def poly_in(self, ring):
        """Defining polynomial's ascending coefficient list embedded in a ring."""
        return [ring.from_gaussian(c) for c in self.poly]

    def eval_poly(self, x, ring=QQI):
        """P(x) and P'(x) by one Horner pass."""
        return poly_eval_with_derivative(self.poly_in(ring), x, ring)

    def validate(self) -> GaussianRational:
        """Nonzero resultant of (P, P') certifying no multiple roots."""
        return self._certificate

    def _require_squarefree(self):
        res = resultant(self.poly, poly_derivative(self.poly, QQI), QQI)
        if not res:
            raise PreconditionError(f"{self.model} model polynomial has a multiple root")
        self._certificate = res

    def weight_audit(self) -> dict:
        """Per-monomial weight bookkeeping of the defining equation."""
        rows = []
        target = self.equation_weight
        ok = True
        for k, coeff in enumerate(self.coeffs):
            exp = self.degree - k
            wt = 2 * k + 2 * exp  # wt(coeff_k) = 2k, wt(x) = 2
            rows.append({"monomial": f"c_{2 * k} x^{exp}", "weight": wt})
            ok = ok and wt == target
        rows.append({"monomial": "y^2", "weight": 2 * self.y_weight})
        ok = ok and 2 * self.y_weight == target
        return {"model": self.model, "genus": self.genus, "target": target, "monomials": rows, "ok": ok}


class OddCurve(_CurveBase):
    """Monic odd-model curve Y^2 = M(X), one infinite point."""

    model = "odd"

    def __init__(self, genus: int, coeffs):
        if genus < 1:
            raise PreconditionError("genus must be >= 1")
        coeffs = [_as_gauss(c) for c in coeffs]
        if len(coeffs) != 2 * genus + 1:
            raise ParameterError(
                f"odd model genus {genus} needs {2 * genus + 1} coefficients lam_2..lam_{4 * genus + 2}"
            )
        self.genus = genus
        self.coeffs = [QQI.one] + coeffs  # descending: [lam_0=1, lam_2, ...]
        self.degree = 2 * genus + 1
        self.y_weight = 2 * genus + 1
        self.equation_weight = 4 * genus + 2
        # ascending coefficient list of M
        self.poly = list(reversed(self.coeffs))
        self._require_squarefree()

    def lam(self, i: int) -> GaussianRational:
        """lambda_i with the conventions lam_0 = 1 and lam_i = 0 for i < 0."""
        if i < 0:
            return QQI.zero
        if i % 2:
            raise ParameterError(f"odd-model coefficient subscript {i} must be even")
        k = i // 2
        if k >= len(self.coeffs):
            raise ParameterError(f"lambda_{i} out of range for genus {self.genus}")
        return self.coeffs[k]

    def suffix_range(self):
        """Valid p-function suffixes 1, 3, ..., 2g-1."""
        return range(1, 2 * self.genus, 2)

    def shifted(self, x0) -> "OddCurve":
        """The curve in the shifted coordinate X' = X + x0, i.e. M(X + x0)."""
        x0 = _as_gauss(x0)
        shifted = poly_compose_shift(self.poly, x0, QQI)
        return OddCurve(self.genus, list(reversed(shifted[:-1])))

    def __repr__(self):
        return f"OddCurve(genus={self.genus})"

    def to_json(self):
        return {
            "model": "odd",
            "genus": self.genus,
            "coeffs": [c.to_json() for c in self.coeffs[1:]],
        }


class EvenCurve(_CurveBase):
    """Even-model curve y^2 = N(x) with nu_0 != 0, two infinite points."""

    model = "even"

    def __init__(self, genus: int, coeffs, branch_point=None, roots=None):
        if genus < 1:
            raise PreconditionError("genus must be >= 1")
        coeffs = [_as_gauss(c) for c in coeffs]
        if len(coeffs) != 2 * genus + 3:
            raise ParameterError(
                f"even model genus {genus} needs {2 * genus + 3} coefficients nu_0..nu_{4 * genus + 4}"
            )
        if not coeffs[0]:
            raise PreconditionError("even model requires nu_0 != 0")
        self.genus = genus
        self.coeffs = coeffs  # descending: [nu_0, nu_2, ...]
        self.degree = 2 * genus + 2
        self.y_weight = 2 * genus + 2
        self.equation_weight = 4 * genus + 4
        self.poly = list(reversed(coeffs))
        self._require_squarefree()
        self.branch_point = None
        if branch_point is not None:
            branch_point = _as_gauss(branch_point)
            if poly_eval(self.poly, branch_point, QQI):
                raise PreconditionError("branch point a must satisfy N(a) = 0 exactly")
            self.branch_point = branch_point
        self.roots = None
        if roots is not None:
            roots = [_as_gauss(r) for r in roots]
            if len(roots) != self.degree:
                raise ParameterError(f"expected {self.degree} roots")
            check = poly_scale(poly_from_roots(roots, QQI), coeffs[0], QQI)
            if poly_trim(check, QQI) != poly_trim(self.poly, QQI):
                raise ParameterError("declared roots do not reproduce N(x)")
            self.roots = roots

    def nu(self, i: int) -> GaussianRational:
        """nu_i; the generating polynomial convention sets nu_{-2} = 0."""
        if i == -2:
            return QQI.zero
        if i < 0 or i % 2:
            raise ParameterError(f"even-model coefficient subscript {i} invalid")
        k = i // 2
        if k >= len(self.coeffs):
            raise ParameterError(f"nu_{i} out of range for genus {self.genus}")
        return self.coeffs[k]

    def suffix_range(self):
        """Valid P-function suffixes 2, 4, ..., 2g."""
        return range(2, 2 * self.genus + 1, 2)

    def require_branch_point(self) -> GaussianRational:
        if self.branch_point is None:
            raise PreconditionError("operation needs the curve's branch point a with N(a) = 0")
        return self.branch_point

    def other_roots(self):
        """The roots a_i of N with the branch point removed (needs declared roots)."""
        a = self.require_branch_point()
        if self.roots is None:
            raise PreconditionError("operation needs the curve's full root list")
        rest = list(self.roots)
        rest.remove(a)
        return rest

    def shifted(self, x0) -> "EvenCurve":
        x0 = _as_gauss(x0)
        shifted = poly_compose_shift(self.poly, x0, QQI)
        shifted += [QQI.zero] * (self.degree + 1 - len(shifted))
        return EvenCurve(
            self.genus,
            list(reversed(shifted)),
            branch_point=None if self.branch_point is None else self.branch_point - x0,
            roots=None if self.roots is None else [r - x0 for r in self.roots],
        )

    def __repr__(self):
        return f"EvenCurve(genus={self.genus})"

    def to_json(self):
        out = {
            "model": "even",
            "genus": self.genus,
            "coeffs": [c.to_json() for c in self.coeffs],
        }
        if self.branch_point is not None:
            out["branch_point"] = self.branch_point.to_json()
        if self.roots is not None:
            out["roots"] = [r.to_json() for r in self.roots]
        return out


def curve_from_json(obj: dict):
    model = obj.get("model")
    genus = obj.get("genus")
    coeffs = [gauss_from_json(c) for c in obj.get("coeffs", [])]
    if model == "odd":
        return OddCurve(genus, coeffs)
    if model == "even":
        bp = obj.get("branch_point")
        roots = obj.get("roots")
        return EvenCurve(
            genus,
            coeffs,
            branch_point=None if bp is None else gauss_from_json(bp),
            roots=None if roots is None else [gauss_from_json(r) for r in roots],
        )
    raise ParameterError(f"unknown curve model {model!r}")


@dataclass(frozen=True)
class DivisorPoint:
    x: GaussianRational
    y: GaussianRational | None = None  # explicit y-coordinate when known
    sign: int = 1  # branch tag used when y is adjoined

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ParameterError("y_sign must be +1 or -1")


class SymDivisor:
    """g affine points on a curve, the Sym^g coordinate of every evaluation.

    Generic position is enforced: pairwise distinct x-coordinates, and on the
    even model no point above the branch point a.
    """

    def __init__(self, curve, points):
        points = list(points)
        if len(points) != curve.genus:
            raise PreconditionError(f"divisor needs exactly g = {curve.genus} points")
        xs = [p.x for p in points]
        for i in range(len(xs)):
            for j in range(i + 1, len(xs)):
                if xs[i] == xs[j]:
                    raise SingularityError("divisor x-coordinates must be pairwise distinct")
        if curve.model == "even" and curve.branch_point is not None:
            for x in xs:
                if x == curve.branch_point:
                    raise SingularityError("divisor point sits above the branch point a")
        for p in points:
            val = poly_eval(curve.poly, p.x, QQI)
            if p.y is not None:
                if p.y * p.y != val:
                    raise PreconditionError(f"point x = {p.x!r}: y^2 != curve polynomial value")
            elif not val:
                raise SingularityError(
                    f"point x = {p.x!r} is a branch point; give y = 0 explicitly if intended"
                )
        self.curve = curve
        self.points = points

    @property
    def genus(self) -> int:
        return self.curve.genus

    def realize(self, mode: str = "exact", precision: int = DEFAULT_PRECISION):
        """Concrete coordinates in a scalar ring: (ring, xs, ys).

        Exact mode resolves sign-tagged y-coordinates inside Q(i) when the
        curve value is a perfect square there and otherwise adjoins them in
        one etale extension.  Numeric mode takes principal square roots at
        the requested precision.
        """
        if mode == "numeric":
            field = ComplexField(precision)
            xs = [field.from_gaussian(p.x) for p in self.points]
            ys = []
            for p in self.points:
                if p.y is not None:
                    ys.append(field.from_gaussian(p.y))
                else:
                    val = field.from_gaussian(poly_eval(self.curve.poly, p.x, QQI))
                    root = field.sqrt(val)
                    ys.append(root if p.sign == 1 else -root)
            return field, xs, ys
        if mode != "exact":
            raise ParameterError(f"unknown mode {mode!r}")
        resolved: list[GaussianRational | None] = []
        relations = []
        for p in self.points:
            if p.y is not None:
                resolved.append(p.y)
                continue
            val = poly_eval(self.curve.poly, p.x, QQI)
            root = gaussian_sqrt_exact(val)
            if root is not None:
                resolved.append(root if p.sign == 1 else -root)
            else:
                resolved.append(None)
                relations.append(val)
        if not relations:
            return QQI, [p.x for p in self.points], list(resolved)
        alg = EtaleAlgebra(relations)
        xs = [alg.from_gaussian(p.x) for p in self.points]
        ys = []
        gen_index = 0
        for p, r in zip(self.points, resolved):
            if r is not None:
                ys.append(alg.from_gaussian(r))
            else:
                y = alg.gen(gen_index)
                gen_index += 1
                ys.append(y if p.sign == 1 else -y)
        return alg, xs, ys

    def to_json(self):
        pts = []
        for p in self.points:
            if p.y is not None:
                pts.append({"x": p.x.to_json(), "y": p.y.to_json()})
            else:
                pts.append({"x": p.x.to_json(), "y_sign": p.sign})
        return {"points": pts}


def divisor_from_json(curve, obj: dict) -> SymDivisor:
    points = []
    for entry in obj.get("points", []):
        x = gauss_from_json(entry["x"])
        if "y" in entry:
            points.append(DivisorPoint(x, y=gauss_from_json(entry["y"])))
        else:
            points.append(DivisorPoint(x, sign=int(entry.get("y_sign", 1))))
    return SymDivisor(curve, points)
