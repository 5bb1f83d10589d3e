import pytest
from gmpy2 import mpq

from bakerkp.curves import DivisorPoint, EvenCurve, OddCurve, SymDivisor, curve_from_json, divisor_from_json
from bakerkp.errors import ParameterError, PreconditionError, SingularityError
from bakerkp.rings import EtaleAlgebra, QQI, gauss


def test_validate_accepts_distinct_roots():
    # M = X^3 - 1 and N = x^4 - 1
    odd = OddCurve(1, [0, 0, -1])
    assert odd.validate()
    even = EvenCurve(1, [1, 0, 0, 0, -1])
    assert even.validate()


def test_validate_rejects_double_root():
    # M = X^3 - 3X + 2 = (X-1)^2 (X+2)
    with pytest.raises(PreconditionError):
        OddCurve(1, [0, -3, 2])


def test_validate_rejects_nu0_zero():
    with pytest.raises(PreconditionError):
        EvenCurve(1, [0, 1, 0, 0, -1])


def test_validate_stable_under_shift():
    odd = OddCurve(2, [1, 2, 3, mpq(1, 2), -5])
    for x0 in (1, -3, mpq(2, 7)):
        assert odd.shifted(x0).validate()
    even = EvenCurve(1, [1, 0, 0, 0, -1], branch_point=1)
    shifted = even.shifted(mpq(1, 3))
    assert shifted.validate()
    assert shifted.branch_point == gauss(mpq(2, 3))


def test_weight_audit():
    # odd g=2: lam_4 X^3 has weight 4 + 6 = 10 = 4g+2
    report = OddCurve(2, [1, 2, 3, 4, 5]).weight_audit()
    assert report["ok"] and report["target"] == 10
    assert {"monomial": "c_4 x^3", "weight": 10} in report["monomials"]
    # even g=1: nu_2 x^3 has weight 2 + 6 = 8 = 4g+4
    report = EvenCurve(1, [1, 2, 3, 4, 5]).weight_audit()
    assert report["ok"] and report["target"] == 8
    assert {"monomial": "c_2 x^3", "weight": 8} in report["monomials"]
    # odd g=3: Y^2 has weight 2(2g+1) = 14
    report = OddCurve(3, [0, 1, 0, 2, 0, 3, 4]).weight_audit()
    assert {"monomial": "y^2", "weight": 14} in report["monomials"]


def test_eval_poly():
    even = EvenCurve(1, [1, 0, 0, 0, -1])
    assert even.eval_poly(gauss(1)) == (gauss(0), gauss(4))
    odd = OddCurve(1, [0, 0, -1])
    assert odd.eval_poly(gauss(2)) == (gauss(7), gauss(12))
    flat = EvenCurve(1, [1, 0, 0, 0, 16])  # N = x^4 + 16
    assert flat.eval_poly(gauss(0)) == (gauss(16), gauss(0))


def test_coefficient_accessors():
    odd = OddCurve(2, [7, 11, 13, 17, 19])
    assert odd.lam(0) == gauss(1)
    assert odd.lam(-4) == gauss(0)
    assert odd.lam(4) == gauss(11)
    assert odd.lam(10) == gauss(19)
    even = EvenCurve(1, [2, 3, 5, 7, 11])
    assert even.nu(0) == gauss(2)
    assert even.nu(-2) == gauss(0)
    assert even.nu(8) == gauss(11)
    with pytest.raises(ParameterError):
        even.nu(10)


def test_divisor_distinct_x_required():
    even = EvenCurve(1, [1, 0, 0, 0, -1], branch_point=1)
    curve2 = EvenCurve(2, [1, 0, 0, 0, 0, 0, -1], branch_point=1)
    with pytest.raises(SingularityError):
        SymDivisor(curve2, [DivisorPoint(gauss(2)), DivisorPoint(gauss(2), sign=-1)])
    with pytest.raises(SingularityError):
        SymDivisor(even, [DivisorPoint(gauss(1))])  # above the branch point


def test_divisor_explicit_y_checked():
    even = EvenCurve(1, [1, 0, 0, 0, -1])
    with pytest.raises(PreconditionError):
        SymDivisor(even, [DivisorPoint(gauss(2), y=gauss(3))])
    # 2^4 - 1 = 15 is not a square: explicit y must be etale
    d = SymDivisor(even, [DivisorPoint(gauss(2), sign=-1)])
    ring, xs, ys = d.realize()
    assert isinstance(ring, EtaleAlgebra)
    assert ys[0] * ys[0] == ring.from_gaussian(gauss(15))
    assert ys[0] == -ring.gen(0)


def test_divisor_curve_relation_holds_exactly():
    curve = EvenCurve(2, [1, 0, 0, 0, 0, 0, 3])  # y^2 = x^6 + 3
    d = SymDivisor(curve, [DivisorPoint(gauss(1), y=gauss(2)), DivisorPoint(gauss(-1), sign=1)])
    ring, xs, ys = d.realize()
    npoly = curve.poly_in(ring)
    from bakerkp.polys import poly_eval

    for x, y in zip(xs, ys):
        assert ring.is_zero(y * y - poly_eval(npoly, x, ring))


def test_divisor_rational_square_resolves_without_etale():
    curve = EvenCurve(1, [1, 0, 0, 0, 9])  # N(2) = 25
    d = SymDivisor(curve, [DivisorPoint(gauss(2), sign=-1)])
    ring, xs, ys = d.realize()
    assert ring is QQI
    assert ys[0] == gauss(-5)


def test_divisor_numeric_realization():
    curve = EvenCurve(1, [1, 0, 0, 0, -1])
    d = SymDivisor(curve, [DivisorPoint(gauss(2), sign=-1)])
    field, xs, ys = d.realize(mode="numeric", precision=192)
    val = ys[0] * ys[0] - field.from_int(15)
    assert field.max_abs(val) < 1e-50


def test_json_roundtrip():
    even = EvenCurve(1, [1, 0, 0, 0, -1], branch_point=1, roots=[1, -1, gauss(0, 1), gauss(0, -1)])
    back = curve_from_json(even.to_json())
    assert back.coeffs == even.coeffs and back.branch_point == even.branch_point
    odd = OddCurve(2, [1, 2, 3, 4, 5])
    assert curve_from_json(odd.to_json()).coeffs == odd.coeffs

    d = SymDivisor(even, [DivisorPoint(gauss(3), sign=-1)])
    d2 = divisor_from_json(even, d.to_json())
    assert d2.points[0].x == gauss(3) and d2.points[0].sign == -1
