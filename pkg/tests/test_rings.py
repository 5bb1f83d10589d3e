"""Ring axioms and defining relations for the four scalar rings."""

import random

import pytest
from gmpy2 import mpq

from bakerkp.errors import ParameterError, SingularityError
from bakerkp.rings import (
    ComplexField,
    EtaleAlgebra,
    JetRing,
    QQI,
    etale_from_json,
    gauss,
    gauss_from_json,
    gaussian_sqrt_exact,
)

N_TRIALS = 1000


def _rand_gauss(rng, imaginary=True):
    re = mpq(rng.randint(-40, 40), rng.randint(1, 40))
    im = mpq(rng.randint(-40, 40), rng.randint(1, 40)) if imaginary and rng.random() < 0.5 else 0
    return gauss(re, im)


def _rand_etale(rng, alg):
    coeffs = {}
    for mask in range(alg.dimension):
        if rng.random() < 0.6:
            q = _rand_gauss(rng)
            if q:
                coeffs[mask] = q
    from bakerkp.rings.etale import EtaleScalar

    return EtaleScalar(alg, coeffs)


def _rand_jet(rng, ring):
    coeffs = {}
    for a in range(ring.order + 1):
        for b in range(ring.order + 1 - a):
            for c in range(ring.order + 1 - a - b):
                if rng.random() < 0.4:
                    coeffs[(a, b, c)] = ring.base.from_gaussian(_rand_gauss(rng))
    return ring.from_coefficients({k: v for k, v in coeffs.items()})


def test_gaussian_unit_norm():
    # (1+i)(1-i) = 2
    assert gauss(1, 1) * gauss(1, -1) == gauss(2)


def test_gaussian_inverse_half():
    assert gauss(2).inverse() == gauss(mpq(1, 2))


def test_gaussian_ring_axioms_random():
    rng = random.Random(101)
    for _ in range(N_TRIALS):
        a, b, c = (_rand_gauss(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
    a = _rand_gauss(rng)
    while not a:
        a = _rand_gauss(rng)
    assert a * a.inverse() == gauss(1)


def test_gaussian_sqrt_exact():
    assert gaussian_sqrt_exact(gauss(9)) == gauss(3)
    assert gaussian_sqrt_exact(gauss(-9)) == gauss(0, 3)
    assert gaussian_sqrt_exact(gauss(mpq(4, 9))) == gauss(mpq(2, 3))
    assert gaussian_sqrt_exact(gauss(2)) is None
    # (2+3i)^2 = -5+12i
    r = gaussian_sqrt_exact(gauss(-5, 12))
    assert r is not None and r * r == gauss(-5, 12)
    assert gaussian_sqrt_exact(gauss(1, 1)) is None


def test_gaussian_json_roundtrip():
    vals = [gauss(mpq(3, 4)), gauss(mpq(-7, 2), mpq(1, 3)), gauss(0)]
    for v in vals:
        assert gauss_from_json(v.to_json()) == v
    assert gauss_from_json("5/3") == gauss(mpq(5, 3))
    assert gauss_from_json(7) == gauss(7)


def test_etale_defining_relation():
    # Y1 * Y1 with n1 = 5 is 5
    alg = EtaleAlgebra([gauss(5)])
    y = alg.gen(0)
    assert y * y == alg.from_gaussian(gauss(5))


def test_etale_generator_inverse():
    # invert(Y1) with n1 = 5 is Y1/5
    alg = EtaleAlgebra([gauss(5)])
    y = alg.gen(0)
    assert y.inverse() == y.scale(gauss(mpq(1, 5)))
    assert y * y.inverse() == alg.one


def test_etale_zero_relation_rejected():
    with pytest.raises(SingularityError):
        EtaleAlgebra([gauss(0)])


def test_etale_mismatched_relations():
    a = EtaleAlgebra([gauss(5)]).one
    b = EtaleAlgebra([gauss(7)]).one
    with pytest.raises(ParameterError):
        a + b


@pytest.mark.parametrize("g", [1, 2, 3, 4])
def test_etale_ring_axioms_random(g):
    rng = random.Random(200 + g)
    alg = EtaleAlgebra([_rand_nonzero(rng) for _ in range(g)])
    trials = max(20, N_TRIALS // (1 << (2 * g)))
    for _ in range(trials):
        a, b, c = (_rand_etale(rng, alg) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a


def _rand_nonzero(rng):
    q = _rand_gauss(rng, imaginary=False)
    while not q:
        q = _rand_gauss(rng, imaginary=False)
    return q


@pytest.mark.parametrize("g", [1, 2, 3])
def test_etale_involutions_are_homomorphisms(g):
    rng = random.Random(300 + g)
    alg = EtaleAlgebra([_rand_nonzero(rng) for _ in range(g)])
    for _ in range(50):
        a = _rand_etale(rng, alg)
        b = _rand_etale(rng, alg)
        for j in range(g):
            assert (a * b).flip(j) == a.flip(j) * b.flip(j)
            assert (a + b).flip(j) == a.flip(j) + b.flip(j)


@pytest.mark.parametrize("g", [1, 2, 3])
def test_etale_norm_in_base_field(g):
    rng = random.Random(400 + g)
    alg = EtaleAlgebra([_rand_nonzero(rng) for _ in range(g)])
    for _ in range(30):
        a = _rand_etale(rng, alg)
        a.norm()  # raises if the product over sign patterns leaves the base field


def test_etale_inverse_random():
    rng = random.Random(500)
    alg = EtaleAlgebra([gauss(5), gauss(-3), gauss(mpq(7, 2))])
    for _ in range(30):
        a = _rand_etale(rng, alg)
        try:
            inv = a.inverse()
        except SingularityError:
            assert not a.norm()
            continue
        assert a * inv == alg.one


def test_etale_json_roundtrip():
    alg = EtaleAlgebra([gauss(5), gauss(-3)])
    rng = random.Random(7)
    a = _rand_etale(rng, alg)
    assert etale_from_json(alg, a.to_json()) == a


def test_jet_truncation_drops_high_terms():
    # (1 + t1)(1 - t1) at order 1 is 1
    ring = JetRing(QQI, 1)
    one, t1 = ring.one, ring.var(0)
    assert (one + t1) * (one - t1) == ring.one


def test_jet_geometric_inverse():
    # invert(1 + t1) at order 2: geometric series oracle sum((-t1)^k)
    ring = JetRing(QQI, 2)
    a = ring.one + ring.var(0)
    expected = ring.zero
    sign_power = ring.one
    for _ in range(3):
        expected = expected + sign_power
        sign_power = sign_power * (-ring.var(0))
    inv = a.inverse()
    assert inv == expected
    assert inv.coefficients() == {(0, 0, 0): gauss(1), (1, 0, 0): gauss(-1), (2, 0, 0): gauss(1)}
    assert a * inv == ring.one


def test_jet_double_inverse_identity():
    rng = random.Random(600)
    ring = JetRing(QQI, 4)
    for _ in range(25):
        a = _rand_jet(rng, ring)
        a = a + ring.const(_rand_nonzero(rng))
        assert a.inverse().inverse() == a


@pytest.mark.parametrize("base_kind", ["gauss", "etale"])
def test_jet_ring_axioms_random(base_kind):
    rng = random.Random(700)
    if base_kind == "gauss":
        base = QQI
    else:
        base = EtaleAlgebra([gauss(5), gauss(-2)])
    ring = JetRing(base, 3)
    trials = 120 if base_kind == "gauss" else 25
    for _ in range(trials):
        if base_kind == "gauss":
            a, b, c = (_rand_jet(rng, ring) for _ in range(3))
        else:
            a, b, c = (
                ring.from_coefficients(
                    {
                        (1, 0, 0): _rand_etale(rng, base),
                        (0, 1, 0): _rand_etale(rng, base),
                        (0, 0, 0): _rand_etale(rng, base),
                    }
                )
                for _ in range(3)
            )
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a


def test_jet_order_mismatch():
    a = JetRing(QQI, 2).one
    b = JetRing(QQI, 3).one
    with pytest.raises(ParameterError):
        a + b


def test_jet_integrate_then_derive():
    rng = random.Random(800)
    ring = JetRing(QQI, 4)
    for v in range(3):
        a = _rand_jet(rng, ring)
        back = a.integrate(v).derivative(v)
        # integration truncates at top order, so compare below it
        assert back.truncate(3) == a.truncate(3)


def test_jet_zero_constant_term_not_invertible():
    ring = JetRing(QQI, 2)
    with pytest.raises(SingularityError):
        ring.var(0).inverse()


def test_numeric_field_basics():
    field = ComplexField(256)
    a = field.from_gaussian(gauss(mpq(3, 7), mpq(-1, 2)))
    assert field.max_abs(a * field.inv(a) - field.one) < 1e-70
    r = field.sqrt(field.from_int(-3))
    assert field.max_abs(r * r - field.from_int(-3)) < 1e-70
    with pytest.raises(ParameterError):
        ComplexField(64)
    with pytest.raises(ParameterError):
        field.one + ComplexField(192).one


def test_numeric_jets():
    field = ComplexField(192)
    ring = JetRing(field, 3)
    a = ring.one + ring.var(0).scale(field.from_int(3))
    prod = a * a.inverse()
    assert ring.max_abs(prod - ring.one) < 1e-50
