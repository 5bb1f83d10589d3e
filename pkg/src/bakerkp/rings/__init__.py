"""Scalar rings: Gaussian rationals, etale extensions, big complex floats, jets.

Every ring object in this package exposes the same small surface so that the
polynomial and flow machinery can be written once:

    ring.zero, ring.one        additive and multiplicative identities
    ring.from_gaussian(q)      embed an exact Gaussian rational
    ring.from_int(n)           embed a small integer
    ring.inv(x)                multiplicative inverse (SingularityError if none)
    ring.is_zero(x)            exact or numeric zero test
    ring.max_abs(x)            float magnitude estimate, for reports

Elements overload +, -, * and unary - among themselves; mixing elements of
rings with different parameters raises ParameterError.
"""

from bakerkp.rings.gaussian import (
    GaussianField,
    GaussianRational,
    QQI,
    gauss,
    gauss_from_json,
    gaussian_sqrt_exact,
)
from bakerkp.rings.etale import EtaleAlgebra, EtaleScalar, etale_from_json
from bakerkp.rings.bigcomplex import BigFloatComplex, ComplexField, DEFAULT_PRECISION
from bakerkp.rings.jets import Jet3, JetRing

__all__ = [
    "GaussianField",
    "GaussianRational",
    "QQI",
    "gauss",
    "gauss_from_json",
    "gaussian_sqrt_exact",
    "EtaleAlgebra",
    "EtaleScalar",
    "etale_from_json",
    "BigFloatComplex",
    "ComplexField",
    "DEFAULT_PRECISION",
    "Jet3",
    "JetRing",
]
