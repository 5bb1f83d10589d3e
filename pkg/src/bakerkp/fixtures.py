"""Deterministic generation of exact test curves and divisors.

Verification fixtures need curves whose special constants stay rational
(nu_0 = -3 w^2 so that sqrt(-3 nu_0) = 3w, a rational branch point, rational
root lists for the model bridge) and, for the heavy jet runs, divisors whose
y-coordinates are themselves rational.  Both come from the same trick: pick
the points first, then solve the linear interpolation system for the curve
coefficients.  All randomness flows through one seeded Random instance, so
equal seeds give byte-identical fixtures.
"""

from __future__ import annotations

import random

from gmpy2 import mpq

from bakerkp.curves import DivisorPoint, EvenCurve, OddCurve, SymDivisor
from bakerkp.errors import GenerationError, PreconditionError
from bakerkp.polys import poly_eval, solve_linear
from bakerkp.rings import QQI, gauss

KNOWN_CONSTRAINTS = {
    "rational-roots",
    "nu0-neg3-square",
    "lambda-top-neg3-square",
    "lambda2-square",
    "a-zero",
}

MAX_TRIES = 60


def _rand_q(rng: random.Random, bound: int = 12, den: int = 6):
    return gauss(mpq(rng.randint(-bound, bound), rng.randint(1, den)))


def _rand_nonzero_q(rng: random.Random, bound: int = 12, den: int = 6):
    q = _rand_q(rng, bound, den)
    while not q:
        q = _rand_q(rng, bound, den)
    return q


def _distinct_values(rng: random.Random, count: int, bound: int = 12, den: int = 4):
    seen = set()
    out = []
    while len(out) < count:
        q = _rand_q(rng, bound, den)
        key = (q.re, q.im)
        if key not in seen:
            seen.add(key)
            out.append(q)
    return out


def even_curve_with_points(genus: int, seed: int, nu0=None, a=None, pool_size=None):
    """Even curve through a rational point pool, with branch point a.

    Returns (curve, pool) where pool is a list of (x, y) rational points in
    generic position (x distinct, different from a, y nonzero).
    """
    rng = random.Random(("even", genus, seed))
    npts = pool_size if pool_size is not None else 2 * genus + 1
    if npts < genus:
        raise GenerationError("point pool smaller than the genus")
    for _ in range(MAX_TRIES):
        lead = nu0 if nu0 is not None else _rand_nonzero_q(rng)
        branch = a if a is not None else _rand_q(rng, bound=8, den=3)
        xs = _distinct_values(rng, npts + 1)
        xs = [x for x in xs if x != branch][:npts]
        if len(xs) < npts:
            continue
        ys = [_rand_nonzero_q(rng, bound=9, den=3) for _ in xs]
        deg = 2 * genus + 2
        rows, rhs = [], []
        for x, y in zip(xs + [branch], ys + [QQI.zero]):
            rows.append([x ** (deg - 1 - k) for k in range(deg)])
            rhs.append(y * y - lead * x ** deg)
        try:
            sol = solve_linear(rows, rhs, QQI)
            curve = EvenCurve(genus, [lead] + sol, branch_point=branch)
        except PreconditionError:
            continue
        return curve, list(zip(xs, ys))
    raise GenerationError(f"no valid even curve for genus {genus}, seed {seed}")


def odd_curve_with_points(genus: int, seed: int, fixed=None, pool_size=None):
    """Monic odd curve through a rational point pool.

    fixed maps coefficient subscripts (2, 4, ..., 4g+2) to prescribed values;
    the remaining coefficients are solved from the interpolation conditions.
    """
    rng = random.Random(("odd", genus, seed))
    fixed = {k: gauss(v) if not hasattr(v, "re") else v for k, v in (fixed or {}).items()}
    nfree = 2 * genus + 1 - len(fixed)
    npts = pool_size if pool_size is not None else nfree
    if npts != nfree:
        raise GenerationError("odd pool size must match the number of free coefficients")
    deg = 2 * genus + 1
    free_subs = [2 * k for k in range(1, 2 * genus + 2) if 2 * k not in fixed]
    for _ in range(MAX_TRIES):
        xs = _distinct_values(rng, npts)
        ys = [_rand_nonzero_q(rng, bound=9, den=3) for _ in xs]
        rows, rhs = [], []
        for x, y in zip(xs, ys):
            rows.append([x ** (deg - sub // 2) for sub in free_subs])
            acc = y * y - x ** deg
            for sub, val in fixed.items():
                acc = acc - val * x ** (deg - sub // 2)
            rhs.append(acc)
        try:
            sol = solve_linear(rows, rhs, QQI)
            coeffs = []
            it = iter(sol)
            for k in range(1, 2 * genus + 2):
                coeffs.append(fixed.get(2 * k) if 2 * k in fixed else next(it))
            curve = OddCurve(genus, coeffs)
        except PreconditionError:
            continue
        return curve, list(zip(xs, ys))
    raise GenerationError(f"no valid odd curve for genus {genus}, seed {seed}")


def even_curve_with_roots(genus: int, seed: int, nu0=None, a=None):
    """Even curve in factored form nu_0 (x - a) prod (x - a_i), roots rational."""
    rng = random.Random(("roots", genus, seed))
    for _ in range(MAX_TRIES):
        lead = nu0 if nu0 is not None else _rand_nonzero_q(rng, bound=6, den=3)
        roots = _distinct_values(rng, 2 * genus + 2, bound=9, den=3)
        branch = a if a is not None else roots[rng.randrange(len(roots))]
        if branch not in roots:
            roots[0] = branch
        coeffs = [QQI.one]
        for r in roots:
            coeffs = [QQI.zero] + coeffs
            for k in range(len(coeffs) - 1):
                coeffs[k] = coeffs[k] - r * coeffs[k + 1]
        desc = [lead * c for c in reversed(coeffs)]
        try:
            curve = EvenCurve(genus, desc, branch_point=branch, roots=roots)
        except PreconditionError:
            continue
        return curve
    raise GenerationError(f"no valid factored even curve for genus {genus}, seed {seed}")


def divisor_from_pool(curve, pool, rng: random.Random, flip=True) -> SymDivisor:
    """A divisor supported on g distinct pool points, with random branch signs."""
    pts = rng.sample(pool, curve.genus)
    chosen = []
    for x, y in pts:
        sign = -1 if (flip and rng.random() < 0.5) else 1
        chosen.append(DivisorPoint(x, y=y if sign == 1 else -y))
    return SymDivisor(curve, chosen)


def etale_divisor(curve, rng: random.Random, n_etale=None) -> SymDivisor:
    """A divisor with random x-coordinates and sign-tagged y-coordinates."""
    g = curve.genus
    n_etale = g if n_etale is None else n_etale
    points = []
    seen = set()
    while len(points) < g:
        x = _rand_q(rng, bound=10, den=4)
        key = (x.re, x.im)
        if key in seen:
            continue
        if curve.model == "even" and curve.branch_point is not None and x == curve.branch_point:
            continue
        if not poly_eval(curve.poly, x, QQI):
            continue
        seen.add(key)
        points.append(DivisorPoint(x, sign=-1 if rng.random() < 0.5 else 1))
    return SymDivisor(curve, points)


def mixed_divisor(curve, pool, rng: random.Random, n_etale: int = 1) -> SymDivisor:
    """g - n_etale rational pool points plus n_etale sign-tagged random points."""
    g = curve.genus
    pts = rng.sample(pool, g - n_etale)
    chosen = []
    used = set()
    for x, y in pts:
        sign = -1 if rng.random() < 0.5 else 1
        chosen.append(DivisorPoint(x, y=y if sign == 1 else -y))
        used.add((x.re, x.im))
    while len(chosen) < g:
        x = _rand_q(rng, bound=10, den=4)
        key = (x.re, x.im)
        if key in used:
            continue
        if curve.model == "even" and curve.branch_point is not None and x == curve.branch_point:
            continue
        if not poly_eval(curve.poly, x, QQI):
            continue
        used.add(key)
        chosen.append(DivisorPoint(x, sign=-1 if rng.random() < 0.5 else 1))
    return SymDivisor(curve, chosen)


def neg3_square(rng: random.Random):
    """-3 w^2 for a random nonzero rational w."""
    w = _rand_nonzero_q(rng, bound=4, den=3)
    return gauss(-3) * w * w


def gen_fixture(genus: int, constraints, seed: int):
    """Deterministic (curve, divisor) pair satisfying the named constraints."""
    constraints = set(constraints or [])
    unknown = constraints - KNOWN_CONSTRAINTS
    if unknown:
        raise GenerationError(f"unknown constraints: {sorted(unknown)}")
    rng = random.Random(("fixture", genus, seed, tuple(sorted(constraints))))
    odd_model = bool(constraints & {"lambda-top-neg3-square", "lambda2-square"})
    if odd_model:
        fixed = {}
        if "lambda-top-neg3-square" in constraints:
            fixed[4 * genus + 2] = neg3_square(rng)
        if "lambda2-square" in constraints:
            w = _rand_nonzero_q(rng, bound=4, den=2)
            fixed[2] = w * w
        curve, pool = odd_curve_with_points(genus, seed, fixed=fixed)
        divisor = divisor_from_pool(curve, pool, rng)
        return curve, divisor
    a = gauss(0) if "a-zero" in constraints else None
    nu0 = neg3_square(rng) if "nu0-neg3-square" in constraints else None
    if "rational-roots" in constraints:
        curve = even_curve_with_roots(genus, seed, nu0=nu0, a=a)
        divisor = etale_divisor(curve, rng)
        return curve, divisor
    curve, pool = even_curve_with_points(genus, seed, nu0=nu0, a=a)
    divisor = divisor_from_pool(curve, pool, rng)
    return curve, divisor
