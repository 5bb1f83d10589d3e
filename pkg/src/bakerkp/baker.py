"""Baker's bivariate polynomials and the P-matrices they generate.

Given g points (x_j, y_j) on the even model with branch point a, set

    R(e)    = (e - a)(e - x_1)...(e - x_g)
    S(e1,e2)= sum_i (y_i / R'(x_i)) * (R(e1)/(e1 - x_i)) * (R(e2)/(e2 - x_i))
    F       = f(e1,e2) R(e1) R(e2) + (e1-e2)^2 S^2 - N(e1) R(e2)^2 - N(e2) R(e1)^2

where f is the curve's symmetric pair polynomial.  F is exactly divisible by
(e1-e2)^2 R(e1) R(e2) and the quotient G, symmetric of degree at most g-1 in
each variable, has the two-index functions P_{2g+2-2i,2g+2-2j} as its
coefficients.  The odd model admits the same construction with R built from
the divisor alone and the curve polynomial in place of N; there the
coefficients are the Kleinian functions wp_{2g+1-2i,2g+1-2j}.

The module also provides the explicit first-order derivations on the
symmetric product that realize the Jacobian coordinate derivatives, via the
polynomials chi_i(x) built from the elementary symmetric functions of the
divisor's x-coordinates.
"""

from __future__ import annotations

from bakerkp.curves import EvenCurve, OddCurve
from bakerkp.errors import InternalConsistencyError, ParameterError, SingularityError
from bakerkp.polys import (
    bivar_add,
    bivar_divide_e1_minus_e2,
    bivar_divide_monic_e1,
    bivar_eval,
    bivar_is_symmetric,
    bivar_mul,
    bivar_outer,
    bivar_scale,
    bivar_sub,
    bivar_transpose,
    bivar_zero,
    elementary_symmetric,
    poly_div_linear,
    poly_eval,
    poly_from_roots,
    poly_mul,
)
from bakerkp.rings import QQI


class BivarPoly:
    """Symmetric-aware wrapper around a dense coefficient grid c[i][j]."""

    def __init__(self, grid, ring):
        self.c = grid
        self.ring = ring

    @property
    def deg1(self) -> int:
        return len(self.c) - 1

    @property
    def deg2(self) -> int:
        return len(self.c[0]) - 1

    def coeff(self, i: int, j: int):
        if 0 <= i < len(self.c) and 0 <= j < len(self.c[0]):
            return self.c[i][j]
        return self.ring.zero

    def is_symmetric(self) -> bool:
        return bivar_is_symmetric(self.c)

    def eval(self, e1, e2):
        return bivar_eval(self.c, e1, e2, self.ring)

    def swap(self) -> "BivarPoly":
        return BivarPoly(bivar_transpose(self.c, self.ring), self.ring)

    def __sub__(self, other: "BivarPoly") -> "BivarPoly":
        return BivarPoly(bivar_sub(self.c, other.c, self.ring), self.ring)

    def __add__(self, other: "BivarPoly") -> "BivarPoly":
        return BivarPoly(bivar_add(self.c, other.c, self.ring), self.ring)


def pair_poly_f(curve: EvenCurve, ring=QQI) -> BivarPoly:
    """The even-model pair polynomial f(e1, e2).

    f matches 2N on the diagonal and N' through its first transverse
    derivative there, which pins it down up to (e1-e2)^2 times a symmetric
    correction.
    """
    g = curve.genus
    grid = bivar_zero(g + 1, g + 1, ring)
    for i in range(g + 2):
        grid[i][i] = grid[i][i] + ring.from_gaussian(curve.nu(4 * g + 4 - 4 * i) * 2)
        side = curve.nu(4 * g + 2 - 4 * i)
        if side:
            s = ring.from_gaussian(side)
            grid[i + 1][i] = grid[i + 1][i] + s
            grid[i][i + 1] = grid[i][i + 1] + s
    return BivarPoly(grid, ring)


def pair_poly_f_tilde(curve: OddCurve, ring=QQI, lead=None) -> BivarPoly:
    """The odd-model pair polynomial; lead overrides the leading coefficient."""
    g = curve.genus
    grid = bivar_zero(g + 1, g + 1, ring)
    for i in range(g + 1):
        grid[i][i] = grid[i][i] + ring.from_gaussian(curve.lam(4 * g + 2 - 4 * i) * 2)
        sub = 4 * g - 4 * i
        side = curve.lam(sub) if (sub or lead is None) else lead
        if side:
            s = ring.from_gaussian(side)
            grid[i + 1][i] = grid[i + 1][i] + s
            grid[i][i + 1] = grid[i][i + 1] + s
    return BivarPoly(grid, ring)


def _interp_kernel(roots, xs, ys, ring):
    """R from the given roots, plus the numerator S of the cleared nabla term."""
    R = poly_from_roots(roots, ring)
    g = len(xs)
    S = bivar_zero(len(R) - 2, len(R) - 2, ring)
    for x, y in zip(xs, ys):
        A, rem = poly_div_linear(R, x, ring)
        if rem:
            raise InternalConsistencyError("divisor x-coordinate is not a root of R")
        rprime = poly_eval(A, x, ring)  # R'(x_i) = A_i(x_i)
        try:
            w = y * ring.inv(rprime)
        except SingularityError as exc:
            raise SingularityError(f"divisor is degenerate: {exc}") from exc
        for i, ai in enumerate(A):
            if not ai:
                continue
            wai = w * ai
            row = S[i]
            for j, aj in enumerate(A):
                if aj:
                    row[j] = row[j] + wai * aj
    return R, S


_SQ_DIFF = None


def _sq_diff_grid(ring):
    # (e1 - e2)^2 as a grid over the given ring
    one = ring.one
    two = ring.from_int(2)
    z = ring.zero
    return [[z, z, one], [z, -two, z], [one, z, z]]


def build_F(curve: EvenCurve, xs, ys, ring=QQI) -> BivarPoly:
    """Assemble F for a divisor on the even model; needs the branch point."""
    a = ring.from_gaussian(curve.require_branch_point())
    npoly = curve.poly_in(ring)
    R, S = _interp_kernel([a] + list(xs), xs, ys, ring)
    fRR = bivar_mul(pair_poly_f(curve, ring).c, bivar_outer(R, R, ring), ring)
    S2 = bivar_mul(bivar_mul(S, S, ring), _sq_diff_grid(ring), ring)
    R2 = poly_mul(R, R, ring)
    NR = bivar_outer(npoly, R2, ring)
    RN = bivar_outer(R2, npoly, ring)
    F = bivar_sub(bivar_sub(bivar_add(fRR, S2, ring), NR, ring), RN, ring)
    return BivarPoly(F, ring)


def divide_to_G(F: BivarPoly, curve, xs, ring=QQI) -> BivarPoly:
    """Exact division of F by (e1-e2)^2 R(e1) R(e2), asserting each remainder.

    The zero-remainder assertions double as built-in self-tests of build_F;
    a failure signals an arithmetic bug, never expected input.
    """
    g = curve.genus
    if curve.model == "even":
        roots = [ring.from_gaussian(curve.require_branch_point())] + list(xs)
    else:
        roots = list(xs)
    R = poly_from_roots(roots, ring)
    work = bivar_divide_e1_minus_e2(F.c, ring, "F")
    work = bivar_divide_e1_minus_e2(work, ring, "F / (e1 - e2)")
    work = bivar_divide_monic_e1(work, R, ring, "F / (e1 - e2)^2")
    work = bivar_transpose(work, ring)
    work = bivar_divide_monic_e1(work, R, ring, "F / ((e1 - e2)^2 R(e1))")
    work = bivar_transpose(work, ring)
    # normalize the grid to exactly g x g
    grid = bivar_zero(g - 1, g - 1, ring)
    for i, row in enumerate(work):
        for j, v in enumerate(row):
            if v:
                if i >= g or j >= g:
                    raise InternalConsistencyError("G has degree above g - 1")
                grid[i][j] = v
    G = BivarPoly(grid, ring)
    if not G.is_symmetric():
        raise InternalConsistencyError("G is not symmetric")
    return G


class PMatrix:
    """Symmetric matrix of two-index function values at one divisor.

    Entries are addressed by paper suffixes: p(s, t) with s, t in
    {2, 4, ..., 2g} on the even model (value P_{s,t}) and in
    {1, 3, ..., 2g-1} on the odd model (value wp_{s,t}).
    """

    def __init__(self, model: str, genus: int, grid, ring):
        self.model = model
        self.genus = genus
        self.grid = grid
        self.ring = ring

    def _index(self, s: int) -> int:
        g = self.genus
        if self.model == "even":
            if s % 2 or not 2 <= s <= 2 * g:
                raise ParameterError(f"even-model suffix {s} invalid for genus {g}")
            return (2 * g + 2 - s) // 2 - 1
        if s % 2 == 0 or not 1 <= s <= 2 * g - 1:
            raise ParameterError(f"odd-model suffix {s} invalid for genus {g}")
        return (2 * g + 1 - s) // 2 - 1

    def p(self, s: int, t: int):
        return self.grid[self._index(s)][self._index(t)]

    def suffixes(self):
        g = self.genus
        return range(2, 2 * g + 1, 2) if self.model == "even" else range(1, 2 * g, 2)

    def entry_items(self):
        for s in self.suffixes():
            for t in self.suffixes():
                if t >= s:
                    yield (s, t), self.p(s, t)

    def to_json(self):
        tag = "P" if self.model == "even" else "wp"

        def scalar_json(v):
            return v.to_json() if hasattr(v, "to_json") else str(v)

        return {f"{tag}_{s}_{t}": scalar_json(v) for (s, t), v in self.entry_items()}


def evaluate_p_matrix(curve, xs, ys, ring=QQI) -> PMatrix:
    """P-matrix (even) or wp-matrix (odd) from concrete divisor coordinates."""
    g = curve.genus
    if curve.model == "even":
        F = build_F(curve, xs, ys, ring)
        G = divide_to_G(F, curve, xs, ring)
        return PMatrix("even", g, G.c, ring)
    mpoly = curve.poly_in(ring)
    R, S = _interp_kernel(list(xs), xs, ys, ring)
    fRR = bivar_mul(pair_poly_f_tilde(curve, ring).c, bivar_outer(R, R, ring), ring)
    S2 = bivar_mul(bivar_mul(S, S, ring), _sq_diff_grid(ring), ring)
    R2 = poly_mul(R, R, ring)
    F = BivarPoly(
        bivar_sub(
            bivar_sub(bivar_add(fRR, S2, ring), bivar_outer(mpoly, R2, ring), ring),
            bivar_outer(R2, mpoly, ring),
            ring,
        ),
        ring,
    )
    G = divide_to_G(F, curve, xs, ring)
    return PMatrix("odd", g, G.c, ring)


def p_matrix_even(divisor, mode: str = "exact", precision: int = 256) -> PMatrix:
    if divisor.curve.model != "even":
        raise ParameterError("p_matrix_even needs a divisor on the even model")
    ring, xs, ys = divisor.realize(mode, precision)
    return evaluate_p_matrix(divisor.curve, xs, ys, ring)


def p_matrix_odd(divisor, mode: str = "exact", precision: int = 256) -> PMatrix:
    if divisor.curve.model != "odd":
        raise ParameterError("p_matrix_odd needs a divisor on the odd model")
    ring, xs, ys = divisor.realize(mode, precision)
    return evaluate_p_matrix(divisor.curve, xs, ys, ring)


# -- chi polynomials and derivation fields -----------------------------------


def chi_polys(xs, ring=QQI):
    """Coefficient vectors (ascending) of chi_0, ..., chi_g for the given x's.

    chi_i(x) = x^i - h_1 x^(i-1) + ... + (-1)^i h_i, so chi_g is the monic
    polynomial with the x_j as roots and chi_g(x)/(x - x_j) expands with
    coefficients chi_r(x_j).
    """
    h = elementary_symmetric(xs, ring)
    out = []
    for i in range(len(xs) + 1):
        coeffs = []
        for k in range(i + 1):  # coefficient of x^k in chi_i
            v = h[i - k]
            coeffs.append(-v if (i - k) % 2 else v)
        out.append(coeffs)
    return out


def _chi_point_data(xs, ring):
    """chi_r(x_j) for r = 0..g-1 and chi_g'(x_j), shared by all derivations."""
    g = len(xs)
    h = elementary_symmetric(xs, ring)
    chi_at = []
    for x in xs:
        vals = [ring.one]
        for r in range(1, g):
            v = x * vals[r - 1]
            vals.append(v - h[r] if r % 2 else v + h[r])
        chi_at.append(vals)
    chi_prime = []
    for j, x in enumerate(xs):
        acc = ring.one
        for m, xm in enumerate(xs):
            if m != j:
                acc = acc * (x - xm)
        chi_prime.append(acc)
    return chi_at, chi_prime


def _suffix_to_chi_index(model: str, genus: int, k: int) -> int:
    if model == "even":
        if k % 2 or not 2 <= k <= 2 * genus:
            raise ParameterError(f"flow suffix v_{k} invalid for even model, genus {genus}")
        return genus - (2 * genus + 2 - k) // 2  # chi_{g - i}
    if k % 2 == 0 or not 1 <= k <= 2 * genus - 1:
        raise ParameterError(f"flow suffix u_{k} invalid for odd model, genus {genus}")
    return (k + 1) // 2 - 1  # chi_{i - 1}


def derivation_coefficients(model: str, suffixes, xs, ys, ring=QQI):
    """Coefficients c_j with d/dv_k = sum_j c_j d/dx_j, for several suffixes k.

    Even model: c_j = 2 y_j chi_{g-i}(x_j) / chi_g'(x_j) with k = 2g+2-2i.
    Odd model:  c_j = -2 y_j chi_{i-1}(x_j) / chi_g'(x_j) with k = 2i-1,
    the unique coefficients dual to the holomorphic integrand basis.
    """
    g = len(xs)
    chi_at, chi_prime = _chi_point_data(xs, ring)
    inv_prime = [ring.inv(cp) for cp in chi_prime]
    sign = 2 if model == "even" else -2
    out = {}
    for k in suffixes:
        r = _suffix_to_chi_index(model, g, k)
        out[k] = [(y * chi_at[j][r]) * inv_prime[j] * sign for j, y in enumerate(ys)]
    return out


class DerivationField:
    """The derivation on Sym^g matching one Jacobian coordinate derivative."""

    def __init__(self, model: str, genus: int, k: int):
        _suffix_to_chi_index(model, genus, k)  # validates
        self.model = model
        self.genus = genus
        self.k = k

    def coefficients(self, xs, ys, ring=QQI):
        return derivation_coefficients(self.model, [self.k], xs, ys, ring)[self.k]

    def __repr__(self):
        var = "v" if self.model == "even" else "u"
        return f"DerivationField(d/d{var}_{self.k}, genus={self.genus})"


def integrand_row(model: str, genus: int, m: int, xs, ys, ring=QQI):
    """Values of the m-th holomorphic integrand at the divisor points.

    Even model: x^(m-1) / (2y); odd model: -X^(g-m) / (2Y).  Pairing these
    rows against derivation coefficient columns must give the identity.
    """
    two = ring.from_int(2)
    if model == "even":
        return [x ** (m - 1) * ring.inv(two * y) for x, y in zip(xs, ys)]
    g = genus
    return [-(x ** (g - m)) * ring.inv(two * y) for x, y in zip(xs, ys)]


def duality_matrix(model: str, xs, ys, ring=QQI):
    """Pairing of integrand rows with derivation columns; identity iff dual."""
    g = len(xs)
    if model == "even":
        suffixes = [2 * g + 2 - 2 * i for i in range(1, g + 1)]
    else:
        suffixes = [2 * i - 1 for i in range(1, g + 1)]
    cols = derivation_coefficients(model, suffixes, xs, ys, ring)
    matrix = []
    for m in range(1, g + 1):
        row_vals = integrand_row(model, g, m, xs, ys, ring)
        matrix.append(
            [sum_ring(ring, (row_vals[j] * cols[k][j] for j in range(g))) for k in suffixes]
        )
    return matrix


def sum_ring(ring, items):
    acc = ring.zero
    for v in items:
        acc = acc + v
    return acc


def power_sum_delta(xs, ring=QQI):
    """The Lagrange duality data sum_j x_j^(m-1) chi_{g-i}(x_j)/chi_g'(x_j)."""
    g = len(xs)
    chi_at, chi_prime = _chi_point_data(xs, ring)
    inv_prime = [ring.inv(cp) for cp in chi_prime]
    out = []
    for m in range(1, g + 1):
        row = []
        for i in range(1, g + 1):
            row.append(
                sum_ring(
                    ring,
                    (xs[j] ** (m - 1) * chi_at[j][g - i] * inv_prime[j] for j in range(g)),
                )
            )
        out.append(row)
    return out


def recover_decomposition(fhat: BivarPoly, f: BivarPoly, genus: int, ring=QQI):
    """Matrix m with fhat - f = (e1-e2)^2 sum m_ij e1^(i-1) e2^(j-1); symmetric."""
    diff = bivar_sub(fhat.c, f.c, ring)
    q = bivar_divide_e1_minus_e2(diff, ring, "fhat - f")
    q = bivar_divide_e1_minus_e2(q, ring, "(fhat - f)/(e1 - e2)")
    m = bivar_zero(genus - 1, genus - 1, ring)
    for i, row in enumerate(q):
        for j, v in enumerate(row):
            if v:
                if i >= genus or j >= genus:
                    raise InternalConsistencyError("decomposition exceeds degree g - 1")
                m[i][j] = v
    if not bivar_is_symmetric(m):
        raise InternalConsistencyError("decomposition matrix is not symmetric")
    return m
