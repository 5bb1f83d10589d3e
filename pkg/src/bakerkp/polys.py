"""Ring-generic dense polynomial helpers.

Univariate polynomials are coefficient lists in ascending order; bivariate
ones are rectangular grids B[i][j] holding the coefficient of e1^i e2^j.
Scalars come from any of the bakerkp rings and are only assumed to support
+, -, * and truthiness for an exact zero test.
"""

from __future__ import annotations

from math import comb

from bakerkp.errors import InternalConsistencyError, SingularityError


def poly_trim(p, ring):
    d = len(p) - 1
    while d > 0 and not p[d]:
        d -= 1
    return p[: d + 1]


def poly_add(p, q, ring):
    n = max(len(p), len(q))
    out = []
    for k in range(n):
        a = p[k] if k < len(p) else ring.zero
        b = q[k] if k < len(q) else ring.zero
        out.append(a + b)
    return out


def poly_sub(p, q, ring):
    n = max(len(p), len(q))
    out = []
    for k in range(n):
        a = p[k] if k < len(p) else ring.zero
        b = q[k] if k < len(q) else ring.zero
        out.append(a - b)
    return out


def poly_scale(p, s, ring):
    return [c * s for c in p]


def poly_mul(p, q, ring):
    out = [ring.zero] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if not a:
            continue
        for j, b in enumerate(q):
            if b:
                out[i + j] = out[i + j] + a * b
    return out


def poly_eval(p, x, ring):
    acc = ring.zero
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_eval_with_derivative(p, x, ring):
    val = ring.zero
    der = ring.zero
    for c in reversed(p):
        der = der * x + val
        val = val * x + c
    return val, der


def poly_derivative(p, ring):
    if len(p) <= 1:
        return [ring.zero]
    return [p[k] * k for k in range(1, len(p))]


def poly_from_roots(roots, ring):
    """Monic polynomial with the given roots."""
    out = [ring.one]
    for r in roots:
        out = [ring.zero] + out
        for k in range(len(out) - 1):
            out[k] = out[k] - r * out[k + 1]
    return out


def poly_compose_shift(p, c, ring):
    """Coefficients of p(x + c), by Horner on the shifted variable."""
    out = [ring.zero]
    for coeff in reversed(p):
        # out = out * (x + c) + coeff
        shifted = [ring.zero] + out
        for k in range(len(out)):
            shifted[k] = shifted[k] + out[k] * c
        shifted[0] = shifted[0] + coeff
        out = shifted
    return poly_trim(out, ring)


def poly_div_linear(p, root, ring):
    """Divide by the monic linear (x - root); returns (quotient, remainder)."""
    d = len(p) - 1
    q = [ring.zero] * d
    acc = p[d]
    for k in range(d - 1, -1, -1):
        q[k] = acc
        acc = p[k] + acc * root
    return q, acc


def elementary_symmetric(values, ring):
    """[h_0, h_1, ..., h_n] for the given values."""
    h = [ring.one]
    for v in values:
        h.append(ring.zero)
        for k in range(len(h) - 1, 0, -1):
            h[k] = h[k] + h[k - 1] * v
    return h


# -- bivariate grids ---------------------------------------------------------


def bivar_zero(d1, d2, ring):
    return [[ring.zero] * (d2 + 1) for _ in range(d1 + 1)]


def bivar_add(a, b, ring):
    d1 = max(len(a), len(b)) - 1
    d2 = max(len(a[0]), len(b[0])) - 1
    out = bivar_zero(d1, d2, ring)
    for src in (a, b):
        for i, row in enumerate(src):
            orow = out[i]
            for j, v in enumerate(row):
                if v:
                    orow[j] = orow[j] + v
    return out


def bivar_sub(a, b, ring):
    d1 = max(len(a), len(b)) - 1
    d2 = max(len(a[0]), len(b[0])) - 1
    out = bivar_zero(d1, d2, ring)
    for i, row in enumerate(a):
        orow = out[i]
        for j, v in enumerate(row):
            if v:
                orow[j] = orow[j] + v
    for i, row in enumerate(b):
        orow = out[i]
        for j, v in enumerate(row):
            if v:
                orow[j] = orow[j] - v
    return out


def bivar_outer(p, q, ring):
    """p(e1) * q(e2)."""
    return [[(a * b if (a and b) else ring.zero) for b in q] for a in p]


def bivar_mul(a, b, ring):
    out = bivar_zero(len(a) + len(b) - 2, len(a[0]) + len(b[0]) - 2, ring)
    for i1, row1 in enumerate(a):
        for j1, v1 in enumerate(row1):
            if not v1:
                continue
            for i2, row2 in enumerate(b):
                orow = out[i1 + i2]
                for j2, v2 in enumerate(row2):
                    if v2:
                        orow[j1 + j2] = orow[j1 + j2] + v1 * v2
    return out


def bivar_scale(a, s, ring):
    return [[(v * s if v else ring.zero) for v in row] for row in a]


def bivar_eval(a, x1, x2, ring):
    acc = ring.zero
    for row in reversed(a):
        acc = acc * x1 + poly_eval(row, x2, ring)
    return acc


def bivar_transpose(a, ring):
    return [[a[i][j] for i in range(len(a))] for j in range(len(a[0]))]


def bivar_is_symmetric(a) -> bool:
    if len(a) != len(a[0]):
        return False
    n = len(a)
    return all(a[i][j] == a[j][i] for i in range(n) for j in range(i + 1, n))


def bivar_divide_e1_minus_e2(a, ring, what="polynomial"):
    """Exact division by (e1 - e2); nonzero remainder is an arithmetic bug."""
    d1 = len(a) - 1
    # Horner in e1 with "root" e2: quotient coefficients are polynomials in e2.
    acc = list(a[d1])
    rows = []
    for k in range(d1 - 1, -1, -1):
        rows.append(acc)
        acc = poly_add(list(a[k]), [ring.zero] + acc, ring)  # a_k + e2 * acc
    for v in acc:
        if v:
            raise InternalConsistencyError(f"{what} is not divisible by (e1 - e2)")
    rows.reverse()
    d2 = max(len(r) for r in rows)
    return [r + [ring.zero] * (d2 - len(r)) for r in rows]


def bivar_divide_monic_e1(a, r, ring, what="polynomial"):
    """Exact division by a monic polynomial r(e1); remainder must vanish."""
    work = [list(row) for row in a]
    dr = len(r) - 1
    dq = len(work) - 1 - dr
    if dq < 0:
        raise InternalConsistencyError(f"{what} has degree below the divisor")
    quot = []
    for k in range(dq, -1, -1):
        c = work[k + dr]
        quot.append(c)
        for m in range(dr):
            if r[m]:
                row = work[k + m]
                for j, v in enumerate(c):
                    if v:
                        row[j] = row[j] - r[m] * v
    for k in range(dr):
        for v in work[k]:
            if v:
                raise InternalConsistencyError(f"{what} is not divisible by the divisor")
    quot.reverse()
    d2 = max(len(r_) for r_ in quot)
    return [row + [ring.zero] * (d2 - len(row)) for row in quot]


# -- linear algebra ----------------------------------------------------------


def solve_linear(matrix, rhs, ring):
    """Solve A x = b over a ring with exact inverses (Gaussian elimination)."""
    n = len(matrix)
    a = [list(row) + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col]), None)
        if pivot is None:
            raise SingularityError("singular linear system")
        a[col], a[pivot] = a[pivot], a[col]
        inv = ring.inv(a[col][col])
        a[col] = [v * inv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                factor = a[r][col]
                a[r] = [a[r][k] - factor * a[col][k] for k in range(n + 1)]
    return [a[r][n] for r in range(n)]


def determinant(matrix, ring):
    n = len(matrix)
    a = [list(row) for row in matrix]
    det = ring.one
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col]), None)
        if pivot is None:
            return ring.zero
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det = det * a[col][col]
        inv = ring.inv(a[col][col])
        for r in range(col + 1, n):
            if a[r][col]:
                factor = a[r][col] * inv
                a[r] = [a[r][k] - factor * a[col][k] for k in range(n)]
    return det


def resultant(p, q, ring):
    """Resultant via the Sylvester matrix; zero exactly when p, q share a root."""
    p = poly_trim(p, ring)
    q = poly_trim(q, ring)
    m, n = len(p) - 1, len(q) - 1
    if m == 0:
        return p[0] ** n if hasattr(p[0], "__pow__") else p[0]
    if n == 0:
        return q[0] ** m
    size = m + n
    rows = []
    for k in range(n):
        row = [ring.zero] * size
        for t, c in enumerate(reversed(p)):
            row[k + t] = c
        rows.append(row)
    for k in range(m):
        row = [ring.zero] * size
        for t, c in enumerate(reversed(q)):
            row[k + t] = c
        rows.append(row)
    return determinant(rows, ring)


def binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return comb(n, k)
