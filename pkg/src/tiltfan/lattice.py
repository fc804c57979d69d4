"""Exact integer and rational linear algebra on plain tuples.

Vectors are tuples of ints (or Fractions), matrices are tuples of row
tuples.  Everything is arbitrary precision; no floats anywhere.
"""

from fractions import Fraction
from math import gcd

from .errors import DependentGenerators, DetNotUnit, NonSaturated, ZeroVector


def vec(entries):
    return tuple(int(x) for x in entries)


def mat(rows):
    return tuple(tuple(int(x) for x in row) for row in rows)


def identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(m):
    return tuple(zip(*m)) if m else ()


def columns(m):
    """Columns of a row-major matrix, as vectors."""
    return [tuple(row[j] for row in m) for j in range(len(m[0]))] if m else []


def from_columns(cols, rank=None):
    """Matrix whose j-th column is cols[j]; rank fixes the row count when cols is empty."""
    if not cols:
        return tuple(() for _ in range(rank or 0))
    return tuple(tuple(c[i] for c in cols) for i in range(len(cols[0])))


def matvec(m, v):
    return tuple(sum(r[j] * v[j] for j in range(len(v))) for r in m)


def matmul(a, b):
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def vadd(u, v):
    return tuple(x + y for x, y in zip(u, v))


def vsub(u, v):
    return tuple(x - y for x, y in zip(u, v))


def vneg(v):
    return tuple(-x for x in v)


def vscale(c, v):
    return tuple(c * x for x in v)


def dot(u, v):
    return sum(x * y for x, y in zip(u, v))


def is_zero(v):
    return all(x == 0 for x in v)


def primitive(v):
    """Divide an integer vector by the gcd of its entries, keeping signs."""
    if is_zero(v):
        raise ZeroVector("cannot normalize the zero vector")
    g = 0
    for x in v:
        g = gcd(g, x)
    return tuple(x // g for x in v)


def determinant(m):
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(m)
    if n == 0:
        return 1
    if any(len(row) != n for row in m):
        raise ValueError("determinant of a non-square matrix")
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def solve_exact(m, rhs):
    """Solve m x = rhs over the rationals; None if singular or inconsistent."""
    n = len(m)
    cols_n = len(m[0]) if n else 0
    a = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(m)]
    piv_cols = []
    r = 0
    for c in range(cols_n):
        piv = next((i for i in range(r, n) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        a[r] = [x / a[r][c] for x in a[r]]
        for i in range(n):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        piv_cols.append(c)
        r += 1
        if r == n:
            break
    for i in range(r, n):
        if a[i][cols_n] != 0:
            return None
    if len(piv_cols) < cols_n:
        return None
    x = [Fraction(0)] * cols_n
    for i, c in enumerate(piv_cols):
        x[c] = a[i][cols_n]
    return tuple(x)


def invert_unimodular(m):
    """Integer inverse of a matrix with determinant +-1."""
    n = len(m)
    d = determinant(m)
    if d not in (1, -1):
        raise DetNotUnit(f"determinant is {d}, not a unit")
    cols = []
    for j in range(n):
        e = tuple(1 if i == j else 0 for i in range(n))
        sol = solve_exact(m, e)
        cols.append(tuple(int(x) for x in sol))
    return from_columns(cols)


def kernel_functional(rows, n):
    """Primitive integer functional vanishing on the span of `rows` in rank n.

    `rows` must span a hyperplane (rank n-1); the result is unique up to sign.
    """
    a = [[Fraction(x) for x in row] for row in rows]
    piv = {}
    r = 0
    for c in range(n):
        p = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        a[r] = [x / a[r][c] for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        piv[c] = r
        r += 1
    free = [c for c in range(n) if c not in piv]
    if len(free) != 1:
        raise ValueError(f"span has corank {len(free)}, expected a hyperplane")
    c0 = free[0]
    sol = [Fraction(0)] * n
    sol[c0] = Fraction(1)
    for c, i in piv.items():
        sol[c] = -a[i][c0]
    den = 1
    for x in sol:
        den = den * x.denominator // gcd(den, x.denominator)
    return primitive(tuple(int(x * den) for x in sol))


def _smith_normal_form(m):
    """Smith normal form D = U m V with U, V unimodular; returns (D, U, V)."""
    a = [list(row) for row in m]
    rows_n = len(a)
    cols_n = len(a[0]) if rows_n else 0
    u = [list(r) for r in identity(rows_n)]
    v = [list(r) for r in identity(cols_n)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, c):
        a[dst] = [x + c * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + c * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, c):
        for row in a:
            row[dst] += c * row[src]
        for row in v:
            row[dst] += c * row[src]

    t = 0
    while t < min(rows_n, cols_n):
        # deterministic pivot: smallest |entry|, scanning row-major
        best = None
        for i in range(t, rows_n):
            for j in range(t, cols_n):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        dirty = False
        for i in range(t + 1, rows_n):
            if a[i][t] != 0:
                q = a[i][t] // a[t][t]
                add_row(t, i, -q)
                if a[i][t] != 0:
                    dirty = True
        for j in range(t + 1, cols_n):
            if a[t][j] != 0:
                q = a[t][j] // a[t][t]
                add_col(t, j, -q)
                if a[t][j] != 0:
                    dirty = True
        if dirty:
            continue
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        # enforce divisibility of later entries by the pivot
        bad = None
        for i in range(t + 1, rows_n):
            for j in range(t + 1, cols_n):
                if a[i][j] % a[t][t] != 0:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            add_row(bad, t, 1)
            continue
        t += 1
    return mat(a), mat(u), mat(v)


def quotient_projection(generators, rank):
    """Surjection Z^rank -> Z^(rank-k) whose kernel saturates span(generators).

    The generators must be linearly independent and span a saturated
    sublattice (all elementary divisors 1); the map is the bottom rows of
    the Smith row transform, so it is deterministic for a fixed input order.
    """
    k = len(generators)
    if k == 0:
        return identity(rank)
    a = from_columns(list(generators))
    d, u, _v = _smith_normal_form(a)
    divisors = [d[i][i] for i in range(min(len(d), k))]
    if any(x == 0 for x in divisors) or len(divisors) < k:
        raise DependentGenerators("generators are linearly dependent")
    for x in divisors:
        if x not in (1, -1):
            raise NonSaturated(x)
    return tuple(u[k:])
