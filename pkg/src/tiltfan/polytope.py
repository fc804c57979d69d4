"""Lattice polytopes by exact arithmetic: hulls in rank <= 4, convexity of
fan polytopes, dual polytopes and reflexivity, the smooth-Fano test, the
rank-2 classification and root polytopes of types A and C."""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations

from . import lattice as la
from .errors import (
    DimensionTooLarge,
    IncompleteFan,
    NotConvex,
    NotRank2,
    OriginNotInterior,
)
from .fan import CERTIFIED, build_fan


@dataclass(frozen=True)
class LatticePolytope:
    vertices: tuple  # integer vectors, sorted
    facets: tuple  # (normal, offset) pairs, normal . x <= offset, primitive integer

    @property
    def rank(self):
        return len(self.vertices[0])

    def contains(self, point):
        return all(la.dot(n, point) <= off for n, off in self.facets)

    def facet_vertices(self, facet):
        n, off = facet
        return tuple(v for v in self.vertices if la.dot(n, v) == off)

    def origin_interior(self):
        return all(off > 0 for _n, off in self.facets)


def _hyperplane_through(points, rank):
    """Primitive (normal, offset) of the affine hyperplane through the points,
    or None if they are affinely dependent."""
    diffs = [la.vsub(p, points[0]) for p in points[1:]]
    try:
        normal = la.kernel_functional(diffs, rank)
    except ValueError:
        return None
    return normal, la.dot(normal, points[0])


def convex_hull(points, rank=None):
    """Exact hull of full-dimensional integer point sets in rank <= 4.

    Facets come from supporting hyperplanes through rank-subsets; vertices
    are the points whose active facet normals span the whole space.
    """
    points = sorted({tuple(int(x) for x in p) for p in points})
    if not points:
        raise ValueError("no points")
    rank = rank or len(points[0])
    if rank == 1:
        lo, hi = points[0], points[-1]
        if lo == hi:
            raise ValueError("hull is not full-dimensional")
        return LatticePolytope((lo, hi), (((1,), hi[0]), ((-1,), -lo[0])))
    if rank > 4:
        raise DimensionTooLarge("hull implemented for rank <= 4 only")

    facets = {}
    for sub in combinations(points, rank):
        hp = _hyperplane_through(list(sub), rank)
        if hp is None:
            continue
        normal, off = hp
        vals = [la.dot(normal, p) - off for p in points]
        if all(v <= 0 for v in vals):
            facets[(normal, off)] = True
        elif all(v >= 0 for v in vals):
            facets[(la.vneg(normal), -off)] = True
    if not facets:
        raise ValueError("hull is not full-dimensional")

    vertices = []
    for p in points:
        active = [n for (n, off) in facets if la.dot(n, p) == off]
        if len(active) >= rank and _rank_of(active, rank) == rank:
            vertices.append(p)
    return LatticePolytope(tuple(sorted(vertices)), tuple(sorted(facets)))


def _rank_of(vectors, n):
    a = [[Fraction(x) for x in v] for v in vectors]
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        a[r] = [x / a[r][c] for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [u - f * w for u, w in zip(a[i], a[r])]
        r += 1
    return r


# -- convexity of the fan polytope ------------------------------------------

ZERO = "Zero"
SINGLE_RAY = "SingleRay"
RAY_SUM = "RaySum"
NONCONVEX_POSITIVE = "NonconvexPositive"
NOT_POSITIVE = "NotPositive"


@dataclass(frozen=True)
class WallClass:
    wall: tuple  # sorted shared ray indices
    kind: str
    data: tuple = ()


@dataclass(frozen=True)
class ConvexityReport:
    convex: bool
    walls: tuple  # WallClass per wall


def convexity_report(fan):
    """Classify v + v' over every wall in the shared-ray basis.

    The sum of the two free rays is an integer combination of the shared
    rays (unimodularity); the fan polytope is convex iff every wall gives
    0, one shared ray, or a sum of two shared rays.
    """
    if fan.complete != CERTIFIED:
        raise IncompleteFan("convexity requires a certified-complete fan")
    out = []
    convex = True
    for w in fan.walls:
        shared = sorted(w.shared)
        ca, cb = w.chambers
        free_a = next(iter(fan.chambers[ca] - w.shared))
        free_b = next(iter(fan.chambers[cb] - w.shared))
        total = la.vadd(fan.rays[free_a], fan.rays[free_b])
        basis = la.from_columns(
            [fan.rays[i] for i in shared] + [fan.rays[free_a]], rank=fan.rank
        )
        coeffs = la.solve_exact(basis, total)
        coeffs = tuple(int(x) for x in coeffs)
        shared_part, last = coeffs[:-1], coeffs[-1]
        if last != 0 or any(c < 0 for c in shared_part):
            kind, data = NOT_POSITIVE, coeffs
            convex = False
        elif all(c == 0 for c in shared_part):
            kind, data = ZERO, ()
        elif sum(shared_part) == 1:
            kind, data = SINGLE_RAY, (shared[shared_part.index(1)],)
        elif sum(shared_part) == 2 and all(c <= 2 for c in shared_part):
            pos = [shared[i] for i, c in enumerate(shared_part) for _ in range(c)]
            kind, data = RAY_SUM, tuple(pos)
        else:
            kind, data = NONCONVEX_POSITIVE, coeffs
            convex = False
        out.append(WallClass(tuple(shared), kind, data))
    return ConvexityReport(convex, tuple(out))


def g_polytope(fan):
    """Convex hull of all rays; requires the fan polytope to be convex."""
    report = convexity_report(fan)
    if not report.convex:
        raise NotConvex("fan polytope is not convex")
    return convex_hull(fan.rays, fan.rank)


def dual_polytope(fan):
    """Dual polytope via one vertex per chamber and its reflexivity flag.

    The chamber with ray matrix R contributes the solution of R^T v = 1;
    since chambers are unimodular these vertices are integral, which is the
    reflexivity statement checked here.
    """
    report = convexity_report(fan)
    if not report.convex:
        raise NotConvex("fan polytope is not convex")
    verts = []
    for ci in range(len(fan.chambers)):
        r = fan.ray_matrix(ci)
        sol = la.solve_exact(la.transpose(r), tuple([1] * fan.rank))
        verts.append(tuple(sol))
    reflexive = all(x.denominator == 1 for v in verts for x in v)
    int_verts = sorted({tuple(int(x) for x in v) for v in verts}) if reflexive else None
    poly = convex_hull(int_verts, fan.rank) if reflexive else None
    return poly, reflexive, tuple(tuple(v) for v in verts)


def smooth_fano(poly):
    """True iff every facet's vertex set is a lattice basis."""
    if not poly.origin_interior():
        raise OriginNotInterior("smooth-Fano test needs the origin strictly inside")
    n = poly.rank
    for facet in poly.facets:
        fv = poly.facet_vertices(facet)
        if len(fv) != n:
            return False
        if la.determinant(la.from_columns(list(fv))) not in (1, -1):
            return False
    return True


# -- rank-2 classification ---------------------------------------------------

# ray sets of the seven convex g-polygons, base chamber cone{e1, e2}
CANONICAL_RANK2 = (
    frozenset({(1, 0), (0, 1), (-1, 0), (0, -1)}),
    frozenset({(1, 0), (0, 1), (-1, 0), (0, -1), (-1, 1)}),
    frozenset({(1, 0), (0, 1), (-1, 0), (0, -1), (-1, 1), (1, -1)}),
    frozenset({(1, 0), (0, 1), (-1, 0), (0, -1), (-1, 1), (-2, 1)}),
    frozenset({(1, 0), (0, 1), (-1, 0), (0, -1), (-1, 1), (-2, 1), (1, -1)}),
    frozenset({(1, 0), (0, 1), (-1, 0), (0, -1), (-1, 1), (-2, 1), (1, -1), (2, -1)}),
    frozenset({(1, 0), (0, 1), (-1, 0), (0, -1), (-1, 1), (-2, 1), (1, -1), (1, -2)}),
)


def canonical_rank2_fan(klass):
    """Build the canonical fan of one of the seven classes (1-based)."""
    rays = sorted(CANONICAL_RANK2[klass - 1])
    return rank2_fan_from_rays(rays)


def rank2_fan_from_rays(rays, base_pair=((1, 0), (0, 1))):
    """Complete rank-2 fan with chambers the angularly consecutive ray pairs."""

    def angle_key(v):
        x, y = v
        half = 0 if y > 0 or (y == 0 and x > 0) else 1
        return (half, 0 if y == 0 else 1, Fraction(-x, y) if y != 0 else Fraction(0))

    ordered = sorted(rays, key=angle_key)
    k = len(ordered)
    rays_sorted = sorted(ordered)
    index = {r: i for i, r in enumerate(rays_sorted)}
    chambers = [
        frozenset({index[ordered[i]], index[ordered[(i + 1) % k]]}) for i in range(k)
    ]
    base = chambers.index(frozenset({index[base_pair[0]], index[base_pair[1]]}))
    return build_fan(rays_sorted, chambers, base, require_complete=True)


def rank2_classify(fan):
    """Match a complete rank-2 fan against the seven convex polygon classes.

    Returns the 1-based class, or None when the polytope is not convex.
    Normalizes by the unimodular maps carrying the base chamber onto the
    positive quadrant or its negative.
    """
    if fan.rank != 2:
        raise NotRank2(f"fan has rank {fan.rank}")
    if fan.complete != CERTIFIED:
        raise IncompleteFan("classification requires a certified-complete fan")
    if not convexity_report(fan).convex:
        return None
    s = fan.base_matrix()
    s_inv = la.invert_unimodular(s)
    targets = [
        ((1, 0), (0, 1)),
        ((0, 1), (1, 0)),
        ((-1, 0), (0, -1)),
        ((0, -1), (-1, 0)),
    ]
    for t1, t2 in targets:
        m = la.matmul(la.from_columns([t1, t2]), s_inv)
        image = frozenset(tuple(la.matvec(m, r)) for r in fan.rays)
        for k, canon in enumerate(CANONICAL_RANK2, start=1):
            if image == canon:
                return k
    raise ValueError("convex rank-2 fan outside the canonical classification")


# -- root polytopes -----------------------------------------------------------


def root_polytope(type_, n):
    """Hull of the A_n or C_n root system in root-lattice coordinates.

    A_n: vertices u_1..u_{n+1}, basis b_i = u_i - u_{i+1}.
    C_n: vertices u_1..u_n, basis b_i = u_i - u_{i+1} (i < n) and b_n = 2 u_n.
    """
    if n < 1:
        raise ValueError("rank must be >= 1")
    t = type_.upper()
    if t == "A":
        nv = n + 1
        unit = lambda k: tuple(1 if i == k else 0 for i in range(nv))
        roots = [
            la.vsub(unit(i), unit(j)) for i in range(nv) for j in range(nv) if i != j
        ]
        basis = [la.vsub(unit(i), unit(i + 1)) for i in range(n)]
    elif t == "C":
        nv = n
        unit = lambda k: tuple(1 if i == k else 0 for i in range(nv))
        roots = []
        for i in range(nv):
            roots.append(la.vscale(2, unit(i)))
            roots.append(la.vscale(-2, unit(i)))
            for j in range(i + 1, nv):
                for si in (1, -1):
                    for sj in (1, -1):
                        roots.append(la.vadd(la.vscale(si, unit(i)), la.vscale(sj, unit(j))))
        basis = [la.vsub(unit(i), unit(i + 1)) for i in range(n - 1)] + [la.vscale(2, unit(n - 1))]
    else:
        raise ValueError(f"root polytope type must be A or C, got {type_!r}")
    b = la.from_columns(basis, rank=nv)
    coords = []
    for r in roots:
        sol = la.solve_exact(b, r)
        if sol is None or any(x.denominator != 1 for x in sol):
            raise AssertionError("root outside the chosen lattice basis")
        coords.append(tuple(int(x) for x in sol))
    return convex_hull(coords, n)


# -- lattice isomorphism (rank <= 3) ------------------------------------------


def compare_fan_invariants(fan_a, fan_b, ell_max=3):
    """Invariant-level comparison for fans beyond the isomorphism-search cap.

    Compares f-vectors, hull vertex counts (for convex inputs of rank <= 4)
    and Ehrhart counts up to ell_max; "match" is a necessary condition only,
    never an isomorphism claim.
    """
    from .combinatorics import ehrhart_count, f_vector, h_vector

    def profile(fan):
        f = f_vector(fan)
        h = h_vector(f)
        hull_vertices = None
        if fan.rank <= 4 and convexity_report(fan).convex:
            hull_vertices = len(convex_hull(fan.rays, fan.rank).vertices)
        return {
            "f": f,
            "hull_vertices": hull_vertices,
            "ehrhart": tuple(ehrhart_count(h, ell) for ell in range(1, ell_max + 1)),
        }

    pa, pb = profile(fan_a), profile(fan_b)
    return ("match" if pa == pb else "differ"), pa, pb


def lattice_iso(p, q):
    """Unimodular map carrying the vertex set of p onto that of q, or None.

    Brute force: anchor an independent vertex tuple of p and try every
    ordered tuple of q's vertices as its image; first match wins under a
    deterministic ordering.
    """
    n = p.rank
    if n != q.rank:
        return None
    if n > 3:
        raise DimensionTooLarge("isomorphism search implemented for rank <= 3")
    if len(p.vertices) != len(q.vertices):
        return None
    anchor = None
    for sub in combinations(p.vertices, n):
        if la.determinant(la.from_columns(list(sub))) != 0:
            anchor = sub
            break
    if anchor is None:
        return None
    a_mat = la.from_columns(list(anchor))
    p_set = set(p.vertices)
    q_set = set(q.vertices)
    for image in permutations(q.vertices, n):
        # solve M * anchor_i = image_i  =>  M = image_mat * anchor_mat^{-1}
        img_mat = la.from_columns(list(image))
        m = _rational_matmul_inverse(img_mat, a_mat)
        if m is None:
            continue
        if la.determinant(m) not in (1, -1):
            continue
        if {tuple(la.matvec(m, v)) for v in p_set} == q_set:
            return m
    return None


def _rational_matmul_inverse(img_mat, a_mat):
    """Integer matrix M with M a_mat = img_mat, or None."""
    n = len(a_mat)
    cols = []
    for j in range(n):
        e = tuple(1 if i == j else 0 for i in range(n))
        sol = la.solve_exact(a_mat, e)
        if sol is None:
            return None
        cols.append(sol)
    a_inv = la.from_columns(cols)  # rational entries
    m = tuple(
        tuple(sum(img_mat[i][k] * a_inv[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )
    if any(x.denominator != 1 for row in m for x in row):
        return None
    return tuple(tuple(int(x) for x in row) for row in m)
