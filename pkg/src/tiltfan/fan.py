"""Simplicial fan data model: validation, faces, walls, Hasse orientation,
coordinate restriction, sign filtering and reduction.

A fan is stored combinatorially: a table of primitive rays plus the maximal
chambers as frozensets of ray indices.  Completeness is a certificate
("certified") established from wall-regularity and wall-graph connectivity,
never from volume.
"""

from dataclasses import dataclass, field
from itertools import combinations

from . import lattice as la
from .errors import (
    DanglingWall,
    TiltfanError,
    IncompleteFan,
    NonUnimodularChamber,
    NotAFace,
    OrderViolation,
    SignCoherenceViolation,
)

CERTIFIED = "certified"
UNKNOWN = "unknown"
INCOMPLETE = "incomplete"


@dataclass(frozen=True)
class Wall:
    """Shared codimension-1 face of two chambers."""

    shared: frozenset
    chambers: tuple  # pair of chamber indices
    normal: tuple  # primitive integer functional vanishing on the shared rays


@dataclass(frozen=True)
class Fan:
    rank: int
    rays: tuple  # tuple of primitive integer vectors
    chambers: tuple  # tuple of frozensets of ray indices
    base: int  # index into chambers
    walls: tuple = field(default=(), compare=False)
    complete: str = field(default=UNKNOWN, compare=False)

    def ray_matrix(self, chamber_index):
        """Columns are the rays of the chamber, in sorted index order."""
        idx = sorted(self.chambers[chamber_index])
        return la.from_columns([self.rays[i] for i in idx], rank=self.rank)

    def base_basis(self):
        """Base-chamber rays in descending lex order, so that a standard
        orthant base yields the unit vectors e_1, ..., e_n in order."""
        return sorted((self.rays[i] for i in self.chambers[self.base]), reverse=True)

    def base_matrix(self):
        return la.from_columns(self.base_basis(), rank=self.rank)

    def chamber_key(self, chamber_index):
        return tuple(sorted(self.rays[i] for i in self.chambers[chamber_index]))


def _wall_normal(shared_rays, free_a, free_b, rank):
    """Primitive normal of the hyperplane spanned by shared_rays, or None if
    the two free rays do not lie strictly on opposite sides."""
    if rank == 0:
        return None
    f = la.kernel_functional(shared_rays, rank) if shared_rays else tuple(
        1 if i == 0 else 0 for i in range(rank)
    )
    a = la.dot(f, free_a)
    b = la.dot(f, free_b)
    if a == 0 or b == 0 or (a > 0) == (b > 0):
        return None
    return f


def build_fan(rays, chambers, base, require_complete=False):
    """Validate and assemble a Fan.

    Checks ray primitivity/distinctness, chamber unimodularity, wall
    adjacency (free rays strictly on opposite sides of the shared
    hyperplane) and sign-coherence relative to the base chamber.
    Completeness is certified iff every codimension-1 face lies in exactly
    two chambers and the wall graph is connected.
    """
    rays = tuple(tuple(int(x) for x in r) for r in rays)
    if rays:
        rank = len(rays[0])
    else:
        rank = 0
    for r in rays:
        if la.is_zero(r) or la.primitive(r) != r:
            raise TiltfanError(f"ray {r} is not primitive")
    if len(set(rays)) != len(rays):
        raise TiltfanError("duplicate rays")

    chambers = tuple(frozenset(int(i) for i in c) for c in chambers)
    if len(set(chambers)) != len(chambers):
        raise TiltfanError("duplicate chambers")
    if not 0 <= base < len(chambers):
        raise TiltfanError("base chamber index out of range")

    if rank == 0:
        if chambers != (frozenset(),):
            raise TiltfanError("a rank-0 fan has exactly the trivial chamber")
        return Fan(0, (), chambers, 0, (), CERTIFIED)

    for ci, c in enumerate(chambers):
        if len(c) != rank:
            raise TiltfanError(f"chamber {ci} has {len(c)} rays, expected {rank}")
        d = la.determinant(la.from_columns([rays[i] for i in sorted(c)]))
        if d not in (1, -1):
            raise NonUnimodularChamber(ci, d)

    # sign-coherence: every chamber sits in one closed orthant of the
    # base-chamber coordinates
    basis = sorted((rays[i] for i in chambers[base]), reverse=True)
    s_inv = la.invert_unimodular(la.from_columns(basis))
    base_coords = {i: la.matvec(s_inv, rays[i]) for i in range(len(rays))}
    for ci, c in enumerate(chambers):
        for coord in range(rank):
            vals = [base_coords[i][coord] for i in c]
            if any(v > 0 for v in vals) and any(v < 0 for v in vals):
                raise SignCoherenceViolation(ci, coord)

    # wall detection via shared (rank-1)-subsets
    facet_owners = {}
    for ci, c in enumerate(chambers):
        for sub in combinations(sorted(c), rank - 1):
            facet_owners.setdefault(frozenset(sub), []).append(ci)

    walls = []
    dangling = []
    for sub, owners in sorted(facet_owners.items(), key=lambda kv: tuple(sorted(kv[0]))):
        if len(owners) > 2:
            raise TiltfanError(f"face {tuple(sorted(sub))} lies in {len(owners)} chambers")
        if len(owners) == 1:
            dangling.append(sub)
            continue
        ca, cb = owners
        free_a = next(iter(chambers[ca] - sub))
        free_b = next(iter(chambers[cb] - sub))
        normal = _wall_normal([rays[i] for i in sorted(sub)], rays[free_a], rays[free_b], rank)
        if normal is None:
            raise TiltfanError(
                f"chambers {ca} and {cb} share face {tuple(sorted(sub))} but overlap"
            )
        walls.append(Wall(sub, (ca, cb), normal))

    complete = UNKNOWN
    if not dangling and chambers:
        seen = {0}
        stack = [0]
        adj = {}
        for w in walls:
            adj.setdefault(w.chambers[0], []).append(w.chambers[1])
            adj.setdefault(w.chambers[1], []).append(w.chambers[0])
        while stack:
            for nb in adj.get(stack.pop(), []):
                if nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        if len(seen) == len(chambers):
            complete = CERTIFIED
    if require_complete and complete != CERTIFIED:
        raise DanglingWall(tuple(sorted(dangling[0])) if dangling else "disconnected wall graph")

    return Fan(rank, rays, chambers, base, tuple(walls), complete)


def faces(fan, i):
    """All i-subsets of ray indices spanning a cone of the fan (faces of chambers)."""
    if fan.complete != CERTIFIED:
        raise IncompleteFan("face enumeration requires a certified-complete fan")
    if not 0 <= i <= fan.rank:
        raise TiltfanError(f"face dimension {i} out of range")
    out = set()
    for c in fan.chambers:
        for sub in combinations(sorted(c), i):
            out.add(frozenset(sub))
    return out


@dataclass(frozen=True)
class HasseOrientation:
    """One directed edge per wall; arrows point away from the base chamber side."""

    arrows: tuple  # tuple of (src chamber index, dst chamber index, wall)

    def out_degrees(self, n_chambers):
        deg = [0] * n_chambers
        for src, _dst, _w in self.arrows:
            deg[src] += 1
        return deg

    def out_degree_histogram(self, n_chambers, rank):
        hist = [0] * (rank + 1)
        for d in self.out_degrees(n_chambers):
            hist[d] += 1
        return tuple(hist)


def hasse_orient(fan):
    """Orient every wall from the chamber on the base side to the other side.

    The wall normal is fixed to be nonnegative on the base chamber's rays;
    if neither sign of the normal achieves that, the fan is not ordered.
    """
    if fan.complete != CERTIFIED:
        raise IncompleteFan("orientation requires a certified-complete fan")
    base_rays = [fan.rays[i] for i in sorted(fan.chambers[fan.base])]
    arrows = []
    for w in fan.walls:
        f = w.normal
        vals = [la.dot(f, r) for r in base_rays]
        if all(v <= 0 for v in vals):
            f = la.vneg(f)
        elif not all(v >= 0 for v in vals):
            raise OrderViolation(tuple(sorted(w.shared)))
        ca, cb = w.chambers
        free_a = next(iter(fan.chambers[ca] - w.shared))
        if la.dot(f, fan.rays[free_a]) > 0:
            arrows.append((ca, cb, w))
        else:
            arrows.append((cb, ca, w))
    return HasseOrientation(tuple(arrows))


def restrict_to_coordinates(fan, indices):
    """Subfan of cones lying in the span of the chosen base-chamber rays,
    re-expressed in base-chamber coordinates of rank len(indices)."""
    indices = sorted(set(indices))
    if not all(0 <= i < fan.rank for i in indices):
        raise TiltfanError("coordinate index out of range")
    s_inv = la.invert_unimodular(fan.base_matrix())
    coords = [la.matvec(s_inv, r) for r in fan.rays]
    inside = {
        i
        for i, c in enumerate(coords)
        if all(c[j] == 0 for j in range(fan.rank) if j not in indices)
    }
    m = len(indices)
    new_ray_of = {i: tuple(coords[i][j] for j in indices) for i in inside}

    new_rays = sorted(set(new_ray_of.values()))
    ray_index = {r: k for k, r in enumerate(new_rays)}
    new_chambers = set()
    for c in fan.chambers:
        part = c & inside
        if len(part) == m:
            new_chambers.add(frozenset(ray_index[new_ray_of[i]] for i in part))
    new_chambers = sorted(new_chambers, key=lambda c: tuple(sorted(c)))
    base_part = fan.chambers[fan.base] & inside
    base_key = frozenset(ray_index[new_ray_of[i]] for i in base_part)
    return build_fan(new_rays, new_chambers, new_chambers.index(base_key))


def sign_filter(fan, eps):
    """Chamber indices contained in the closed orthant eps of the base coordinates."""
    if len(eps) != fan.rank or any(e not in (1, -1) for e in eps):
        raise TiltfanError("eps must be a vector over {+1,-1} of length rank")
    s_inv = la.invert_unimodular(fan.base_matrix())
    coords = [la.matvec(s_inv, r) for r in fan.rays]
    out = []
    for ci, c in enumerate(fan.chambers):
        if all(eps[j] * coords[i][j] >= 0 for i in c for j in range(fan.rank)):
            out.append(ci)
    return out


def reduce_at_cone(fan, cone_ray_indices):
    """Project the star of a cone along the quotient by its span.

    cone_ray_indices must be a face of some chamber.  The base of the
    reduced fan is the image of the lexicographically least chamber
    (by sorted ray vectors) containing the cone.
    """
    sigma = frozenset(cone_ray_indices)
    if fan.complete != CERTIFIED:
        raise IncompleteFan("reduction requires a certified-complete fan")
    if not sigma:
        return fan
    star = [ci for ci, c in enumerate(fan.chambers) if sigma <= c]
    if not star:
        raise NotAFace(f"{tuple(sorted(sigma))} is not a face of any chamber")
    gens = [fan.rays[i] for i in sorted(sigma)]
    q = la.quotient_projection(gens, fan.rank)
    m = fan.rank - len(sigma)
    if m == 0:
        return build_fan((), (frozenset(),), 0)

    images = {}
    for ci in star:
        for i in fan.chambers[ci] - sigma:
            images.setdefault(i, la.matvec(q, fan.rays[i]))
    new_rays = sorted(set(images.values()))
    ray_index = {r: k for k, r in enumerate(new_rays)}
    chamber_of = {
        ci: frozenset(ray_index[images[i]] for i in fan.chambers[ci] - sigma) for ci in star
    }
    new_chambers = sorted(set(chamber_of.values()), key=lambda c: tuple(sorted(c)))
    # deterministic base: the lexicographically least source chamber whose
    # image keeps the projected fan sign-coherent (it exists: the reduced
    # fan is again a g-fan, with base the image of a distinguished chamber)
    last_exc = None
    for src in sorted(star, key=fan.chamber_key):
        try:
            return build_fan(new_rays, new_chambers, new_chambers.index(chamber_of[src]))
        except SignCoherenceViolation as exc:
            last_exc = exc
    raise last_exc


def verify_pairwise_intersections(fan):
    """Exhaustive fan-axiom check for rank <= 3: the intersection of any two
    chambers is the cone spanned by their shared rays.

    The intersection of two simplicial full-dimensional cones is cut out by
    the two inverse ray matrices; its extreme rays arise as kernels of pairs
    of active constraints, and each must be a nonnegative combination of the
    shared rays (checked in chamber coordinates).
    """
    if fan.rank > 3:
        raise TiltfanError("paranoid verification is limited to rank <= 3")
    if fan.rank <= 1:
        return
    inv = [la.invert_unimodular(fan.ray_matrix(ci)) for ci in range(len(fan.chambers))]
    for ca, cb in combinations(range(len(fan.chambers)), 2):
        rows = list(inv[ca]) + list(inv[cb])
        shared = fan.chambers[ca] & fan.chambers[cb]
        shared_positions = [
            k for k, i in enumerate(sorted(fan.chambers[ca])) if i in shared
        ]
        candidates = set()
        if fan.rank == 2:
            groups = [(r,) for r in rows]
        else:
            groups = list(combinations(rows, 2))
        for group in groups:
            try:
                v = la.kernel_functional(list(group), fan.rank)
            except ValueError:
                continue
            for w in (v, la.vneg(v)):
                if all(la.dot(r, w) >= 0 for r in rows):
                    candidates.add(w)
        for w in candidates:
            coords = la.matvec(inv[ca], w)
            ok = all(c >= 0 for c in coords) and all(
                c == 0 for k, c in enumerate(coords) if k not in shared_positions
            )
            if not ok:
                raise TiltfanError(
                    f"chambers {ca} and {cb} intersect outside their shared face"
                )


def fan_to_json(fan):
    """Canonical JSON form: rays sorted lexicographically, chambers sorted."""
    order = sorted(range(len(fan.rays)), key=lambda i: fan.rays[i])
    new_of_old = {old: new for new, old in enumerate(order)}
    chambers = sorted(tuple(sorted(new_of_old[i] for i in c)) for c in fan.chambers)
    base_key = tuple(sorted(new_of_old[i] for i in fan.chambers[fan.base]))
    return {
        "schema_version": 1,
        "rank": fan.rank,
        "rays": [list(fan.rays[i]) for i in order],
        "chambers": [list(c) for c in chambers],
        "base": chambers.index(base_key),
        "complete": fan.complete,
    }


def fan_from_json(data):
    version = data.get("schema_version", 1)
    if version != 1:
        raise TiltfanError(f"unsupported schema version {version}")
    return build_fan(
        [tuple(r) for r in data["rays"]],
        [frozenset(c) for c in data["chambers"]],
        int(data["base"]),
    )
