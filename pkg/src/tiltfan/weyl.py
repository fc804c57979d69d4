"""Symmetrizable Cartan matrices, Weyl group enumeration, Coxeter fans,
root systems and descent statistics.

Everything is computed in the simple-root basis: the reflection s_i sends
alpha_j to alpha_j - c_ij alpha_i, and the Coxeter fan lives in the dual
basis, so the chamber of w has ray matrix (M_w^T)^{-1}.
"""

from dataclasses import dataclass
from math import lcm

from . import lattice as la
from .errors import NotFiniteType
from .fan import build_fan


@dataclass(frozen=True)
class CartanData:
    c: tuple  # rows of the Cartan matrix
    d: tuple  # diagonal symmetrizer, C D symmetric

    def __post_init__(self):
        c, d = self.c, self.d
        n = len(c)
        if any(len(row) != n for row in c) or len(d) != n:
            raise ValueError("Cartan matrix and symmetrizer sizes disagree")
        for i in range(n):
            if c[i][i] != 2:
                raise ValueError("diagonal entries must equal 2")
            if d[i] < 1:
                raise ValueError("symmetrizer entries must be positive")
            for j in range(n):
                if i != j and c[i][j] > 0:
                    raise ValueError("off-diagonal entries must be nonpositive")
                if (c[i][j] == 0) != (c[j][i] == 0):
                    raise ValueError("zero pattern must be symmetric")
                if c[i][j] * d[j] != c[j][i] * d[i]:
                    raise ValueError("C D is not symmetric")

    @property
    def n(self):
        return len(self.c)

    def reflection(self, i):
        """Matrix of s_i on the simple-root basis (columns are images)."""
        n = self.n
        return tuple(
            tuple((1 if r == j else 0) - (self.c[i][j] if r == i else 0) for j in range(n))
            for r in range(n)
        )

    def gram(self):
        """Integer Gram matrix of the W-invariant form: lcm(d) * D^{-1} C."""
        k = lcm(*self.d)
        return tuple(
            tuple(k * self.c[i][j] // self.d[i] for j in range(self.n)) for i in range(self.n)
        )

    def norm(self, v):
        g = self.gram()
        return sum(v[i] * g[i][j] * v[j] for i in range(self.n) for j in range(self.n))


def cartan_preset(type_, n):
    """Cartan data of type A_n (symmetrizer 1) or B_n (last entry doubled)."""
    if n < 1:
        raise ValueError("rank must be >= 1")
    c = [[2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n)] for i in range(n)]
    if type_.upper() == "A":
        return CartanData(la.mat(c), tuple([1] * n))
    if type_.upper() == "B":
        if n >= 2:
            c[n - 1][n - 2] = -2
        d = [1] * n
        d[n - 1] = 2 if n >= 2 else 1
        return CartanData(la.mat(c), tuple(d))
    raise ValueError(f"unknown preset type {type_!r}")


def cartan_from_json(data):
    if "type" in data:
        return cartan_preset(data["type"], int(data["n"]))
    return CartanData(la.mat(data["C"]), tuple(int(x) for x in data["D"]))


@dataclass(frozen=True)
class WeylElement:
    matrix: tuple  # action on the simple-root basis
    word: tuple  # one shortest word of generator indices (1-based)

    @property
    def length(self):
        return len(self.word)


@dataclass(frozen=True)
class BudgetExhausted:
    explored: int
    budget: int


def weyl_enumerate(cartan, budget=2_000_000):
    """BFS over right multiplication by the generators, deduplicated by matrix.

    Returns all elements with shortest words, or BudgetExhausted when the
    group fails to close within the budget (non-finite type).
    """
    n = cartan.n
    gens = [cartan.reflection(i) for i in range(n)]
    identity = la.identity(n)
    elements = {identity: ()}
    frontier = [identity]
    while frontier:
        nxt = []
        for m in frontier:
            word = elements[m]
            for i in range(n):
                m2 = la.matmul(m, gens[i])
                if m2 not in elements:
                    if len(elements) >= budget:
                        return BudgetExhausted(len(elements), budget)
                    elements[m2] = word + (i + 1,)
                    nxt.append(m2)
        frontier = nxt
    return [WeylElement(m, w) for m, w in elements.items()]


def _require_finite(result):
    if isinstance(result, BudgetExhausted):
        raise NotFiniteType(f"Weyl group did not close within {result.budget} elements")
    return result


def coxeter_fan(cartan, budget=2_000_000):
    """Fan of Weyl chambers in dominant-weight coordinates; |W| chambers."""
    elements = _require_finite(weyl_enumerate(cartan, budget))
    rays = set()
    chamber_keys = []
    for w in elements:
        r = la.invert_unimodular(la.transpose(w.matrix))
        cols = la.columns(r)
        rays.update(cols)
        chamber_keys.append(frozenset(cols))
    rays = sorted(rays)
    ray_index = {r: i for i, r in enumerate(rays)}
    chambers = sorted(
        {frozenset(ray_index[c] for c in key) for key in chamber_keys},
        key=lambda c: tuple(sorted(c)),
    )
    if len(chambers) != len(elements):
        raise AssertionError("distinct Weyl elements produced equal chambers")
    base_key = frozenset(ray_index[c] for c in la.columns(la.identity(cartan.n)))
    return build_fan(rays, chambers, chambers.index(base_key), require_complete=True)


def root_system(cartan, budget=2_000_000):
    """(all roots, short roots) as vectors in the simple-root basis."""
    _require_finite(weyl_enumerate(cartan, budget))
    n = cartan.n
    gens = [cartan.reflection(i) for i in range(n)]
    roots = {tuple(1 if i == j else 0 for j in range(n)) for i in range(n)}
    frontier = list(roots)
    while frontier:
        nxt = []
        for r in frontier:
            for g in gens:
                r2 = la.matvec(g, r)
                if r2 not in roots:
                    roots.add(r2)
                    nxt.append(r2)
        frontier = nxt
    min_norm = min(cartan.norm(r) for r in roots)
    short = {r for r in roots if cartan.norm(r) == min_norm}
    return roots, short


def descent_histogram(cartan, budget=2_000_000):
    """W-Eulerian numbers: counts of elements by number of left descents.

    s_i is a descent of w iff w^{-1}(alpha_i) is a negative root.
    """
    elements = _require_finite(weyl_enumerate(cartan, budget))
    n = cartan.n
    hist = [0] * (n + 1)
    for w in elements:
        inv = la.invert_unimodular(w.matrix)
        cols = la.columns(inv)
        des = sum(1 for c in cols if all(x <= 0 for x in c))
        hist[des] += 1
    return tuple(hist)


def short_root_polytope(cartan, budget=2_000_000):
    """Convex hull of the short roots in simple-root coordinates."""
    from .polytope import convex_hull

    _roots, short = root_system(cartan, budget)
    return convex_hull(sorted(short))
