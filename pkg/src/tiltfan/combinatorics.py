"""Enumerative invariants of a complete fan: f-, h- and gamma-vectors,
Dehn-Sommerville symmetry, Ehrhart counts (closed form and brute force)."""

from math import comb

from .errors import IncompleteFan, NotPalindromic
from .fan import CERTIFIED, faces


def f_vector(fan):
    """(f_-1, f_0, ..., f_{n-1}) where f_{i-1} counts i-element faces."""
    if fan.complete != CERTIFIED:
        raise IncompleteFan("f-vector requires a certified-complete fan")
    return tuple(len(faces(fan, i)) for i in range(fan.rank + 1))


def h_vector(f):
    """Coefficients of h(x) = f(x-1); inverse of recover_f."""
    n = len(f) - 1
    return tuple(
        sum((-1) ** (j - i) * comb(n - i, j - i) * f[i] for i in range(j + 1))
        for j in range(n + 1)
    )


def recover_f(h):
    """f-vector from the h-vector; round-trips with h_vector."""
    n = len(h) - 1
    return tuple(sum(comb(n - i, j - i) * h[i] for i in range(j + 1)) for j in range(n + 1))


def dehn_sommerville(h):
    return all(h[j] == h[len(h) - 1 - j] for j in range(len(h)))


def gamma_vector(h):
    """Unique gamma with h(x) = sum gamma_i x^i (1+x)^(n-2i); needs palindromic h."""
    if not dehn_sommerville(h):
        raise NotPalindromic(f"h-vector {h} is not palindromic")
    n = len(h) - 1
    # work with descending coefficients [h_0, ..., h_n] of h(x) = sum h_i x^(n-i)
    rem = list(h)
    gamma = []
    for i in range(n // 2 + 1):
        g = rem[i]
        gamma.append(g)
        # subtract g * x^i * (1+x)^(n-2i): descending coeffs sit at offsets i..n-i
        for k in range(n - 2 * i + 1):
            rem[i + k] -= g * comb(n - 2 * i, k)
    if any(x != 0 for x in rem):
        raise NotPalindromic(f"no exact gamma expansion for {h}")
    return tuple(gamma)


def ehrhart_count(h, ell):
    """Number of lattice points of the ell-th dilate, from the h-vector."""
    n = len(h) - 1
    total = 0
    for j in range(n + 1):
        k = n + ell - j
        if k >= n:
            total += comb(k, n) * h[j]
    return total


def ehrhart_bruteforce(fan, ell):
    """Exact count of points of the ell-th dilate of the fan's polytope.

    Enumerates integer combinations sum a_i r_i with a_i >= 0 and
    sum a_i <= ell inside every chamber and dedupes; unimodularity of the
    chambers makes this the full set of lattice points.
    """
    if fan.complete != CERTIFIED:
        raise IncompleteFan("Ehrhart enumeration requires a certified-complete fan")
    if ell < 1:
        raise ValueError("dilation factor must be >= 1")
    points = set()

    def compositions(total, parts):
        if parts == 1:
            yield (total,)
            return
        for first in range(total + 1):
            for rest in compositions(total - first, parts - 1):
                yield (first,) + rest

    for c in fan.chambers:
        rays = [fan.rays[i] for i in sorted(c)]
        for total in range(ell + 1):
            for coeffs in compositions(total, len(rays)):
                p = tuple(
                    sum(a * r[j] for a, r in zip(coeffs, rays)) for j in range(fan.rank)
                )
                points.add(p)
    return len(points)


def analyze(fan, ell_max=4):
    """Full invariant report used by the CLI `analyze` command."""
    f = f_vector(fan)
    h = h_vector(f)
    report = {
        "f": list(f),
        "h": list(h),
        "gamma": list(gamma_vector(h)) if dehn_sommerville(h) else None,
        "dehn_sommerville": dehn_sommerville(h),
        "ehrhart": {str(ell): ehrhart_count(h, ell) for ell in range(1, ell_max + 1)},
    }
    return report
