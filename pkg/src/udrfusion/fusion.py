"""Orbits of a dihedral group acting on the plane N = F_p x F_p.

The action comes from a 2-dim irreducible theta_i0: rotations scale the
two coordinates by inverse powers of w^i0 and reflections swap them.
Two routes compute the orbit partition: a brute-force sweep over all p^2
points, and the closed form in which every orbit other than {(0,0)} has
size k or 2k with k = n/gcd(i0, n).  The census of orbit sizes (the
fusion numbers) only depends on p and k.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .dihedral import DihedralParams, GroupElement, group_elements, irr2_rep
from .ffield import LimitExceeded

NPoint = tuple[int, int]

BRUTE_FORCE_POINT_LIMIT = 10**6


@dataclass(frozen=True)
class FusionOrbit:
    """One orbit: lexicographically least representative, full point set,
    and the stabilizer of the representative (generators plus order)."""

    representative: NPoint
    elements: frozenset
    size: int
    stabilizer_order: int
    stabilizer_gens: tuple

    def __post_init__(self) -> None:
        if self.size != len(self.elements):
            raise ValueError("orbit size does not match element count")


@dataclass(frozen=True)
class FusionOrbitSet:
    """A full orbit partition of F_p x F_p.

    For dihedral actions params is a DihedralParams and i0 the acting
    representation index; the abelian route stores its AbelianParams and
    CharacterPair in the same two slots.
    """

    orbits: tuple
    p: int
    params: object
    i0: object

    def orbit_of(self, v: NPoint) -> FusionOrbit:
        for orb in self.orbits:
            if v in orb.elements:
                return orb
        raise KeyError(f"{v} is not a point of the plane being partitioned")

    def partition(self) -> frozenset:
        return frozenset(orb.elements for orb in self.orbits)

    def size_census(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for orb in self.orbits:
            counts[orb.size] = counts.get(orb.size, 0) + 1
        return dict(sorted(counts.items()))


@dataclass(eq=True)
class FusionNumbers:
    """Census size -> number of orbits of that size."""

    counts: dict

    @classmethod
    def from_orbits(cls, orbit_set: FusionOrbitSet) -> "FusionNumbers":
        return cls(orbit_set.size_census())

    @classmethod
    def dihedral_closed_form(cls, p: int, k: int) -> "FusionNumbers":
        """Expected census for a dihedral action with k = n/gcd(i0, n):
        one fixed point, p - 1 orbits of size k, and (p-1)(p+1-k)/(2k)
        orbits of size 2k."""
        num = (p - 1) * (p + 1 - k)
        if num % (2 * k) != 0:
            raise ValueError(f"census formula not integral for p={p}, k={k}")
        counts = {1: 1, k: p - 1}
        big = num // (2 * k)
        if big:
            counts[2 * k] = counts.get(2 * k, 0) + big
        return cls(dict(sorted(counts.items())))

    def total_points(self) -> int:
        return sum(size * cnt for size, cnt in self.counts.items())


def act(params: DihedralParams, i0: int, g: GroupElement, v: NPoint) -> NPoint:
    """Image of the point v under g through theta_i0."""
    return irr2_rep(params, i0).matrix(g).apply(v)


def _action_table(params: DihedralParams, i0: int) -> list[tuple[GroupElement, tuple[int, int, int, int]]]:
    rep = irr2_rep(params, i0)
    table = []
    for g in group_elements(params.n):
        m = rep.matrix(g).data
        table.append((g, (m[0][0], m[0][1], m[1][0], m[1][1])))
    return table


def fusion_orbits_bruteforce(params: DihedralParams, i0: int) -> FusionOrbitSet:
    """Orbit partition by sweeping every point of the plane.

    Serves as the oracle for the closed form; refuses planes larger
    than BRUTE_FORCE_POINT_LIMIT points.
    """
    p = params.p
    if p * p > BRUTE_FORCE_POINT_LIMIT:
        raise LimitExceeded(f"plane has {p * p} points, limit is {BRUTE_FORCE_POINT_LIMIT}")
    table = _action_table(params, i0)
    seen = set()
    orbits = []
    for x in range(p):
        for y in range(p):
            if (x, y) in seen:
                continue
            orbit = {((a * x + b * y) % p, (c * x + d * y) % p) for _, (a, b, c, d) in table}
            seen |= orbit
            rx, ry = rep = min(orbit)
            stab = tuple(
                g
                for g, (a, b, c, d) in table
                if (a * rx + b * ry) % p == rx and (c * rx + d * ry) % p == ry
            )
            orbits.append(FusionOrbit(rep, frozenset(orbit), len(orbit), len(stab), stab))
    orbits.sort(key=lambda o: o.representative)
    return FusionOrbitSet(tuple(orbits), p, params, i0)


def fusion_orbits_closed_form(params: DihedralParams, i0: int) -> FusionOrbitSet:
    """Orbit partition assembled case by case.

    With k = n/gcd(i0, n) and U = <w^i0> of order k:
      * {(0, 0)} alone, full stabilizer;
      * points with both coordinates nonzero and y/x in U lie in orbits
        of size k with stabilizer <r^k, s r^j0> where y/x = w^(i0 j0);
      * all other points lie in orbits of size 2k joining the rotation
        sweep of (x, y) with the sweep of the swapped point (y, x),
        stabilizer <r^k>.
    """
    n, p, w = params.n, params.p, params.omega
    if i0 not in params.irr2_indices():
        raise ValueError(f"index {i0} is not in [1, {n}/2)")
    g0 = gcd(i0, n)
    k = n // g0
    wi = pow(w, i0, p)
    wi_inv = pow(wi, -1, p)
    unit_powers = [pow(wi, t, p) for t in range(k)]
    unit_group = set(unit_powers)

    orbits = [
        FusionOrbit(
            (0, 0),
            frozenset({(0, 0)}),
            1,
            2 * n,
            (GroupElement.rotation(n), GroupElement.reflection(n)),
        )
    ]
    seen = {(0, 0)}
    for x in range(p):
        for y in range(p):
            if (x, y) in seen:
                continue
            sweep = []
            cx, cy = x, y
            for _ in range(k):
                sweep.append((cx, cy))
                cx = cx * wi % p
                cy = cy * wi_inv % p
            if x != 0 and y != 0 and (y * pow(x, -1, p)) % p in unit_group:
                elements = frozenset(sweep)
                rep = min(elements)
                ratio = rep[1] * pow(rep[0], -1, p) % p
                j0 = unit_powers.index(ratio)
                gens = (GroupElement.rotation(n, k), GroupElement.reflection(n, j0))
                orbit = FusionOrbit(rep, elements, k, 2 * g0, gens)
            else:
                elements = frozenset(sweep) | frozenset((b, a) for a, b in sweep)
                rep = min(elements)
                gens = (GroupElement.rotation(n, k),)
                orbit = FusionOrbit(rep, elements, 2 * k, g0, gens)
            seen |= orbit.elements
            orbits.append(orbit)
    orbits.sort(key=lambda o: o.representative)
    return FusionOrbitSet(tuple(orbits), p, params, i0)


def fusion_numbers(orbit_set: FusionOrbitSet) -> FusionNumbers:
    return FusionNumbers.from_orbits(orbit_set)


def same_fusion(params: DihedralParams, i: int, i0: int) -> bool:
    """Two actions give the same orbit structure iff gcd(i, n) = gcd(i0, n)."""
    n = params.n
    for idx in (i, i0):
        if idx not in params.irr2_indices():
            raise ValueError(f"index {idx} is not in [1, {n}/2)")
    return gcd(i, n) == gcd(i0, n)
