"""Rank-2 actions of a finite abelian group through a pair of characters.

The group is a product of cyclic factors acting diagonally on the plane:
the first coordinate through theta1, the second through theta2.  Fixed
counts, cohomology dimensions and ring classes all reduce to how many of
the two characters are trivial and whether they are mutually inverse;
the brute-force orbit partition is kept as the oracle showing those
summaries genuinely under-determine the orbit structure.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd, lcm, prod

from .cohomology import CohomologyDims
from .deformation import UdrClass
from .ffield import FpMatrix, LimitExceeded, is_odd_prime, is_prime, primitive_root_of_unity
from .fusion import FusionOrbit, FusionOrbitSet, fusion_numbers

ABELIAN_BRUTE_FORCE_LIMIT = 10**6


def smallest_valid_abelian_prime(exponent: int, group_order: int) -> int:
    """Smallest odd prime p with exponent | p - 1 and p coprime to the order."""
    p = 3
    while True:
        if is_prime(p) and (p - 1) % exponent == 0 and group_order % p != 0:
            return p
        p += 2


@dataclass(frozen=True)
class AbelianParams:
    """Product of cyclic groups Z/m_1 x ... x Z/m_t over F_p, with the
    group exponent dividing p - 1 and p coprime to the group order."""

    cyclic_orders: tuple
    p: int

    def __post_init__(self) -> None:
        orders = tuple(int(m) for m in self.cyclic_orders)
        object.__setattr__(self, "cyclic_orders", orders)
        if not orders or any(m < 1 for m in orders):
            raise ValueError("cyclic orders must be positive integers")
        if not is_odd_prime(self.p):
            raise ValueError(f"{self.p} is not an odd prime")
        if gcd(self.p, self.order) != 1:
            raise ValueError(f"{self.p} divides the group order {self.order}")
        if (self.p - 1) % self.exponent != 0:
            raise ValueError(
                f"group exponent {self.exponent} does not divide p - 1 = {self.p - 1}"
            )

    @classmethod
    def standard(cls, cyclic_orders, p: int | None = None) -> "AbelianParams":
        orders = tuple(int(m) for m in cyclic_orders)
        if p is None:
            if not orders or any(m < 1 for m in orders):
                raise ValueError("cyclic orders must be positive integers")
            p = smallest_valid_abelian_prime(lcm(*orders), prod(orders))
        return cls(orders, p)

    @property
    def order(self) -> int:
        return prod(self.cyclic_orders)

    @property
    def exponent(self) -> int:
        return lcm(*self.cyclic_orders)

    def elements(self):
        """All group elements as exponent tuples, in lexicographic order."""
        return itertools.product(*(range(m) for m in self.cyclic_orders))

    def generator_roots(self) -> tuple[int, ...]:
        """Deterministic primitive m_i-th root of unity for each factor."""
        return tuple(primitive_root_of_unity(self.p, m) for m in self.cyclic_orders)


@dataclass(frozen=True)
class CharacterPair:
    """Two characters of the group, each given by its generator images."""

    params: AbelianParams
    theta1: tuple
    theta2: tuple

    def __post_init__(self) -> None:
        p = self.params.p
        for which in ("theta1", "theta2"):
            raw = getattr(self, which)
            images = tuple(int(v) % p for v in raw)
            object.__setattr__(self, which, images)
            if len(images) != len(self.params.cyclic_orders):
                raise ValueError(f"{which} needs one image per cyclic factor")
            for img, m in zip(images, self.params.cyclic_orders):
                if img == 0 or pow(img, m, p) != 1:
                    raise ValueError(
                        f"{which} image {img} does not have order dividing {m} mod {p}"
                    )

    @classmethod
    def from_exponents(cls, params: AbelianParams, e1, e2) -> "CharacterPair":
        """Characters g_i -> w_i^(e_i) for the deterministic roots w_i."""
        roots = params.generator_roots()
        if len(tuple(e1)) != len(roots) or len(tuple(e2)) != len(roots):
            raise ValueError("need one exponent per cyclic factor")
        img1 = tuple(pow(w, int(e) % m, params.p) for w, e, m in zip(roots, e1, params.cyclic_orders))
        img2 = tuple(pow(w, int(e) % m, params.p) for w, e, m in zip(roots, e2, params.cyclic_orders))
        return cls(params, img1, img2)

    def value1(self, elem) -> int:
        p = self.params.p
        v = 1
        for img, e in zip(self.theta1, elem):
            v = v * pow(img, e, p) % p
        return v

    def value2(self, elem) -> int:
        p = self.params.p
        v = 1
        for img, e in zip(self.theta2, elem):
            v = v * pow(img, e, p) % p
        return v

    def trivial_count(self) -> int:
        ones1 = all(v == 1 for v in self.theta1)
        ones2 = all(v == 1 for v in self.theta2)
        return int(ones1) + int(ones2)

    def are_inverse(self) -> bool:
        p = self.params.p
        return all(a * b % p == 1 for a, b in zip(self.theta1, self.theta2))


def abelian_fixed_count(pair: CharacterPair) -> int:
    """Number of plane points fixed by the whole group: p to the number
    of trivial characters in the pair."""
    return pair.params.p ** pair.trivial_count()


def abelian_fixed_count_bruteforce(pair: CharacterPair) -> int:
    """Fixed points counted by scanning the plane; the guard matches the
    orbit brute force."""
    params = pair.params
    p = params.p
    if params.order * p * p > ABELIAN_BRUTE_FORCE_LIMIT:
        raise LimitExceeded("plane sweep too large")
    values = [(pair.value1(g), pair.value2(g)) for g in params.elements()]
    count = 0
    for x in range(p):
        for y in range(p):
            if all(a * x % p == x and b * y % p == y for a, b in values):
                count += 1
    return count


def abelian_dims(pair: CharacterPair) -> CohomologyDims:
    """d1 counts the trivial characters; d2 adds one exactly when the
    characters are mutually inverse.  Independent of the coefficient
    module, which is one-dimensional with trivial adjoint."""
    d1 = pair.trivial_count()
    return CohomologyDims(d1, d1 + (1 if pair.are_inverse() else 0))


def abelian_dims_projector(pair: CharacterPair) -> CohomologyDims:
    """The same dimensions from averaging idempotents over the group:
    d1 from the contragredient of the diagonal action, the d2 increment
    from its determinant character."""
    params = pair.params
    p = params.p
    inv_order = pow(params.order % p, -1, p)
    acc2 = FpMatrix.zeros(p, 2, 2)
    acc1 = FpMatrix.zeros(p, 1, 1)
    for g in params.elements():
        v1 = pow(pair.value1(g), -1, p)
        v2 = pow(pair.value2(g), -1, p)
        acc2 = acc2 + FpMatrix.diagonal(p, (v1, v2))
        acc1 = acc1 + FpMatrix(p, ((v1 * v2 % p,),))
    d1 = (inv_order * acc2).rank()
    return CohomologyDims(d1, d1 + (inv_order * acc1).rank())


def abelian_udr(pair: CharacterPair) -> UdrClass:
    """Ring class from d1: the group ring of a p-elementary quotient of
    rank d1 (0, 1 or 2)."""
    d1 = abelian_dims(pair).d1
    return (UdrClass.ZP, UdrClass.ZP_CP, UdrClass.ZP_CP_SQUARED)[d1]


def abelian_orbits_bruteforce(pair: CharacterPair) -> FusionOrbitSet:
    """Orbit partition of the plane under the diagonal character action."""
    params = pair.params
    p = params.p
    if params.order * p * p > ABELIAN_BRUTE_FORCE_LIMIT:
        raise LimitExceeded(
            f"sweep size {params.order * p * p} exceeds {ABELIAN_BRUTE_FORCE_LIMIT}"
        )
    table = [(g, pair.value1(g), pair.value2(g)) for g in params.elements()]
    seen = set()
    orbits = []
    for x in range(p):
        for y in range(p):
            if (x, y) in seen:
                continue
            orbit = {(a * x % p, b * y % p) for _, a, b in table}
            seen |= orbit
            rx, ry = rep = min(orbit)
            stab = tuple(g for g, a, b in table if a * rx % p == rx and b * ry % p == ry)
            orbits.append(FusionOrbit(rep, frozenset(orbit), len(orbit), len(stab), stab))
    orbits.sort(key=lambda o: o.representative)
    return FusionOrbitSet(tuple(orbits), p, params, pair)


def all_character_pairs(params: AbelianParams):
    """Every character pair, in deterministic exponent order."""
    ranges = [range(m) for m in params.cyclic_orders]
    for e1 in itertools.product(*ranges):
        for e2 in itertools.product(*ranges):
            yield CharacterPair.from_exponents(params, e1, e2)


def find_underdetermined_pair(params: AbelianParams):
    """Search for two character pairs with identical fusion numbers,
    dimensions and ring class whose orbit partitions still differ.

    Returns the first such (pair, pair) in search order, or None.  The
    existence of one shows the summary invariants cannot reconstruct
    the orbit structure.
    """
    catalog = []
    for pair in all_character_pairs(params):
        orbit_set = abelian_orbits_bruteforce(pair)
        summary = (
            tuple(sorted(fusion_numbers(orbit_set).counts.items())),
            abelian_dims(pair),
            abelian_udr(pair),
        )
        catalog.append((pair, summary, orbit_set.partition()))
    for a_pos, (pair1, sum1, part1) in enumerate(catalog):
        for pair2, sum2, part2 in catalog[a_pos + 1 :]:
            if sum1 == sum2 and part1 != part2:
                return pair1, pair2
    return None
