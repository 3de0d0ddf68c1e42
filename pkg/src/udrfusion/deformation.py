"""Universal deformation ring classes and the detection checks built on them.

For a rank-2 dihedral action in odd coprime characteristic the ring is
determined symbolically by the cohomology dimensions: d2 = 2 gives the
t-torsion quotient Zp[[t]]/(t^2, pt), anything else gives Zp.  The
checks below mechanically confirm, instance by instance, that kernel
sets of the cohomologically distinguished representations detect the
orbit structure of the plane, and delimit exactly when the whole table
of ring classes determines that orbit structure.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd

from .cohomology import cohomologically_maximal_set, dims
from .dihedral import (
    DihedralParams,
    RepLabel,
    center_acts_trivially,
    kernel_invariant,
    omega_set,
    t_map,
    t_preimage,
)
from .ffield import find_primes, is_prime
from .fusion import same_fusion


class UdrClass(Enum):
    """Symbolic deformation ring classes; values are the comma-free tags
    used in CSV output, .label the pretty form used in JSON."""

    ZP = "Zp"
    ZP_T_TORSION = "ZpTtorsion"
    ZP_CP = "ZpCp"
    ZP_CP_SQUARED = "ZpCpSquared"

    @property
    def label(self) -> str:
        return _UDR_LABELS[self]


_UDR_LABELS = {
    UdrClass.ZP: "Zp",
    UdrClass.ZP_T_TORSION: "Zp[[t]]/(t^2,pt)",
    UdrClass.ZP_CP: "Zp[Z/p]",
    UdrClass.ZP_CP_SQUARED: "Zp[Z/pxZ/p]",
}


@dataclass(eq=True)
class UdrSignature:
    """Ring class per 2-dim irreducible index, for one fixed action."""

    per_rep: dict

    def digest(self) -> str:
        """One letter per index in increasing order: T for the t-torsion
        class, Z for Zp.  Comma-free for CSV cells."""
        return "".join(
            "T" if self.per_rep[j] is UdrClass.ZP_T_TORSION else "Z"
            for j in sorted(self.per_rep)
        )


@dataclass(frozen=True)
class VerificationReport:
    check_name: str
    parameters: tuple
    passed: bool
    witness: object = None


def udr_class(params: DihedralParams, i0: int, j: int) -> UdrClass:
    return UdrClass.ZP_T_TORSION if dims(params, i0, j).d2 == 2 else UdrClass.ZP


def udr_signature(params: DihedralParams, i0: int) -> UdrSignature:
    return UdrSignature({j: udr_class(params, i0, j) for j in params.irr2_indices()})


def _kernel_subgroup(params: DihedralParams, i: int) -> frozenset:
    return frozenset(kernel_invariant(params, i)[1])


def _subgroup_words(subgroup: frozenset) -> tuple[str, ...]:
    return tuple(g.word() for g in sorted(subgroup, key=lambda g: g.sort_key()))


def maximal_kernel_set(params: DihedralParams, i0: int) -> frozenset:
    """Kernels of the representations with maximal d2, as a set of subgroups."""
    return frozenset(
        _kernel_subgroup(params, j) for j in cohomologically_maximal_set(params, i0)
    )


def nontrivial_udr_kernel_set(params: DihedralParams, i0: int) -> frozenset:
    """Kernels of the representations whose ring class is not Zp."""
    return frozenset(
        _kernel_subgroup(params, j)
        for j in params.irr2_indices()
        if udr_class(params, i0, j) is not UdrClass.ZP
    )


def check_kernel_sets_detect_fusion(params: DihedralParams, i0: int) -> VerificationReport:
    """Two claims for an action index i0 in the doubling-map image.

    (a) The kernel set of the d2-maximal representations equals the
        kernel set of the non-Zp representations.
    (b) Across all action indices in the doubling-map image, equal
        kernel sets correspond exactly to equal orbit structure.
    Kernels are compared as explicit element-list subgroups.
    """
    name = "kernel_sets_detect_fusion"
    if i0 not in omega_set(params):
        raise ValueError(f"index {i0} is not a doubling-map value for n = {params.n}")
    ks0 = maximal_kernel_set(params, i0)
    if ks0 != nontrivial_udr_kernel_set(params, i0):
        witness = (
            "maximal_vs_nontrivial",
            sorted(map(_subgroup_words, ks0)),
            sorted(map(_subgroup_words, nontrivial_udr_kernel_set(params, i0))),
        )
        return VerificationReport(name, (params.n, params.p, i0), False, witness)
    for i1 in sorted(omega_set(params)):
        same_kernels = maximal_kernel_set(params, i1) == ks0
        if same_kernels != same_fusion(params, i1, i0):
            return VerificationReport(
                name,
                (params.n, params.p, i0),
                False,
                ("mismatch_at", i1, same_kernels, same_fusion(params, i1, i0)),
            )
    return VerificationReport(name, (params.n, params.p, i0), True)


def check_maximality_matches_doubling_fibers(params: DihedralParams) -> VerificationReport:
    """Three claims for a fixed (n, p).

    (a) For every action index in the doubling-map image, the d2-maximal
        set equals the doubling-map fiber over that index.
    (b) n odd: two actions have equal orbit structure iff their unique
        fiber elements have equal kernels.
    (c) n even: two doubling-image actions have equal orbit structure
        iff their fibers have equal kernel sets.
    """
    name = "maximality_matches_doubling_fibers"
    n = params.n
    om = sorted(omega_set(params))
    for phi in om:
        target = RepLabel.irr2(phi)
        fiber = frozenset(i for i in params.irr2_indices() if t_map(params, i) == target)
        maximal = cohomologically_maximal_set(params, phi)
        if maximal != fiber:
            return VerificationReport(
                name, (n, params.p), False, ("fiber_mismatch", phi, sorted(maximal), sorted(fiber))
            )
    if n % 2 == 1:
        universe = list(params.irr2_indices())
        for a_pos, phi1 in enumerate(universe):
            for phi2 in universe[a_pos + 1 :]:
                (k1,) = t_preimage(params, phi1)
                (k2,) = t_preimage(params, phi2)
                kernels_equal = _kernel_subgroup(params, k1) == _kernel_subgroup(params, k2)
                if kernels_equal != same_fusion(params, phi1, phi2):
                    return VerificationReport(
                        name, (n, params.p), False, ("odd_case", phi1, phi2)
                    )
    else:
        for a_pos, phi1 in enumerate(om):
            for phi2 in om[a_pos + 1 :]:
                ks1 = frozenset(_kernel_subgroup(params, i) for i in t_preimage(params, phi1))
                ks2 = frozenset(_kernel_subgroup(params, i) for i in t_preimage(params, phi2))
                if (ks1 == ks2) != same_fusion(params, phi1, phi2):
                    return VerificationReport(
                        name, (n, params.p), False, ("even_case", phi1, phi2)
                    )
    return VerificationReport(name, (n, params.p), True)


def check_gcd_pair_identity(n: int, i0: int) -> VerificationReport:
    """Arithmetic identity behind fiber kernel sets for even n.

    With k = n/2, d0 = i0/2 and a0 = gcd(d0, k):
    {gcd(d0, n), gcd(k - d0, n)} = {gcd(a0, n), gcd(k - a0, n)},
    gcd(i0, n) = 2 a0, gcd(a0, n) = a0, and gcd(k - a0, n) is a0 or 2 a0.
    """
    name = "gcd_pair_identity"
    if n % 2 != 0 or n < 4:
        raise ValueError("needs even n >= 4")
    if i0 % 2 != 0 or not 1 <= i0 < n / 2:
        raise ValueError(f"index {i0} is not an even index in [1, {n}/2)")
    k = n // 2
    d0 = i0 // 2
    a0 = gcd(d0, k)
    left = {gcd(d0, n), gcd(k - d0, n)}
    right = {gcd(a0, n), gcd(k - a0, n)}
    checks = (
        left == right,
        gcd(i0, n) == 2 * a0,
        gcd(a0, n) == a0,
        gcd(k - a0, n) in (a0, 2 * a0),
    )
    witness = None if all(checks) else ("sets", sorted(left), sorted(right), "a0", a0)
    return VerificationReport(name, (n, i0), all(checks), witness)


def check_center_constraint(params: DihedralParams, i0: int) -> VerificationReport:
    """A non-Zp ring class anywhere forces the center to act trivially."""
    name = "center_constraint"
    nontrivial = [
        j for j in params.irr2_indices() if udr_class(params, i0, j) is not UdrClass.ZP
    ]
    ok = not nontrivial or center_acts_trivially(params, i0)
    witness = None if ok else ("nontrivial_at", nontrivial)
    return VerificationReport(name, (params.n, params.p, i0), ok, witness)


def fusion_determinability(params: DihedralParams) -> VerificationReport:
    """Can the orbit structure be read off the table of ring signatures?

    passed is the determinability flag: True when equal signatures imply
    equal orbit structure across all action indices.  When False the
    witness is the first pair (in index order) with equal signatures but
    different orbit structure.
    """
    sigs = {i: udr_signature(params, i) for i in params.irr2_indices()}
    idxs = sorted(sigs)
    for pos, i1 in enumerate(idxs):
        for i2 in idxs[pos + 1 :]:
            if sigs[i1] == sigs[i2] and not same_fusion(params, i1, i2):
                return VerificationReport(
                    "fusion_determinability", (params.n, params.p), False, (i1, i2)
                )
    return VerificationReport("fusion_determinability", (params.n, params.p), True)


def _is_power_of_two(m: int) -> bool:
    return m >= 1 and m & (m - 1) == 0


def determinability_rule(n: int) -> bool:
    """Closed-form prediction: determinable iff n is odd, a power of two,
    or twice an odd prime."""
    if n % 2 == 1:
        return True
    return _is_power_of_two(n) or (n // 2 % 2 == 1 and is_prime(n // 2))


def check_determinability_rule(n: int, prime_count: int = 2) -> VerificationReport:
    """Computed determinability equals the closed-form rule, for each of
    the prime_count smallest valid primes (so in particular it does not
    depend on the prime)."""
    name = "determinability_rule"
    expected = determinability_rule(n)
    witnesses = []
    ok = True
    for p in find_primes(n, prime_count):
        rep = fusion_determinability(DihedralParams.standard(n, p))
        if rep.passed != expected:
            ok = False
        witnesses.append((p, rep.passed, rep.witness))
    witness = (("expected", expected), tuple(witnesses)) if not ok else (
        None if expected else ("witness_pairs", tuple(witnesses))
    )
    return VerificationReport(name, (n,), ok, witness)
