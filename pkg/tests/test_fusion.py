from __future__ import annotations

import pytest

from udrfusion.dihedral import DihedralParams, GroupElement, group_elements
from udrfusion.ffield import LimitExceeded, primitive_root_of_unity
from udrfusion.fusion import (
    FusionNumbers,
    act,
    fusion_numbers,
    fusion_orbits_bruteforce,
    fusion_orbits_closed_form,
    same_fusion,
)


def test_act_frozen():
    params = DihedralParams.standard(5)  # p = 11, w = 3
    r = GroupElement.rotation(5)
    s = GroupElement.reflection(5)
    assert act(params, 1, r, (1, 0)) == (3, 0)
    assert act(params, 1, s, (1, 2)) == (2, 1)
    assert act(params, 1, r * r, (1, 1)) == (9, 5)
    assert act(params, 2, r, (1, 1)) == (9, 5)


def test_act_is_left_action():
    params = DihedralParams.standard(4)
    pts = [(x, y) for x in range(params.p) for y in range(params.p)]
    for g in group_elements(4):
        for h in group_elements(4):
            for v in pts:
                assert act(params, 1, g * h, v) == act(params, 1, g, act(params, 1, h, v))


def test_bruteforce_census_frozen():
    orbit_set = fusion_orbits_bruteforce(DihedralParams.standard(3), 1)
    assert orbit_set.size_census() == {1: 1, 3: 6, 6: 5}
    assert len(orbit_set.orbits) == 12
    zero = orbit_set.orbit_of((0, 0))
    assert zero.size == 1 and zero.stabilizer_order == 6


def test_bruteforce_census_n5():
    params = DihedralParams.standard(5)
    for i0 in (1, 2):
        orbit_set = fusion_orbits_bruteforce(params, i0)
        assert orbit_set.size_census() == {1: 1, 5: 10, 10: 7}


def test_bruteforce_guard():
    with pytest.raises(LimitExceeded):
        fusion_orbits_bruteforce(DihedralParams.standard(3, 1009), 1)


def test_closed_form_orbit_frozen():
    # n = 6, p = 7, i0 = 2: k = 3, orbit of (1, 2) stays in the ratio locus
    params = DihedralParams.standard(6)
    orbit_set = fusion_orbits_closed_form(params, 2)
    orb = orbit_set.orbit_of((1, 2))
    assert orb.elements == frozenset({(1, 2), (2, 1), (4, 4)})
    assert orb.representative == (1, 2)
    assert orb.size == 3
    assert orb.stabilizer_order == 4
    assert orb.stabilizer_gens == (GroupElement.rotation(6, 3), GroupElement.reflection(6, 1))


def test_closed_form_index_validation():
    with pytest.raises(ValueError):
        fusion_orbits_closed_form(DihedralParams.standard(5), 0)
    with pytest.raises(ValueError):
        fusion_orbits_closed_form(DihedralParams.standard(5), 3)


def test_closed_form_matches_bruteforce():
    for n in range(3, 9):
        params = DihedralParams.standard(n)
        for i0 in params.irr2_indices():
            brute = fusion_orbits_bruteforce(params, i0)
            closed = fusion_orbits_closed_form(params, i0)
            assert brute.partition() == closed.partition()
            for a, b in zip(brute.orbits, closed.orbits):
                assert a.representative == b.representative
                assert a.stabilizer_order == b.stabilizer_order


def test_stabilizer_generators_fix_representative():
    for n in (5, 6, 12):
        params = DihedralParams.standard(n)
        for i0 in params.irr2_indices():
            for orb in fusion_orbits_closed_form(params, i0).orbits:
                for g in orb.stabilizer_gens:
                    assert act(params, i0, g, orb.representative) == orb.representative


def test_stabilizer_generators_generate_stabilizer():
    for n in (5, 6, 8):
        params = DihedralParams.standard(n)
        for i0 in params.irr2_indices():
            for orb in fusion_orbits_closed_form(params, i0).orbits:
                closure = {GroupElement.identity(n)}
                while True:
                    grown = closure | {
                        a * b for a in closure for b in orb.stabilizer_gens
                    }
                    if grown == closure:
                        break
                    closure = grown
                assert len(closure) == orb.stabilizer_order


def test_orbit_stabilizer_identity():
    for n in (3, 6, 12):
        params = DihedralParams.standard(n)
        for i0 in params.irr2_indices():
            for orb in fusion_orbits_bruteforce(params, i0).orbits:
                assert orb.size * orb.stabilizer_order == 2 * n


def test_census_closed_form_frozen():
    assert FusionNumbers.dihedral_closed_form(11, 5).counts == {1: 1, 5: 10, 10: 7}
    assert FusionNumbers.dihedral_closed_form(7, 3).counts == {1: 1, 3: 6, 6: 5}
    assert FusionNumbers.dihedral_closed_form(7, 6).counts == {1: 1, 6: 6, 12: 1}
    assert FusionNumbers.dihedral_closed_form(13, 12).counts == {1: 1, 12: 12, 24: 1}
    # k = p + 1 kills the size-2k term entirely
    assert FusionNumbers.dihedral_closed_form(5, 6).counts == {1: 1, 6: 4}


def test_census_closed_form_total():
    for p, k in ((7, 3), (7, 6), (11, 5), (13, 4), (13, 12)):
        assert FusionNumbers.dihedral_closed_form(p, k).total_points() == p * p


def test_census_closed_form_rejects_nonintegral():
    # 7 is not 1 mod 5, and the formula notices
    with pytest.raises(ValueError):
        FusionNumbers.dihedral_closed_form(7, 5)


def test_census_matches_formula():
    from math import gcd

    for n in range(3, 11):
        params = DihedralParams.standard(n)
        for i0 in params.irr2_indices():
            census = fusion_numbers(fusion_orbits_bruteforce(params, i0))
            k = n // gcd(i0, n)
            assert census == FusionNumbers.dihedral_closed_form(params.p, k)
            assert census.total_points() == params.p ** 2


def test_same_fusion_frozen():
    p12 = DihedralParams.standard(12)
    assert same_fusion(p12, 1, 5)
    assert not same_fusion(p12, 1, 2)
    assert not same_fusion(p12, 2, 4)
    assert same_fusion(p12, 3, 3)
    assert not same_fusion(DihedralParams.standard(6), 1, 2)
    with pytest.raises(ValueError):
        same_fusion(DihedralParams.standard(5), 0, 1)


def test_partition_independent_of_root_choice():
    n = 5
    p = 11
    partitions = []
    censuses = []
    for w in range(2, p):
        try:
            params = DihedralParams(n, p, w)
        except ValueError:
            continue
        partitions.append(fusion_orbits_closed_form(params, 1).partition())
        censuses.append(fusion_numbers(fusion_orbits_bruteforce(params, 1)))
    assert len(partitions) == 4  # four primitive fifth roots mod 11
    assert all(part == partitions[0] for part in partitions)
    assert all(c == censuses[0] for c in censuses)
    assert primitive_root_of_unity(p, n) == 3
