from __future__ import annotations

import pytest

from nearrings import (
    TheoremViolationError,
    distributive_elements,
    generalized_centre,
    is_ideal,
    make_field,
    nearring_from_nearfield,
    orbit_nearfield,
    semidirect_decomposition,
    verify_lemma_suite,
    zero_multipliers,
    zp2_family,
)
from nearrings.analysis import FAIL, NA, PASS, LEMMA_KEYS


def oracle_distributive(nr):
    out = []
    for d in range(nr.order):
        if all(nr.mul[d, nr.add[a, b]] == nr.add[nr.mul[d, a], nr.mul[d, b]]
               for a in range(nr.order) for b in range(nr.order)):
            out.append(d)
    return tuple(out)


def oracle_gc(nr, dist):
    return tuple(c for c in range(nr.order)
                 if all(nr.mul[c, d] == nr.mul[d, c] for d in dist))


def test_distributive_c9(c9_example):
    assert distributive_elements(c9_example) == (0, 3, 6)
    assert oracle_distributive(c9_example) == (0, 3, 6)


def test_distributive_order15(order15_example):
    assert distributive_elements(order15_example) == (0, 5, 10)
    assert oracle_distributive(order15_example) == (0, 5, 10)


def test_distributive_field():
    nr = nearring_from_nearfield(make_field(7))
    assert distributive_elements(nr) == tuple(range(7))


def test_distributive_matches_oracle_everywhere(planar_ring9, order15_example, c9_example):
    for nr in (planar_ring9, order15_example, c9_example):
        assert distributive_elements(nr) == oracle_distributive(nr)


def test_zero_multipliers(c9_example, order15_example):
    assert zero_multipliers(c9_example) == (0, 3, 6)
    assert zero_multipliers(order15_example) == (0, 3, 6, 9, 12)
    assert zero_multipliers(nearring_from_nearfield(make_field(5))) == (0,)


def test_is_ideal_classification(c9_example, order15_example):
    assert is_ideal(c9_example, (0, 3, 6)).status == "two-sided"
    assert is_ideal(c9_example, (0, 1)).status == "not-subgroup"
    assert is_ideal(order15_example, (0, 3, 6, 9, 12)).status == "two-sided"


def test_is_ideal_oracle(order15_example):
    nr = order15_example
    S = set(zero_multipliers(nr))
    # right: i*n in S; left: n*m - n*(m+i) in S -- by direct scan
    for i in S:
        for n in range(nr.order):
            assert int(nr.mul[i, n]) in S
    for n in range(nr.order):
        for m in range(nr.order):
            for i in S:
                v = nr.add[nr.mul[n, m], nr.neg[nr.mul[n, nr.add[m, i]]]]
                assert int(v) in S


def test_generalized_centre_cases(c9_example, order15_example, planar_ring9):
    gc9 = generalized_centre(c9_example)
    assert gc9.members == (0, 3, 6) and gc9.case_tag == 1
    gc15 = generalized_centre(order15_example)
    assert gc15.members == (0, 5, 10) and gc15.case_tag == 3
    assert gc15.bounds is not None
    lower, upper = gc15.bounds
    assert set(lower) <= set(gc15.members) <= set(upper)
    assert gc15.members == upper  # finite abelian: the upper bound is attained
    # the planar ring is not commutative: D = N meets every orbit, including
    # the zero-multiplier one, so the centre collapses
    ring = generalized_centre(planar_ring9)
    assert ring.case_tag == 2 and ring.members == (0,)


def test_generalized_centre_field_case():
    nr = nearring_from_nearfield(make_field(5))
    gc = generalized_centre(nr)
    assert gc.members == tuple(range(5))
    assert gc.case_tag == 3  # D = N meets the single free orbit


def test_generalized_centre_trivial_distributive_case():
    # C7 with Phi of order 3: D is trivial, so GC = N (case 4)
    from nearrings import AutomorphismGroup, FerreroPair, RepChoice, catalog_group, construct

    g = catalog_group(7, "C7")
    phi = AutomorphismGroup.from_generators(g, [tuple(2 * x % 7 for x in range(7))])
    nr = construct(FerreroPair(g, phi), RepChoice((1, 3), ()))
    assert distributive_elements(nr) == (0,)
    gc = generalized_centre(nr)
    assert gc.case_tag == 4 and gc.members == tuple(range(7))


def test_gc_matches_commutation_oracle(c9_example, order15_example):
    for nr in (c9_example, order15_example):
        dist = distributive_elements(nr)
        assert generalized_centre(nr).members == oracle_gc(nr, dist)


def test_semidirect_order15(order15_example):
    report = semidirect_decomposition(order15_example)
    assert report.found
    split = report.split
    assert split.kernel == (0, 3, 6, 9, 12)
    assert split.field_elements == (0, 5, 10)
    assert split.field.order == 3 and split.field.is_field()
    # decomposition is an additive bijection
    assert len(set(split.components)) == order15_example.order
    for n, (k, f) in enumerate(split.components):
        assert int(order15_example.add[k, f]) == n


def test_semidirect_absent_for_c9(c9_example):
    report = semidirect_decomposition(c9_example)
    assert not report.found
    assert "zero multiplier" in report.reason


def test_semidirect_nearfield_trivial_kernel():
    nr = nearring_from_nearfield(make_field(5))
    report = semidirect_decomposition(nr)
    assert report.found
    assert report.split.kernel == (0,)
    assert report.split.field_elements == tuple(range(5))


def test_orbit_nearfield_restricted(order15_example):
    fld = orbit_nearfield(order15_example, 5)
    assert fld.order == 3
    assert fld.is_field()


def test_orbit_nearfield_induced_on_zero_multipliers(c9_example):
    # the orbit {3,6} consists of zero multipliers; the induced product
    # d.phi1 o d.phi2 = d.(phi1 phi2) still carries a planar nearfield
    fld = orbit_nearfield(c9_example, 3)
    assert fld.order == 3
    assert fld.is_field()


def test_orbit_nearfield_induced_on_zp2():
    nr = zp2_family(5)
    fld = orbit_nearfield(nr, 5)
    assert fld.order == 5
    assert fld.is_field()


def test_lemma_suite_c9(c9_example):
    rep = verify_lemma_suite(c9_example)
    statuses = {k: v.status for k, v in rep.items.items()}
    assert statuses == {
        LEMMA_KEYS[0]: PASS, LEMMA_KEYS[1]: NA, LEMMA_KEYS[2]: NA,
        LEMMA_KEYS[3]: PASS, LEMMA_KEYS[4]: PASS, LEMMA_KEYS[5]: NA,
        LEMMA_KEYS[6]: PASS,
    }
    assert rep.passed


def test_lemma_suite_order15_all_applicable(order15_example):
    rep = verify_lemma_suite(order15_example)
    assert all(v.status == PASS for v in rep.items.values())


def test_lemma_suite_field():
    rep = verify_lemma_suite(nearring_from_nearfield(make_field(5)))
    assert rep.passed
    assert all(v.status == PASS for v in rep.items.values())


def test_lemma_suite_detects_poisoned_table(c9_example):
    # swap the 3 and 6 columns' contents to break phi_(m+a) = phi_a quietly:
    # instead, corrupt the gc agreement by faking a nearring that is a ring
    # on C9 but mislabels provenance; simplest: break the table and expect
    # the constructor itself to refuse.
    import numpy as np

    from nearrings import PlanarNearring, ValidationError

    bad = np.array(c9_example.mul)
    bad[1, 1] = 5  # violates right distributivity somewhere
    with pytest.raises(ValidationError):
        PlanarNearring(c9_example.add, bad)


def test_zp2_lemma_suite_and_gc():
    for p in (3, 5, 7):
        nr = zp2_family(p)
        assert verify_lemma_suite(nr).passed
        gc = generalized_centre(nr)
        assert gc.case_tag == 1
        assert gc.members == tuple(p * k for k in range(p))
