import itertools
import random

import pytest

from mixedcayley.atoms import SymbolSet, symbol_set
from mixedcayley.groups import (
    SizeLimitExceeded,
    isomorphism_types,
    parse_group_spec,
)
from mixedcayley.integrality import (
    cross_validate,
    enumerate_integral_sets,
    is_integral,
    is_integral_checked,
    isomorphism_consistency,
    oriented_is_integral,
)
from mixedcayley.spectrum import is_integral_by_spectrum
from oracles import all_symbol_subsets, random_symbol_elements, skew_symmetric_subsets

Z2 = parse_group_spec("Z2")
Z4 = parse_group_spec("Z4")
Z5 = parse_group_spec("Z5")
Z6 = parse_group_spec("Z6")
Z8 = parse_group_spec("Z8")
Z12 = parse_group_spec("Z12")


def _set(group, items):
    return symbol_set(group, [(x,) if isinstance(x, int) else x for x in items])


def test_is_integral_examples():
    v = is_integral(_set(Z4, [1, 2]))
    assert v.verdict
    assert [rep for rep, _ in v.symmetric_part.atoms] == [(2,)]
    assert [rep for rep, _ in v.skew_part.classes] == [(1,)]
    assert is_integral_by_spectrum(Z4, _set(Z4, [1, 2])).integral

    v = is_integral(_set(Z5, [1]))
    assert not v.verdict
    assert v.skew_part.residue == ((1,),)

    v = is_integral(_set(Z12, [1, 3, 5, 9]))
    assert v.verdict
    assert [rep for rep, _ in v.symmetric_part.atoms] == [(3,)]
    assert [rep for rep, _ in v.skew_part.classes] == [(1,)]
    assert is_integral_by_spectrum(Z12, _set(Z12, [1, 3, 5, 9])).integral


def test_oriented_examples():
    assert oriented_is_integral(_set(Z4, [3])).verdict
    assert oriented_is_integral(_set(Z8, [1, 5])).verdict
    assert not oriented_is_integral(_set(Z6, [1])).verdict
    with pytest.raises(ValueError):
        oriented_is_integral(_set(Z4, [1, 3]))


def test_oriented_spectral_crosschecks():
    from mixedcayley.spectrum import numeric_spectrum, hermitian_matrix
    import numpy as np

    vals = numeric_spectrum(hermitian_matrix(Z4, _set(Z4, [3])))
    assert np.allclose(vals, [-2, 0, 0, 2], atol=1e-9)
    assert is_integral_by_spectrum(Z8, _set(Z8, [1, 5])).integral
    assert not is_integral_by_spectrum(Z6, _set(Z6, [1])).integral


def test_is_integral_checked_agreement():
    rng = random.Random(21)
    for g in [Z4, Z5, Z12, parse_group_spec("Z2xZ4")]:
        for _ in range(15):
            s = SymbolSet(g, random_symbol_elements(g, rng))
            v = is_integral_checked(s)
            assert v.method == "both"
            assert v.disagreement is None


def test_enumerate_z4():
    sets = [s.elements for s in enumerate_integral_sets(Z4)]
    expected = [
        frozenset(t)
        for r in range(4)
        for t in itertools.combinations([(1,), (2,), (3,)], r)
    ]
    assert sorted(sets, key=lambda s: (len(s), tuple(sorted(s)))) == sets
    assert set(sets) == set(expected)
    assert len(sets) == 8


def test_enumerate_z5_z2():
    sets = [s.elements for s in enumerate_integral_sets(Z5)]
    assert sets == [frozenset(), frozenset({(1,), (2,), (3,), (4,)})]
    sets = [s.elements for s in enumerate_integral_sets(Z2)]
    assert sets == [frozenset(), frozenset({(1,)})]


def test_enumerate_matches_spectral_filter_order_8():
    for g in isomorphism_types(8):
        generated = {s.elements for s in enumerate_integral_sets(g)}
        filtered = {
            raw
            for raw in all_symbol_subsets(g)
            if is_integral_by_spectrum(g, SymbolSet(g, raw)).integral
        }
        assert generated == filtered


def test_enumerated_sets_are_spectrally_integral_sample():
    for g in [Z12, parse_group_spec("Z2xZ8")]:
        count = 0
        for s in enumerate_integral_sets(g):
            assert is_integral_by_spectrum(g, s).integral
            count += 1
            if count >= 100:
                break


def test_enumerate_no_duplicates_and_guardrail():
    seen = set()
    for s in enumerate_integral_sets(Z12):
        assert s.elements not in seen
        seen.add(s.elements)
    with pytest.raises(SizeLimitExceeded):
        list(enumerate_integral_sets(parse_group_spec("Z128")))
    with pytest.raises(SizeLimitExceeded):
        # 63 singleton atoms: candidate count overflows the output guardrail
        list(enumerate_integral_sets(parse_group_spec("Z2xZ2xZ2xZ2xZ2xZ2")))


def test_cross_validate_exhaustive():
    report = cross_validate(Z4, mode="exhaustive")
    assert (report.total, report.agreements, report.integral_count) == (8, 8, 8)
    assert report.agree
    report = cross_validate(Z5, mode="exhaustive")
    assert (report.total, report.agreements, report.integral_count) == (16, 16, 2)


def test_cross_validate_budget_and_modes():
    with pytest.raises(ValueError):
        cross_validate(parse_group_spec("Z16"), mode="exhaustive", budget=500)
    with pytest.raises(ValueError):
        cross_validate(Z4, mode="nonsense")
    r1 = cross_validate(Z12, mode="random", budget=40, seed=5)
    r2 = cross_validate(Z12, mode="random", budget=40, seed=5)
    assert r1 == r2
    assert r1.total == 40 and r1.agree


def test_oriented_nonexistence_small():
    for g in [Z5, Z6, parse_group_spec("Z3xZ3")]:
        for raw in skew_symmetric_subsets(g):
            integral = is_integral_by_spectrum(g, SymbolSet(g, raw)).integral
            assert integral == (not raw)


def test_isomorphism_consistency_crt():
    report = isomorphism_consistency(Z12, parse_group_spec("Z4xZ3"), samples=30)
    assert report.consistent
    report = isomorphism_consistency(
        parse_group_spec("Z4xZ3"), Z12, samples=10, seed=3
    )
    assert report.consistent


def test_isomorphism_consistency_identity():
    report = isomorphism_consistency(Z12, Z12, samples=5)
    assert report.consistent


def test_isomorphism_consistency_errors():
    with pytest.raises(ValueError):
        isomorphism_consistency(Z12, parse_group_spec("Z2xZ6"))  # not coprime
    with pytest.raises(ValueError):
        isomorphism_consistency(Z4, Z5)
    with pytest.raises(ValueError):
        # valid bijection that is not a homomorphism
        swap = {(0,): (0,), (1,): (2,), (2,): (1,), (3,): (3,)}
        isomorphism_consistency(Z4, Z4, iso=lambda x: swap[x], samples=2)


def test_verdict_json_shape():
    payload = is_integral(_set(Z4, [1, 2])).to_json()
    assert payload["integral"] is True
    assert payload["method"] == "structural"
    assert payload["symmetric_part"]["member"] is True
    assert payload["skew_part"]["classes"][0]["representative"] == [1]
