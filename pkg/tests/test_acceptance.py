"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines; the test names carry the criterion numbers as well.
"""

import random
import time

from mixedcayley.atoms import SymbolSet, atom, skew_atom, symbol_set
from mixedcayley.cyclotomic import (
    CycInt,
    GaussianPoly,
    ambient_order,
    character_exponent,
    cyclotomic_gaussian_factors,
    cyclotomic_polynomial,
    sum_of_roots,
    totient,
)
from mixedcayley.groups import (
    elements,
    isomorphism_types,
    negate,
    parse_group_spec,
)
from mixedcayley.integrality import enumerate_integral_sets, is_integral, isomorphism_consistency
from mixedcayley.spectrum import is_integral_by_spectrum, spectral_oracle_deviation
from checks import (
    check_class_relations,
    check_class_sums,
    check_decompositions,
    check_power_residue_lemma,
)
from oracles import all_symbol_subsets, skew_symmetric_subsets

# Criterion 2 groups: isomorphism types spanning orders 9..32 (well over the
# required twelve), mixing cyclic and non-cyclic presentations and exponents
# divisible and not divisible by 4.
C2_GROUP_TEXTS = [
    "Z9", "Z3xZ3", "Z10", "Z11", "Z12", "Z2xZ2xZ3", "Z13", "Z14", "Z15",
    "Z16", "Z4xZ4", "Z2xZ2xZ2xZ2", "Z18", "Z20", "Z24", "Z25", "Z27", "Z32",
]
C2_SAMPLES = 500


def _report(criterion: int, detail: str) -> None:
    print(f"\nACCEPTANCE criterion {criterion}: PASS - {detail}")


def _criterion1_instances():
    for group in isomorphism_types(8):
        for raw in all_symbol_subsets(group):
            yield group, SymbolSet(group, raw)


def _criterion2_instances():
    for text in C2_GROUP_TEXTS:
        group = parse_group_spec(text)
        rng = random.Random(f"c2:{text}")
        nonzero = elements(group)[1:]
        for _ in range(C2_SAMPLES):
            raw = frozenset(x for x in nonzero if rng.random() < 0.5)
            yield group, SymbolSet(group, raw)


def _criterion3_instances():
    for group in isomorphism_types(16):
        if group.exponent % 4 == 0:
            continue
        for raw in skew_symmetric_subsets(group):
            yield group, SymbolSet(group, raw)


def test_criterion_1_main_equivalence_exhaustive_order_8():
    start = time.monotonic()
    groups = isomorphism_types(8)
    assert len(groups) == 10
    total = 0
    integral = 0
    for group, symbols in _criterion1_instances():
        structural = is_integral(symbols).verdict
        spectral = is_integral_by_spectrum(group, symbols).integral
        assert structural == spectral, (group, sorted(symbols.elements))
        total += 1
        integral += structural
    elapsed = time.monotonic() - start
    assert elapsed < 120.0, f"criterion 1 took {elapsed:.1f}s, limit 120s"
    _report(1, f"{total} symbol sets over {len(groups)} groups, "
               f"{integral} integral, 0 disagreements, {elapsed:.1f}s")


def test_criterion_2_randomized_equivalence_orders_9_to_32():
    start = time.monotonic()
    assert len(C2_GROUP_TEXTS) >= 12
    orders = {parse_group_spec(t).order for t in C2_GROUP_TEXTS}
    assert min(orders) == 9 and max(orders) == 32
    total = 0
    for group, symbols in _criterion2_instances():
        structural = is_integral(symbols).verdict
        spectral = is_integral_by_spectrum(group, symbols).integral
        assert structural == spectral, (group, sorted(symbols.elements))
        total += 1
    elapsed = time.monotonic() - start
    assert total == len(C2_GROUP_TEXTS) * C2_SAMPLES
    assert elapsed < 300.0, f"criterion 2 took {elapsed:.1f}s, limit 300s"
    _report(2, f"{total} random sets over {len(C2_GROUP_TEXTS)} groups, "
               f"100% agreement, {elapsed:.1f}s")


def test_criterion_3_oriented_nonexistence():
    start = time.monotonic()
    groups = 0
    total = 0
    for group in isomorphism_types(16):
        if group.exponent % 4 == 0:
            continue
        groups += 1
    for group, symbols in _criterion3_instances():
        integral = is_integral_by_spectrum(group, symbols).integral
        assert integral == (not symbols.elements), (group, sorted(symbols.elements))
        total += 1
    elapsed = time.monotonic() - start
    _report(3, f"{total} skew-symmetric sets over {groups} groups with exponent "
               f"not divisible by 4, only the empty set integral, {elapsed:.1f}s")


def test_criterion_4_oracle_agreement_on_all_instances():
    start = time.monotonic()
    worst = 0.0
    total = 0
    for instances in (_criterion1_instances(), _criterion2_instances(),
                      _criterion3_instances()):
        for group, symbols in instances:
            dev = spectral_oracle_deviation(group, symbols)
            assert dev < 1e-9, (group, sorted(symbols.elements), dev)
            worst = max(worst, dev)
            total += 1
    elapsed = time.monotonic() - start
    _report(4, f"{total} instances, exact vs Jacobi max deviation "
               f"{worst:.2e} < 1e-9, {elapsed:.1f}s")


def test_criterion_5_lemma_suite_order_48():
    start = time.monotonic()
    groups = isomorphism_types(48)
    checked = 0
    for group in groups:
        check_power_residue_lemma(group)
        check_class_relations(group)
        check_decompositions(group)
        check_class_sums(group)
        checked += 1
    elapsed = time.monotonic() - start
    _report(5, f"residue-set lemma, class relations, odd-divisor decompositions "
               f"and class-sum integrality over {checked} groups, {elapsed:.1f}s")


def test_criterion_6_cyclotomic_identities():
    start = time.monotonic()

    def poly_mul(a, b):
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return out

    for n in range(1, 65):
        prod = [1]
        for d in range(1, n + 1):
            if n % d == 0:
                prod = poly_mul(prod, list(cyclotomic_polynomial(d)))
        assert prod == [-1] + [0] * (n - 1) + [1]

    for n in (4, 8, 12, 16, 20, 24):
        f1, f3 = cyclotomic_gaussian_factors(n)
        assert f1.degree == totient(n) // 2 == f3.degree
        assert f1.is_monic() and f3.is_monic()
        assert f1 * f3 == GaussianPoly.from_integer_coeffs(cyclotomic_polynomial(n))

    groups = isomorphism_types(16)
    for group in groups:
        order = ambient_order(group)
        n = group.order
        for a in elements(group):
            for b in elements(group):
                counts: dict[int, int] = {}
                for x in elements(group):
                    e = (character_exponent(group, a, x)
                         + character_exponent(group, b, negate(group, x))) % order
                    counts[e] = counts.get(e, 0) + 1
                expected = CycInt.integer(order, n if a == b else 0)
                assert sum_of_roots(order, counts) == expected
    elapsed = time.monotonic() - start
    _report(6, f"divisor products to n=64, Gaussian factor products for six "
               f"orders, orthogonality over {len(groups)} groups, {elapsed:.1f}s")


def test_criterion_7_mod12_example():
    z12 = parse_group_spec("Z12")
    five, eleven = (5,), (11,)
    assert atom(z12, five) == atom(z12, eleven) == {(1,), (5,), (7,), (11,)}
    assert skew_atom(z12, five) == {(1,), (5,)}
    assert skew_atom(z12, eleven) == {(7,), (11,)}
    assert not skew_atom(z12, five) & skew_atom(z12, eleven)
    _report(7, "5 and 11 share the atom {1,5,7,11} of Z12 but have disjoint "
               "skew atoms {1,5} and {7,11}")


def test_criterion_8_enumeration_counts():
    z4 = parse_group_spec("Z4")
    z5 = parse_group_spec("Z5")
    for group, expected in ((z4, 8), (z5, 2)):
        generated = {s.elements for s in enumerate_integral_sets(group)}
        filtered = {
            raw for raw in all_symbol_subsets(group)
            if is_integral_by_spectrum(group, SymbolSet(group, raw)).integral
        }
        assert generated == filtered
        assert len(generated) == expected
    _report(8, "enumerate yields 8 sets for Z4 and 2 for Z5, equal to the "
               "spectral filter")


def test_criterion_9_isomorphism_consistency():
    report = isomorphism_consistency(
        parse_group_spec("Z12"), parse_group_spec("Z4xZ3"), samples=100, seed=0
    )
    assert report.samples == 100
    assert report.consistent, report.mismatches
    _report(9, "Z12 and Z4xZ3 agree on verdicts and exact spectrum multisets "
               "for 100 transported random sets")
