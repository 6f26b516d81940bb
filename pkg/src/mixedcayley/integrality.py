"""Integrality decision procedures, enumeration and cross-validation.

A mixed Cayley graph is integral exactly when the symmetric part of its
symbol set is a union of atoms and the skew part is a skew-symmetric union
of skew atoms. The structural test below decides this in time polynomial
in the group order, with no spectrum computed; the exact spectral engine
serves as its independent check.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from typing import Callable, Iterator

from .atoms import (
    Decomposition,
    SymbolSet,
    all_atoms,
    all_skew_atoms,
    in_boolean_algebra,
    in_skew_algebra,
    skew_split,
)
from .groups import (
    DEFAULT_DENSE_LIMIT,
    DEFAULT_ENUMERATION_LIMIT,
    Element,
    Group,
    SizeLimitExceeded,
    add,
    elements,
    negate,
    nonzero_elements,
)
from .spectrum import exact_spectrum, is_integral_by_spectrum

__all__ = [
    "IntegralityVerdict",
    "is_integral",
    "oriented_is_integral",
    "is_integral_checked",
    "enumerate_integral_sets",
    "CrossCheckReport",
    "cross_validate",
    "IsomorphismReport",
    "isomorphism_consistency",
]

# Enumeration refuses to materialize more candidate sets than this.
MAX_ENUMERATED_SETS = 2_000_000


@dataclass(frozen=True)
class IntegralityVerdict:
    """Structural verdict with the atom/class witnesses for both parts."""

    verdict: bool
    symmetric_part: Decomposition
    skew_part: Decomposition
    method: str
    disagreement: dict | None = None

    def to_json(self) -> dict:
        return {
            "integral": self.verdict,
            "method": self.method,
            "symmetric_part": self.symmetric_part.to_json(),
            "skew_part": self.skew_part.to_json(),
            "disagreement": self.disagreement,
        }


def is_integral(symbols: SymbolSet) -> IntegralityVerdict:
    """Structural integrality test on the symbol set alone."""
    group = symbols.group
    sym, skew = skew_split(symbols)
    sym_status = in_boolean_algebra(group, sym.elements)
    skew_status = in_skew_algebra(group, skew.elements)
    return IntegralityVerdict(
        verdict=sym_status.member and skew_status.member,
        symmetric_part=sym_status,
        skew_part=skew_status,
        method="structural",
    )


def oriented_is_integral(symbols: SymbolSet) -> IntegralityVerdict:
    """Integrality test for an oriented Cayley graph (skew-symmetric symbol set).

    When the group exponent is not divisible by 4 this admits only the empty
    set.
    """
    if not symbols.is_skew_symmetric():
        raise ValueError("oriented Cayley graph requires a skew-symmetric symbol set")
    group = symbols.group
    skew_status = in_skew_algebra(group, symbols.elements)
    return IntegralityVerdict(
        verdict=skew_status.member,
        symmetric_part=in_boolean_algebra(group, ()),
        skew_part=skew_status,
        method="structural",
    )


def is_integral_checked(
    symbols: SymbolSet, max_order: int = DEFAULT_DENSE_LIMIT
) -> IntegralityVerdict:
    """Structural verdict cross-checked against the exact spectral engine."""
    structural = is_integral(symbols)
    spectral = is_integral_by_spectrum(symbols.group, symbols, max_order)
    disagreement = None
    if structural.verdict != spectral.integral:
        disagreement = {
            "structural": structural.verdict,
            "spectral": spectral.integral,
            "witness_char": list(spectral.witness_char) if spectral.witness_char else None,
        }
    return IntegralityVerdict(
        verdict=structural.verdict,
        symmetric_part=structural.symmetric_part,
        skew_part=structural.skew_part,
        method="both",
        disagreement=disagreement,
    )


def enumerate_integral_sets(
    group: Group, limit: int = DEFAULT_ENUMERATION_LIMIT
) -> Iterator[SymbolSet]:
    """All symbol sets with an integral mixed Cayley graph, generated directly.

    Candidates are built as a union of atoms (the symmetric part) together
    with a disjoint skew-symmetric union of skew atoms (the skew part),
    rather than by filtering all subsets. Emitted by set size, then
    lexicographically; no duplicates.
    """
    if group.order > limit:
        raise SizeLimitExceeded(
            f"group order {group.order} exceeds the enumeration limit {limit}"
        )
    ident = group.identity
    atoms = [a for a in all_atoms(group) if ident not in a]
    skew_classes = list(all_skew_atoms(group))
    # Pair each skew atom with its negation; a skew-symmetric union picks at
    # most one atom from each pair.
    paired: list[tuple[frozenset[Element], frozenset[Element]]] = []
    seen: set[frozenset[Element]] = set()
    for c in skew_classes:
        if c in seen:
            continue
        neg = frozenset(negate(group, x) for x in c)
        seen.add(c)
        seen.add(neg)
        paired.append((c, neg))

    total_candidates = (2 ** len(atoms)) * (3 ** len(paired))
    if total_candidates > MAX_ENUMERATED_SETS:
        raise SizeLimitExceeded(
            f"enumeration would examine {total_candidates} candidate sets"
        )

    results: list[frozenset[Element]] = []
    for mask in range(2 ** len(atoms)):
        sym: frozenset[Element] = frozenset()
        chosen_atoms = []
        for j, a in enumerate(atoms):
            if mask >> j & 1:
                chosen_atoms.append(a)
                sym |= a
        for picks in itertools.product((None, 0, 1), repeat=len(paired)):
            skew: frozenset[Element] = frozenset()
            ok = True
            for pick, (c, neg) in zip(picks, paired):
                if pick is None:
                    continue
                chosen = c if pick == 0 else neg
                if chosen & sym:
                    ok = False
                    break
                skew |= chosen
            if not ok:
                continue
            combined = SymbolSet(group, sym | skew)
            assert combined.skew_part == skew, "derived split failed to reproduce the parts"
            results.append(combined.elements)
    results.sort(key=lambda s: (len(s), tuple(sorted(s))))
    for s in results:
        yield SymbolSet(group, s)


@dataclass(frozen=True)
class CrossCheckReport:
    """Comparison of the structural and exact spectral integrality engines."""

    group: Group
    mode: str
    seed: int | None
    total: int
    agreements: int
    integral_count: int
    disagreements: tuple[dict, ...]

    @property
    def agree(self) -> bool:
        return self.agreements == self.total

    def to_json(self) -> dict:
        return {
            "group": str(self.group),
            "mode": self.mode,
            "seed": self.seed,
            "total": self.total,
            "agreements": self.agreements,
            "integral": self.integral_count,
            "disagreements": list(self.disagreements),
        }


def cross_validate(
    group: Group,
    mode: str = "exhaustive",
    budget: int = 500,
    seed: int = 0,
    max_order: int = DEFAULT_DENSE_LIMIT,
) -> CrossCheckReport:
    """Run both integrality engines over sampled symbol sets and compare.

    Exhaustive mode covers all subsets of the nonzero elements and requires
    their number to fit the budget; random mode draws exactly budget sets
    from the given seed. Disagreements are reported, not raised.
    """
    nonzero = nonzero_elements(group)
    if mode == "exhaustive":
        total = 2 ** len(nonzero)
        if total > budget:
            raise ValueError(
                f"exhaustive mode needs 2^{len(nonzero)} = {total} checks, "
                f"over the budget {budget}"
            )
        sets = (
            frozenset(x for j, x in enumerate(nonzero) if mask >> j & 1)
            for mask in range(total)
        )
        used_seed = None
    elif mode == "random":
        rng = random.Random(seed)
        total = budget
        sets = (
            frozenset(x for x in nonzero if rng.random() < 0.5) for _ in range(budget)
        )
        used_seed = seed
    else:
        raise ValueError(f"unknown mode {mode!r}")

    agreements = 0
    integral_count = 0
    disagreements: list[dict] = []
    for raw in sets:
        symbols = SymbolSet(group, raw)
        structural = is_integral(symbols).verdict
        spectral = is_integral_by_spectrum(group, symbols, max_order).integral
        if structural == spectral:
            agreements += 1
        else:
            disagreements.append(
                {
                    "set": [list(x) for x in sorted(raw)],
                    "structural": structural,
                    "spectral": spectral,
                }
            )
        if structural:
            integral_count += 1
    return CrossCheckReport(
        group=group,
        mode=mode,
        seed=used_seed,
        total=total,
        agreements=agreements,
        integral_count=integral_count,
        disagreements=tuple(disagreements),
    )


@dataclass(frozen=True)
class IsomorphismReport:
    group_a: Group
    group_b: Group
    samples: int
    agreements: int
    mismatches: tuple[dict, ...]

    @property
    def consistent(self) -> bool:
        return self.agreements == self.samples

    def to_json(self) -> dict:
        return {
            "group_a": str(self.group_a),
            "group_b": str(self.group_b),
            "samples": self.samples,
            "agreements": self.agreements,
            "mismatches": list(self.mismatches),
        }


def _builtin_isomorphism(ga: Group, gb: Group) -> Callable[[Element], Element] | None:
    if ga.moduli == gb.moduli:
        return lambda x: x
    if len(ga.moduli) == 1 and len(gb.moduli) == 2:
        n = ga.moduli[0]
        p, q = gb.moduli
        if p * q == n and math.gcd(p, q) == 1:
            return lambda x: (x[0] % p, x[0] % q)
    if len(ga.moduli) == 2 and len(gb.moduli) == 1:
        inner = _builtin_isomorphism(gb, ga)
        if inner is not None:
            p, q = ga.moduli
            n = gb.moduli[0]
            table = {inner((v,)): (v,) for v in range(n)}
            return lambda x: table[x]
    return None


def isomorphism_consistency(
    group_a: Group,
    group_b: Group,
    iso: Callable[[Element], Element] | None = None,
    samples: int = 100,
    seed: int = 0,
    max_order: int = DEFAULT_DENSE_LIMIT,
) -> IsomorphismReport:
    """Check that verdicts and spectra agree across an isomorphism.

    A coordinate map is built in for a cyclic group against two coprime
    factors (in either order); anything else requires an explicit iso. The
    map is verified to be a homomorphism and a bijection before sampling.
    """
    if group_a.order != group_b.order:
        raise ValueError("groups have different orders")
    if iso is None:
        iso = _builtin_isomorphism(group_a, group_b)
        if iso is None:
            raise ValueError(
                "no built-in isomorphism for these presentations; supply iso="
            )
    images = [iso(x) for x in elements(group_a)]
    if len(set(images)) != group_a.order:
        raise ValueError("iso is not a bijection")
    rng = random.Random(seed)
    elems_a = elements(group_a)
    for _ in range(min(200, group_a.order**2)):
        x = rng.choice(elems_a)
        y = rng.choice(elems_a)
        if iso(add(group_a, x, y)) != add(group_b, iso(x), iso(y)):
            raise ValueError(f"iso is not a homomorphism at {x}, {y}")

    nonzero = nonzero_elements(group_a)
    agreements = 0
    mismatches: list[dict] = []
    for _ in range(samples):
        raw = frozenset(x for x in nonzero if rng.random() < 0.5)
        sa = SymbolSet(group_a, raw)
        sb = SymbolSet(group_b, frozenset(iso(x) for x in raw))
        verdict_a = is_integral(sa).verdict
        verdict_b = is_integral(sb).verdict
        spec_a = sorted(e.value.coeffs for e in exact_spectrum(group_a, sa, max_order).entries)
        spec_b = sorted(e.value.coeffs for e in exact_spectrum(group_b, sb, max_order).entries)
        if verdict_a == verdict_b and spec_a == spec_b:
            agreements += 1
        else:
            mismatches.append(
                {
                    "set": [list(x) for x in sorted(raw)],
                    "verdict_a": verdict_a,
                    "verdict_b": verdict_b,
                    "spectra_equal": spec_a == spec_b,
                }
            )
    return IsomorphismReport(
        group_a=group_a,
        group_b=group_b,
        samples=samples,
        agreements=agreements,
        mismatches=tuple(mismatches),
    )
