"""Symbol sets and the subgroup-generated set algebra deciding integrality.

The symmetric side works with atoms: [x] is the set of generators of the
cyclic subgroup generated by x, and a set lies in the Boolean algebra
generated by the subgroups exactly when it is a union of atoms.

The skew side works with skew atoms: for x of order divisible by 4, the
skew atom of x is {k*x : k == 1 (mod 4), gcd(k, ord(x)) = 1}. Each atom of
such an x splits into the two disjoint skew atoms of x and -x. A
skew-symmetric union of skew atoms is exactly what makes the directed part
of a Cayley graph integral.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .groups import (
    Element,
    Group,
    div4_elements,
    element_order,
    elements,
    negate,
    reduce_element,
    scale,
)

__all__ = [
    "SymbolSet",
    "symbol_set",
    "parse_symbol_set",
    "skew_split",
    "atom",
    "skew_atom",
    "all_atoms",
    "all_skew_atoms",
    "unit_residues",
    "unit_residues_mod4",
    "power_residue_sets",
    "odd_divisors_mod4",
    "decompose_power_residues",
    "Decomposition",
    "in_boolean_algebra",
    "in_skew_algebra",
]


@dataclass(frozen=True)
class SymbolSet:
    """A set of nonzero group elements; the connection set of a Cayley graph."""

    group: Group
    elements: frozenset[Element]

    def __post_init__(self) -> None:
        ident = self.group.identity
        for x in self.elements:
            if x == ident:
                raise ValueError("symbol set must not contain the identity")
            if reduce_element(self.group, x) != x:
                raise ValueError(f"element {x} is not reduced for {self.group}")

    @property
    def skew_part(self) -> frozenset[Element]:
        """Elements whose negative is absent; these carry the directed edges."""
        return frozenset(u for u in self.elements if negate(self.group, u) not in self.elements)

    @property
    def symmetric_part(self) -> frozenset[Element]:
        return self.elements - self.skew_part

    def is_symmetric(self) -> bool:
        return not self.skew_part

    def is_skew_symmetric(self) -> bool:
        return all(negate(self.group, u) not in self.elements for u in self.elements)

    def sorted_elements(self) -> tuple[Element, ...]:
        return tuple(sorted(self.elements))

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


def symbol_set(group: Group, items: Iterable) -> SymbolSet:
    """Build a SymbolSet, reducing arbitrary integer coordinates first."""
    reduced = frozenset(reduce_element(group, tuple(x) if not isinstance(x, tuple) else x)
                        for x in items)
    return SymbolSet(group, reduced)


def parse_symbol_set(group: Group, text: str) -> SymbolSet:
    """Parse a symbol set: elements separated by ";", coordinates by ",".

    In a cyclic group commas also separate elements ("1,2" is {1, 2}), since
    single-coordinate elements leave no ambiguity. Empty or blank text means
    the empty set. Negative coordinates are reduced modulo the factor orders,
    so "-1" in Z4 means 3.
    """
    s = text.strip()
    if not s:
        return SymbolSet(group, frozenset())
    items = []
    for chunk in s.split(";"):
        chunk = chunk.strip()
        if not chunk:
            raise ValueError(f"empty element in symbol set text {text!r}")
        try:
            coords = tuple(int(c) for c in chunk.split(","))
        except ValueError as exc:
            raise ValueError(f"cannot parse element {chunk!r}") from exc
        if group.rank == 1:
            items.extend((c,) for c in coords)
        else:
            items.append(coords)
    return symbol_set(group, items)


def skew_split(symbols: SymbolSet) -> tuple[SymbolSet, SymbolSet]:
    """Split into (symmetric part, skew part); disjoint with union the whole set."""
    skew = symbols.skew_part
    return (
        SymbolSet(symbols.group, symbols.elements - skew),
        SymbolSet(symbols.group, skew),
    )


@lru_cache(maxsize=None)
def atom(group: Group, x: Element) -> frozenset[Element]:
    """The set of generators of the cyclic subgroup generated by x.

    atom(identity) is {identity}; atoms partition the group.
    """
    m = element_order(group, x)
    return frozenset(scale(group, k, x) for k in range(1, m + 1) if math.gcd(k, m) == 1)


@lru_cache(maxsize=None)
def skew_atom(group: Group, x: Element) -> frozenset[Element]:
    """{k*x : k == 1 (mod 4), gcd(k, ord(x)) = 1}; requires ord(x) divisible by 4."""
    m = element_order(group, x)
    if m % 4 != 0:
        raise ValueError(f"element {x} has order {m}, not divisible by 4")
    return frozenset(scale(group, k, x) for k in range(1, m + 1)
                     if k % 4 == 1 and math.gcd(k, m) == 1)


@lru_cache(maxsize=None)
def all_atoms(group: Group) -> tuple[frozenset[Element], ...]:
    """Every atom, ordered by smallest member; the first is {identity}."""
    seen: set[Element] = set()
    out = []
    for x in elements(group):
        if x in seen:
            continue
        a = atom(group, x)
        seen.update(a)
        out.append(a)
    return tuple(out)


@lru_cache(maxsize=None)
def all_skew_atoms(group: Group) -> tuple[frozenset[Element], ...]:
    """Every skew atom of the order-divisible-by-4 elements, by smallest member."""
    seen: set[Element] = set()
    out = []
    for x in sorted(div4_elements(group)):
        if x in seen:
            continue
        c = skew_atom(group, x)
        seen.update(c)
        out.append(c)
    return tuple(out)


def unit_residues(m: int) -> frozenset[int]:
    """Residues 1 <= k <= m-1 coprime to m."""
    if m < 1:
        raise ValueError("modulus must be >= 1")
    return frozenset(k for k in range(1, m) if math.gcd(k, m) == 1)


def unit_residues_mod4(m: int) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
    """(units, units == 1 mod 4, units == 3 mod 4); requires m divisible by 4.

    For such m every unit is odd, so the two parts partition the units.
    """
    if m % 4 != 0:
        raise ValueError(f"residue split needs modulus divisible by 4, got {m}")
    units = unit_residues(m)
    ones = frozenset(k for k in units if k % 4 == 1)
    threes = frozenset(k for k in units if k % 4 == 3)
    return units, ones, threes


def power_residue_sets(group: Group, x: Element) -> tuple[frozenset[Element], ...]:
    """Multiples k*x for 1 <= k <= ord(x), grouped by k mod 4 as (r=0, 1, 2, 3).

    Requires ord(x) divisible by 4; the union of the four sets is the cyclic
    subgroup generated by x, and the r=0 set contains the identity.
    """
    m = element_order(group, x)
    if m % 4 != 0:
        raise ValueError(f"element {x} has order {m}, not divisible by 4")
    buckets: list[set[Element]] = [set(), set(), set(), set()]
    for k in range(1, m + 1):
        buckets[k % 4].add(scale(group, k, x))
    return tuple(frozenset(b) for b in buckets)


def odd_divisors_mod4(n: int) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
    """(all odd divisors of n, those == 1 mod 4, those == 3 mod 4)."""
    if n < 1:
        raise ValueError("argument must be >= 1")
    divs = frozenset(d for d in range(1, n + 1) if n % d == 0 and d % 2 == 1)
    return (
        divs,
        frozenset(d for d in divs if d % 4 == 1),
        frozenset(d for d in divs if d % 4 == 3),
    )


ClassEntry = tuple[Element, frozenset[Element]]


def decompose_power_residues(
    group: Group, x: Element
) -> tuple[tuple[ClassEntry, ...], tuple[ClassEntry, ...]]:
    """Write the k=1 (mod 4) and k=3 (mod 4) multiples of x as unions of skew atoms.

    With m = ord(x) and g = m/4, the k=1 set is the union of the skew atoms of
    h*x over odd divisors h of g with h == 1 (mod 4) together with those of
    -(h*x) over odd divisors h == 3 (mod 4); the k=3 set swaps the two roles.
    Returns ((representative, members), ...) lists for the two sets.
    """
    m = element_order(group, x)
    if m % 4 != 0:
        raise ValueError(f"element {x} has order {m}, not divisible by 4")
    _, ones, threes = odd_divisors_mod4(m // 4)
    part1: list[ClassEntry] = []
    part3: list[ClassEntry] = []
    for h in sorted(ones):
        rep = scale(group, h, x)
        part1.append((rep, skew_atom(group, rep)))
        neg_rep = negate(group, rep)
        part3.append((neg_rep, skew_atom(group, neg_rep)))
    for h in sorted(threes):
        rep = scale(group, h, x)
        part3.append((rep, skew_atom(group, rep)))
        neg_rep = negate(group, rep)
        part1.append((neg_rep, skew_atom(group, neg_rep)))
    return tuple(part1), tuple(part3)


@dataclass(frozen=True)
class Decomposition:
    """Cover of a set by atoms and/or skew atoms, with the uncoverable residue.

    Membership holds exactly when the residue is empty; the listed entries are
    pairwise disjoint and their members together with the residue reproduce the
    decomposed set. Residue elements are sorted, so the first entry is the
    lexicographically smallest offender.
    """

    atoms: tuple[ClassEntry, ...]
    classes: tuple[ClassEntry, ...]
    residue: tuple[Element, ...]

    @property
    def member(self) -> bool:
        return not self.residue

    def covered(self) -> frozenset[Element]:
        out: set[Element] = set()
        for _, members in self.atoms + self.classes:
            out.update(members)
        return frozenset(out)

    def to_json(self) -> dict:
        return {
            "member": self.member,
            "atoms": [
                {"representative": list(rep), "members": [list(m) for m in sorted(members)]}
                for rep, members in self.atoms
            ],
            "classes": [
                {"representative": list(rep), "members": [list(m) for m in sorted(members)]}
                for rep, members in self.classes
            ],
            "residue": [list(x) for x in self.residue],
        }


def in_boolean_algebra(group: Group, items: Iterable[Element]) -> Decomposition:
    """Decide membership in the Boolean algebra generated by the subgroups.

    A set belongs exactly when it is a union of atoms, i.e. atom(s) is
    contained in the set for every member s. The residue collects every s
    whose atom is not contained.
    """
    s = frozenset(items)
    if group.identity in s:
        raise ValueError("identity is not allowed in a symbol set")
    covered: set[Element] = set()
    entries: list[ClassEntry] = []
    residue: list[Element] = []
    for x in sorted(s):
        a = atom(group, x)
        if not a <= s:
            residue.append(x)
        elif x not in covered:
            entries.append((min(a), a))
            covered.update(a)
    return Decomposition(atoms=tuple(entries), classes=(), residue=tuple(residue))


def in_skew_algebra(group: Group, items: Iterable[Element]) -> Decomposition:
    """Decide whether a set is a skew-symmetric union of skew atoms.

    When the group exponent is not divisible by 4 there are no skew atoms and
    only the empty set qualifies. Otherwise membership requires, for every
    member s: the negative of s is absent, ord(s) is divisible by 4, and the
    whole skew atom of s is contained. Classes are listed only when every one
    of their members passes; all other elements land in the residue.
    """
    s = frozenset(items)
    if group.identity in s:
        raise ValueError("identity is not allowed in a symbol set")

    def good(x: Element) -> bool:
        if negate(group, x) in s:
            return False
        if element_order(group, x) % 4 != 0:
            return False
        return skew_atom(group, x) <= s

    covered: set[Element] = set()
    entries: list[ClassEntry] = []
    residue: list[Element] = []
    for x in sorted(s):
        if x in covered:
            continue
        if good(x):
            c = skew_atom(group, x)
            if all(good(y) for y in c):
                entries.append((min(c), c))
                covered.update(c)
                continue
        residue.append(x)
    return Decomposition(atoms=(), classes=tuple(entries), residue=tuple(residue))
