"""Finite abelian groups as direct products of cyclic groups.

Elements are coordinate tuples reduced modulo the cyclic factor orders.
The element enumeration order (lexicographic, identity first) is part of
the external contract: it fixes row/column indexing for all matrices.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator

Element = tuple[int, ...]

# Dense full-spectrum operations refuse larger groups unless overridden.
DEFAULT_DENSE_LIMIT = 4096
# Integral-set enumeration refuses larger groups unless overridden.
DEFAULT_ENUMERATION_LIMIT = 64
# Hard cap on materializing the element list at all.
MAX_MATERIALIZED_ORDER = 1 << 20


class ParseError(ValueError):
    """Malformed group or symbol-set text."""


class SizeLimitExceeded(RuntimeError):
    """Group order exceeds the configured guardrail for a dense operation."""


@dataclass(frozen=True)
class Group:
    """Direct product of cyclic groups Z_{n_1} x ... x Z_{n_k}, each n_j >= 2."""

    moduli: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.moduli:
            raise ValueError("group needs at least one cyclic factor")
        for m in self.moduli:
            if not isinstance(m, int) or m < 2:
                raise ValueError(f"cyclic factor order must be an integer >= 2, got {m!r}")

    @cached_property
    def order(self) -> int:
        return math.prod(self.moduli)

    @cached_property
    def exponent(self) -> int:
        return math.lcm(*self.moduli)

    @property
    def rank(self) -> int:
        return len(self.moduli)

    @property
    def identity(self) -> Element:
        return (0,) * len(self.moduli)

    def __str__(self) -> str:
        return "x".join(f"Z{m}" for m in self.moduli)


_GROUP_Z_RE = re.compile(r"Z(\d+)(?:xZ(\d+))*", re.IGNORECASE)
_GROUP_BARE_RE = re.compile(r"\d+(?:,\d+)*")


def parse_group_spec(text: str) -> Group:
    """Parse "Z4", "Z2xZ4" or the bare list "2,4" into a Group.

    Factors are kept in written order; no normalization to prime powers.
    """
    s = re.sub(r"\s+", "", text)
    if _GROUP_Z_RE.fullmatch(s):
        parts = re.split(r"[xX]", s)
        moduli = tuple(int(p[1:]) for p in parts)
    elif _GROUP_BARE_RE.fullmatch(s):
        moduli = tuple(int(p) for p in s.split(","))
    else:
        raise ParseError(f"cannot parse group spec {text!r}")
    for m in moduli:
        if m < 2:
            raise ParseError(f"cyclic factor order must be >= 2, got {m} in {text!r}")
    return Group(moduli)


def _check_coords(group: Group, x: Element) -> None:
    if len(x) != len(group.moduli):
        raise ValueError(f"element {x} has {len(x)} coordinates, group has {len(group.moduli)}")


def reduce_element(group: Group, coords) -> Element:
    """Reduce arbitrary integer coordinates into the canonical residue tuple."""
    coords = tuple(coords)
    _check_coords(group, coords)
    return tuple(c % m for c, m in zip(coords, group.moduli))


def add(group: Group, x: Element, y: Element) -> Element:
    _check_coords(group, x)
    _check_coords(group, y)
    return tuple((a + b) % m for a, b, m in zip(x, y, group.moduli))


def negate(group: Group, x: Element) -> Element:
    _check_coords(group, x)
    return tuple((-a) % m for a, m in zip(x, group.moduli))


def scale(group: Group, k: int, x: Element) -> Element:
    """k-fold sum of x with itself; k may be any integer, scale(0, x) is the identity."""
    _check_coords(group, x)
    return tuple((k * a) % m for a, m in zip(x, group.moduli))


def element_order(group: Group, x: Element) -> int:
    """Least positive m with scale(m, x) equal to the identity."""
    _check_coords(group, x)
    return math.lcm(*(m // math.gcd(m, a) for a, m in zip(x, group.moduli)))


@lru_cache(maxsize=None)
def elements(group: Group) -> tuple[Element, ...]:
    """All group elements in lexicographic coordinate order, identity first."""
    if group.order > MAX_MATERIALIZED_ORDER:
        raise SizeLimitExceeded(
            f"group order {group.order} exceeds the element-list cap {MAX_MATERIALIZED_ORDER}"
        )
    return tuple(itertools.product(*(range(m) for m in group.moduli)))


@lru_cache(maxsize=None)
def element_index(group: Group) -> dict[Element, int]:
    return {x: i for i, x in enumerate(elements(group))}


def nonzero_elements(group: Group) -> tuple[Element, ...]:
    return elements(group)[1:]


@lru_cache(maxsize=None)
def div4_elements(group: Group) -> frozenset[Element]:
    """Elements whose order is divisible by 4.

    Nonempty exactly when the group exponent is divisible by 4.
    """
    return frozenset(x for x in elements(group) if element_order(group, x) % 4 == 0)


def format_element(x: Element) -> str:
    return ",".join(str(c) for c in x)


def format_element_set(xs) -> str:
    return ";".join(format_element(x) for x in sorted(xs))


def check_dense_limit(group: Group, limit: int = DEFAULT_DENSE_LIMIT) -> None:
    if group.order > limit:
        raise SizeLimitExceeded(
            f"group order {group.order} exceeds the dense-operation limit {limit}"
        )


def isomorphism_types(max_order: int, min_order: int = 2) -> list[Group]:
    """One Group per abelian isomorphism type with min_order <= order <= max_order.

    Presented with prime-power moduli in ascending order, e.g. Z6 appears as
    Group((2, 3)).
    """
    out: list[Group] = []
    for n in range(max(min_order, 2), max_order + 1):
        per_prime: list[list[tuple[int, ...]]] = []
        for p, e in _factorize(n).items():
            per_prime.append([tuple(p**part for part in parts) for parts in _partitions(e)])
        for combo in itertools.product(*per_prime):
            moduli = tuple(sorted(itertools.chain.from_iterable(combo)))
            out.append(Group(moduli))
    return out


def _factorize(n: int) -> dict[int, int]:
    factors: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def _partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    if largest is None:
        largest = n
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest
