"""Exact arithmetic in rings of cyclotomic integers containing i.

Values live in Z[w] for w a primitive M-th root of unity with M divisible
by 4, so the imaginary unit is available inside the ring as w^(M/4).
The canonical form of a value is its integer coordinate vector over the
power basis 1, w, ..., w^(phi(M)-1), obtained by reducing modulo the M-th
cyclotomic polynomial; equality and integer detection are plain coefficient
comparisons on that vector.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .groups import Element, Group

__all__ = [
    "totient",
    "cyclotomic_polynomial",
    "CycInt",
    "root_power",
    "sum_of_roots",
    "ambient_order",
    "character_exponent",
    "character_value",
    "GaussianPoly",
    "cyclotomic_gaussian_factors",
]

_INT64_SAFE = 2**62


def totient(n: int) -> int:
    if n < 1:
        raise ValueError("totient argument must be >= 1")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _poly_divmod_exact(num: list[int], den: list[int]) -> list[int]:
    """Quotient of num by monic den; raises if the remainder is nonzero."""
    assert den[-1] == 1, "divisor must be monic"
    rem = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for k in range(len(q) - 1, -1, -1):
        c = rem[k + len(den) - 1]
        q[k] = c
        if c:
            for j, dj in enumerate(den):
                rem[k + j] -= c * dj
    if any(rem):
        raise ArithmeticError("polynomial division left a nonzero remainder")
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients (ascending) of the n-th cyclotomic polynomial.

    Computed by exact integer division of x^n - 1 by the product of the
    cyclotomic polynomials of the proper divisors of n.
    """
    if n < 1:
        raise ValueError("cyclotomic index must be >= 1")
    if n == 1:
        return (-1, 1)
    num = [0] * (n + 1)
    num[0] = -1
    num[n] = 1
    den = [1]
    for d in range(1, n):
        if n % d == 0:
            den = _poly_mul(den, list(cyclotomic_polynomial(d)))
    coeffs = tuple(_poly_divmod_exact(num, den))
    assert len(coeffs) == totient(n) + 1 and coeffs[-1] == 1
    return coeffs


class _Ring:
    """Reduction context for Z[w_M]: the modulus polynomial and power rows.

    Rows are built once per ambient order and never mutated afterwards, so a
    ring instance is safe to share across threads.
    """

    def __init__(self, order: int):
        if order % 4 != 0:
            raise ValueError(f"ambient order must be divisible by 4, got {order}")
        self.order = order
        self.modulus = cyclotomic_polynomial(order)
        self.degree = len(self.modulus) - 1
        self._rows: list[tuple[int, ...]] = [
            tuple(1 if j == k else 0 for j in range(self.degree))
            for k in range(min(self.degree, order))
        ]
        self._matrix: np.ndarray | None = None
        self._matrix_bound = 0

    def row(self, e: int) -> tuple[int, ...]:
        """Coordinates of w^e over the power basis; e is taken modulo the order."""
        e %= self.order
        rows = self._rows
        while len(rows) <= e:
            prev = rows[-1]
            shifted = [0] + list(prev)
            top = shifted.pop()
            if top:
                for j in range(self.degree):
                    shifted[j] -= top * self.modulus[j]
            rows.append(tuple(shifted))
        return rows[e]

    def matrix(self) -> np.ndarray:
        """All rows 0..order-1 as an int64 array, for batched exact sums."""
        if self._matrix is None:
            self.row(self.order - 1)
            self._matrix = np.array(self._rows, dtype=np.int64)
            self._matrix_bound = int(np.abs(self._matrix).max())
        return self._matrix

    def from_exponent_counts(self, counts: dict[int, int]) -> "CycInt":
        """Exact value of sum(count * w^e) over the given exponent counts."""
        items = [(e % self.order, c) for e, c in counts.items() if c]
        if not items:
            return CycInt(self.order, (0,) * self.degree)
        total = sum(abs(c) for _, c in items)
        mat = self.matrix()
        if total * max(self._matrix_bound, 1) < _INT64_SAFE:
            exps = np.fromiter((e for e, _ in items), dtype=np.int64, count=len(items))
            cs = np.fromiter((c for _, c in items), dtype=np.int64, count=len(items))
            vec = (mat[exps] * cs[:, None]).sum(axis=0)
            return CycInt(self.order, tuple(int(v) for v in vec))
        acc = [0] * self.degree
        for e, c in items:
            r = self.row(e)
            for j in range(self.degree):
                if r[j]:
                    acc[j] += c * r[j]
        return CycInt(self.order, tuple(acc))


@lru_cache(maxsize=None)
def _ring(order: int) -> _Ring:
    return _Ring(order)


@lru_cache(maxsize=None)
def _unit_roots(order: int) -> tuple[complex, ...]:
    return tuple(
        complex(math.cos(2 * math.pi * j / order), math.sin(2 * math.pi * j / order))
        for j in range(order)
    )


@dataclass(frozen=True)
class CycInt:
    """A cyclotomic integer in Z[w_order], order divisible by 4.

    coeffs is the canonical power-basis coordinate vector of length
    phi(order); two values are equal exactly when their vectors are equal.
    """

    order: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        ring = _ring(self.order)
        if len(self.coeffs) != ring.degree:
            raise ValueError(
                f"coefficient vector has length {len(self.coeffs)}, expected {ring.degree}"
            )

    @staticmethod
    def zero(order: int) -> "CycInt":
        return CycInt(order, (0,) * _ring(order).degree)

    @staticmethod
    def integer(order: int, value: int) -> "CycInt":
        ring = _ring(order)
        return CycInt(order, (value,) + (0,) * (ring.degree - 1))

    @staticmethod
    def gaussian(order: int, re: int, im: int) -> "CycInt":
        return CycInt.integer(order, re) + CycInt.integer(order, im).times_i()

    def _require_same_ring(self, other: "CycInt") -> None:
        if self.order != other.order:
            raise ValueError(f"ambient order mismatch: {self.order} vs {other.order}")

    def __add__(self, other: "CycInt") -> "CycInt":
        self._require_same_ring(other)
        return CycInt(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "CycInt") -> "CycInt":
        self._require_same_ring(other)
        return CycInt(self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "CycInt":
        return CycInt(self.order, tuple(-a for a in self.coeffs))

    def __mul__(self, other: "CycInt") -> "CycInt":
        self._require_same_ring(other)
        ring = _ring(self.order)
        prod = _poly_mul(list(self.coeffs), list(other.coeffs))
        acc = list(prod[: ring.degree]) + [0] * max(0, ring.degree - len(prod))
        for j in range(ring.degree, len(prod)):
            c = prod[j]
            if c:
                r = ring.row(j)
                for k in range(ring.degree):
                    if r[k]:
                        acc[k] += c * r[k]
        return CycInt(self.order, tuple(acc))

    def times_root(self, e: int) -> "CycInt":
        """Multiply by w^e via exponent shift."""
        ring = _ring(self.order)
        counts: dict[int, int] = {}
        for j, c in enumerate(self.coeffs):
            if c:
                counts[(j + e) % self.order] = counts.get((j + e) % self.order, 0) + c
        return ring.from_exponent_counts(counts)

    def times_i(self) -> "CycInt":
        return self.times_root(self.order // 4)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def as_integer(self) -> int | None:
        """The integer value when the vector is a real constant, else None."""
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def gaussian_parts(self) -> tuple[int, int] | None:
        """(re, im) when the value lies in Z[i], else None."""
        ring = _ring(self.order)
        u = ring.row(self.order // 4)
        pivot = next((j for j in range(1, ring.degree) if u[j]), None)
        assert pivot is not None, "imaginary unit cannot reduce to a constant"
        im, rem = divmod(self.coeffs[pivot], u[pivot])
        if rem:
            return None
        for j in range(1, ring.degree):
            if self.coeffs[j] != im * u[j]:
                return None
        return self.coeffs[0] - im * u[0], im

    def complex_value(self) -> complex:
        """Floating evaluation with compensated summation, error well under 1e-9."""
        roots = _unit_roots(self.order)
        re = math.fsum(c * roots[j].real for j, c in enumerate(self.coeffs) if c)
        im = math.fsum(c * roots[j].imag for j, c in enumerate(self.coeffs) if c)
        return complex(re, im)

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": list(self.coeffs)}


def root_power(order: int, e: int) -> CycInt:
    """The root of unity w_order^e as a canonical CycInt; order must be divisible by 4."""
    ring = _ring(order)
    return CycInt(order, ring.row(e))


def sum_of_roots(order: int, exponent_counts: dict[int, int]) -> CycInt:
    """Exact value of sum(count * w_order^e) over an exponent-count table."""
    return _ring(order).from_exponent_counts(exponent_counts)


def ambient_order(group: Group) -> int:
    """Smallest root-of-unity order containing all character values and i."""
    return math.lcm(group.exponent, 4)


def character_exponent(group: Group, alpha: Element, x: Element) -> int:
    """Exponent e with character_alpha(x) = w_M^e, M the group's ambient order.

    Symmetric in its two element arguments.
    """
    m = ambient_order(group)
    return sum((m // n) * a * b for n, a, b in zip(group.moduli, alpha, x)) % m


def character_value(group: Group, alpha: Element, x: Element) -> CycInt:
    return root_power(ambient_order(group), character_exponent(group, alpha, x))


@dataclass(frozen=True)
class GaussianPoly:
    """Polynomial with Gaussian-integer coefficients, constant term first."""

    coeffs: tuple[tuple[int, int], ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_monic(self) -> bool:
        return self.coeffs[-1] == (1, 0)

    def __mul__(self, other: "GaussianPoly") -> "GaussianPoly":
        out = [(0, 0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, (ar, ai) in enumerate(self.coeffs):
            for j, (br, bi) in enumerate(other.coeffs):
                cr, ci = out[i + j]
                out[i + j] = (cr + ar * br - ai * bi, ci + ar * bi + ai * br)
        return GaussianPoly(tuple(out))

    @staticmethod
    def from_integer_coeffs(coeffs) -> "GaussianPoly":
        return GaussianPoly(tuple((int(c), 0) for c in coeffs))


def cyclotomic_gaussian_factors(n: int) -> tuple[GaussianPoly, GaussianPoly]:
    """The two monic factors of the n-th cyclotomic polynomial over Z[i].

    For n divisible by 4 the primitive n-th roots split by their residue
    class: the first factor has the roots w^a with a == 1 (mod 4), the second
    those with a == 3 (mod 4). Each has degree phi(n)/2 and Gaussian-integer
    coefficients, and their product is the full cyclotomic polynomial.
    """
    if n % 4 != 0:
        raise ValueError(f"factorization over Z[i] needs n divisible by 4, got {n}")
    units = [a for a in range(1, n) if math.gcd(a, n) == 1]
    factors = []
    for residue in (1, 3):
        exps = [a for a in units if a % 4 == residue]
        coeffs = [CycInt.integer(n, 1)]
        for a in exps:
            root = root_power(n, a)
            nxt = [CycInt.zero(n) for _ in range(len(coeffs) + 1)]
            for j, c in enumerate(coeffs):
                nxt[j + 1] = nxt[j + 1] + c
                nxt[j] = nxt[j] - root * c
            coeffs = nxt
        pairs = []
        for c in coeffs:
            g = c.gaussian_parts()
            if g is None:
                raise ArithmeticError(
                    "factor coefficient did not reduce to a Gaussian integer"
                )
            pairs.append(g)
        factors.append(GaussianPoly(tuple(pairs)))
    return factors[0], factors[1]
