"""Hermitian adjacency matrices and the two spectrum engines.

The exact engine evaluates eigenvalues as character sums in cyclotomic
integer arithmetic; the numeric engine diagonalizes the matrix with a
cyclic Jacobi iteration on its real symmetric embedding. The two paths
share no code and serve as each other's oracle: neither calls the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .atoms import SymbolSet
from .cyclotomic import CycInt, ambient_order, character_exponent, sum_of_roots
from .groups import (
    DEFAULT_DENSE_LIMIT,
    Element,
    Group,
    check_dense_limit,
    element_index,
    elements,
    format_element,
    negate,
)

__all__ = [
    "ENTRY_NONE",
    "ENTRY_UNDIRECTED",
    "ENTRY_FORWARD",
    "ENTRY_BACKWARD",
    "HermitianMatrix",
    "hermitian_matrix",
    "symmetric_part_eigenvalue",
    "skew_part_eigenvalue",
    "SpectrumEntry",
    "ExactSpectrum",
    "exact_spectrum",
    "numeric_spectrum",
    "SpectralVerdict",
    "is_integral_by_spectrum",
    "spectral_oracle_deviation",
    "matrix_to_csv",
    "matrix_to_dot",
]

# Entry codes: 0, 1, +i, -i.
ENTRY_NONE = 0
ENTRY_UNDIRECTED = 1
ENTRY_FORWARD = 2
ENTRY_BACKWARD = 3

_ENTRY_TEXT = {ENTRY_NONE: "0", ENTRY_UNDIRECTED: "1", ENTRY_FORWARD: "i", ENTRY_BACKWARD: "-i"}
_ENTRY_COMPLEX = {
    ENTRY_NONE: 0j,
    ENTRY_UNDIRECTED: 1 + 0j,
    ENTRY_FORWARD: 1j,
    ENTRY_BACKWARD: -1j,
}


@dataclass(frozen=True, eq=False)
class HermitianMatrix:
    """Dense Hermitian adjacency matrix with entries coded over {0, 1, +i, -i}.

    Rows and columns follow the group element enumeration order.
    """

    group: Group
    codes: np.ndarray

    @property
    def dimension(self) -> int:
        return int(self.codes.shape[0])

    def entry_text(self, u: int, v: int) -> str:
        return _ENTRY_TEXT[int(self.codes[u, v])]

    def to_complex(self) -> np.ndarray:
        out = np.zeros(self.codes.shape, dtype=complex)
        for code, value in _ENTRY_COMPLEX.items():
            out[self.codes == code] = value
        return out


def hermitian_matrix(
    group: Group, symbols: SymbolSet, max_order: int = DEFAULT_DENSE_LIMIT
) -> HermitianMatrix:
    """Adjacency matrix of the mixed Cayley graph for the given symbol set.

    entry(a, b) is 1 when b - a lies in the symmetric part, i when b - a lies
    in the skew part, -i when a - b does, and 0 otherwise.
    """
    check_dense_limit(group, max_order)
    if symbols.group != group:
        raise ValueError("symbol set belongs to a different group")
    elems = elements(group)
    idx = element_index(group)
    n = len(elems)
    codes = np.zeros((n, n), dtype=np.int8)
    skew = symbols.skew_part
    sym = symbols.elements - skew
    for s in sym:
        for a, ea in enumerate(elems):
            b = idx[_shifted(group, ea, s)]
            codes[a, b] = ENTRY_UNDIRECTED
    for s in skew:
        for a, ea in enumerate(elems):
            b = idx[_shifted(group, ea, s)]
            codes[a, b] = ENTRY_FORWARD
            codes[b, a] = ENTRY_BACKWARD
    return HermitianMatrix(group, codes)


def _shifted(group: Group, a: Element, s: Element) -> Element:
    return tuple((x + y) % m for x, y, m in zip(a, s, group.moduli))


def symmetric_part_eigenvalue(group: Group, symbols: SymbolSet, char: Element) -> CycInt:
    """Exact eigenvalue contribution of a symmetric symbol set at one character."""
    if symbols.group != group:
        raise ValueError("symbol set belongs to a different group")
    if not symbols.is_symmetric():
        raise ValueError("symbol set is not closed under negation")
    m = ambient_order(group)
    counts: dict[int, int] = {}
    for s in symbols.elements:
        e = character_exponent(group, char, s)
        counts[e] = counts.get(e, 0) + 1
    return sum_of_roots(m, counts)


def skew_part_eigenvalue(group: Group, symbols: SymbolSet, char: Element) -> CycInt:
    """Exact eigenvalue contribution of a skew-symmetric symbol set at one character.

    The value is i * sum over s of (character(s) - character(-s)); the factor
    i is folded in as an exponent shift by a quarter turn.
    """
    if symbols.group != group:
        raise ValueError("symbol set belongs to a different group")
    if not symbols.is_skew_symmetric():
        raise ValueError("symbol set is not skew-symmetric")
    m = ambient_order(group)
    quarter = m // 4
    counts: dict[int, int] = {}
    for s in symbols.elements:
        e_pos = (character_exponent(group, char, s) + quarter) % m
        e_neg = (character_exponent(group, char, negate(group, s)) + quarter) % m
        counts[e_pos] = counts.get(e_pos, 0) + 1
        counts[e_neg] = counts.get(e_neg, 0) - 1
    return sum_of_roots(m, counts)


@dataclass(frozen=True)
class SpectrumEntry:
    char: Element
    undirected: CycInt
    directed: CycInt
    value: CycInt
    integer: int | None


@dataclass(frozen=True)
class ExactSpectrum:
    """One exact eigenvalue per character, as cyclotomic integers."""

    group: Group
    symbols: SymbolSet
    entries: tuple[SpectrumEntry, ...]

    @property
    def is_integral(self) -> bool:
        return all(e.integer is not None for e in self.entries)

    def numeric_values(self) -> list[float]:
        """Floating evaluation of the exact eigenvalues, sorted ascending."""
        vals = []
        for e in self.entries:
            z = e.value.complex_value()
            assert abs(z.imag) < 1e-9, "exact eigenvalue evaluated with an imaginary part"
            vals.append(z.real)
        return sorted(vals)

    def to_json(self) -> dict:
        return {
            "group": str(self.group),
            "set": [list(x) for x in self.symbols.sorted_elements()],
            "ambient_order": ambient_order(self.group),
            "integral": self.is_integral,
            "entries": [
                {
                    "char": list(e.char),
                    "undirected": list(e.undirected.coeffs),
                    "directed": list(e.directed.coeffs),
                    "value": list(e.value.coeffs),
                    "integer": e.integer,
                }
                for e in self.entries
            ],
        }


def exact_spectrum(
    group: Group, symbols: SymbolSet, max_order: int = DEFAULT_DENSE_LIMIT
) -> ExactSpectrum:
    """Exact spectrum via character sums: one entry per character index."""
    check_dense_limit(group, max_order)
    if symbols.group != group:
        raise ValueError("symbol set belongs to a different group")
    skew = symbols.skew_part
    sym_set = SymbolSet(group, symbols.elements - skew)
    skew_set = SymbolSet(group, skew)
    entries = []
    for char in elements(group):
        lam = symmetric_part_eigenvalue(group, sym_set, char)
        mu = skew_part_eigenvalue(group, skew_set, char)
        total = lam + mu
        entries.append(
            SpectrumEntry(
                char=char,
                undirected=lam,
                directed=mu,
                value=total,
                integer=total.as_integer(),
            )
        )
    return ExactSpectrum(group, symbols, tuple(entries))


@dataclass(frozen=True)
class SpectralVerdict:
    integral: bool
    witness_char: Element | None
    witness_value: CycInt | None


def is_integral_by_spectrum(
    group: Group, symbols: SymbolSet, max_order: int = DEFAULT_DENSE_LIMIT
) -> SpectralVerdict:
    """Exact integrality test: every eigenvalue must reduce to an integer.

    No tolerance is involved; the witness is the first character (in element
    order) whose eigenvalue is not an integer.
    """
    spec = exact_spectrum(group, symbols, max_order)
    for e in spec.entries:
        if e.integer is None:
            return SpectralVerdict(False, e.char, e.value)
    return SpectralVerdict(True, None, None)


@lru_cache(maxsize=None)
def _tournament_rounds(n: int) -> tuple[tuple[np.ndarray, np.ndarray], ...]:
    """Round-robin schedule: n-1 rounds of disjoint index pairs covering all pairs."""
    players = list(range(n)) if n % 2 == 0 else list(range(n)) + [-1]
    m = len(players)
    rounds = []
    for _ in range(m - 1):
        pairs = [
            (players[i], players[m - 1 - i])
            for i in range(m // 2)
            if players[i] != -1 and players[m - 1 - i] != -1
        ]
        ps = np.array([p for p, _ in pairs], dtype=np.intp)
        qs = np.array([q for _, q in pairs], dtype=np.intp)
        rounds.append((ps, qs))
        players = [players[0], players[-1]] + players[1:-1]
    return tuple(rounds)


def _offdiag_norm(a: np.ndarray) -> float:
    d = a.copy()
    np.fill_diagonal(d, 0.0)
    return float(np.linalg.norm(d))


def _jacobi_eigenvalues(
    matrix: np.ndarray, max_sweeps: int = 30, off_tol: float = 1e-12
) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi sweeps.

    Each sweep visits every index pair once, in round-robin order; rotations
    within a round act on disjoint pairs, so applying them together produces
    the same matrix as applying them one by one. Entries no larger than
    off_tol/n are left alone: together they cannot push the off-diagonal
    Frobenius norm above off_tol.
    """
    a = np.array(matrix, dtype=float, copy=True)
    n = a.shape[0]
    if n < 2:
        return a.diagonal().copy()
    skip_tol = off_tol / n
    for _ in range(max_sweeps):
        if _offdiag_norm(a) <= off_tol:
            break
        for ps, qs in _tournament_rounds(n):
            apq = a[ps, qs]
            active = np.abs(apq) > skip_tol
            if not active.any():
                continue
            p = ps[active]
            q = qs[active]
            apq = apq[active]
            tau = (a[q, q] - a[p, p]) / (2.0 * apq)
            t = np.where(tau >= 0.0, 1.0, -1.0) / (np.abs(tau) + np.sqrt(1.0 + tau * tau))
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c
            rp = a[p, :]
            rq = a[q, :]
            a[p, :] = c[:, None] * rp - s[:, None] * rq
            a[q, :] = s[:, None] * rp + c[:, None] * rq
            cp = a[:, p]
            cq = a[:, q]
            a[:, p] = c[None, :] * cp - s[None, :] * cq
            a[:, q] = s[None, :] * cp + c[None, :] * cq
            a[p, q] = 0.0
            a[q, p] = 0.0
    else:
        if _offdiag_norm(a) > off_tol:
            raise RuntimeError("Jacobi iteration did not converge within the sweep budget")
    return np.sort(a.diagonal().copy())


def numeric_spectrum(matrix: HermitianMatrix) -> list[float]:
    """Eigenvalues of the Hermitian matrix via its real symmetric embedding.

    H = A + iB embeds as [[A, -B], [B, A]], whose spectrum is that of H with
    every eigenvalue doubled; the doubling is checked and then halved.
    """
    h = matrix.to_complex()
    a = h.real
    b = h.imag
    big = np.block([[a, -b], [b, a]])
    eig = _jacobi_eigenvalues(big)
    first = eig[0::2]
    second = eig[1::2]
    gap = float(np.max(np.abs(first - second))) if len(first) else 0.0
    if gap > 1e-8:
        raise RuntimeError(f"embedded eigenvalues failed to pair up (gap {gap:.3e})")
    return [float(v) for v in (first + second) / 2.0]


def spectral_oracle_deviation(
    group: Group, symbols: SymbolSet, max_order: int = DEFAULT_DENSE_LIMIT
) -> float:
    """Largest gap between the two engines' sorted eigenvalue multisets."""
    exact_vals = exact_spectrum(group, symbols, max_order).numeric_values()
    numeric_vals = numeric_spectrum(hermitian_matrix(group, symbols, max_order))
    return max(
        (abs(x - y) for x, y in zip(exact_vals, numeric_vals)),
        default=0.0,
    )


def matrix_to_csv(matrix: HermitianMatrix) -> str:
    n = matrix.dimension
    lines = []
    for u in range(n):
        lines.append(",".join(matrix.entry_text(u, v) for v in range(n)))
    return "\n".join(lines) + "\n"


def matrix_to_dot(matrix: HermitianMatrix) -> str:
    """DOT export: undirected edges drawn plain, directed edges with arrowheads."""
    elems = elements(matrix.group)
    n = matrix.dimension
    lines = ["digraph mixed_cayley {"]
    for x in elems:
        lines.append(f'  "{format_element(x)}";')
    for u in range(n):
        for v in range(n):
            code = int(matrix.codes[u, v])
            if code == ENTRY_UNDIRECTED and u < v:
                lines.append(
                    f'  "{format_element(elems[u])}" -> "{format_element(elems[v])}" [dir=none];'
                )
            elif code == ENTRY_FORWARD:
                lines.append(
                    f'  "{format_element(elems[u])}" -> "{format_element(elems[v])}";'
                )
    lines.append("}")
    return "\n".join(lines) + "\n"
