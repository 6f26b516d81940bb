"""Exact integrality analysis of mixed Cayley graphs over finite abelian groups."""

from .atoms import (
    Decomposition,
    SymbolSet,
    all_atoms,
    all_skew_atoms,
    atom,
    decompose_power_residues,
    in_boolean_algebra,
    in_skew_algebra,
    odd_divisors_mod4,
    parse_symbol_set,
    power_residue_sets,
    skew_atom,
    skew_split,
    symbol_set,
    unit_residues,
    unit_residues_mod4,
)
from .cyclotomic import (
    CycInt,
    GaussianPoly,
    ambient_order,
    character_exponent,
    character_value,
    cyclotomic_gaussian_factors,
    cyclotomic_polynomial,
    root_power,
    sum_of_roots,
    totient,
)
from .groups import (
    DEFAULT_DENSE_LIMIT,
    DEFAULT_ENUMERATION_LIMIT,
    Element,
    Group,
    ParseError,
    SizeLimitExceeded,
    add,
    div4_elements,
    element_order,
    elements,
    isomorphism_types,
    negate,
    parse_group_spec,
    scale,
)
from .integrality import (
    CrossCheckReport,
    IntegralityVerdict,
    IsomorphismReport,
    cross_validate,
    enumerate_integral_sets,
    is_integral,
    is_integral_checked,
    isomorphism_consistency,
    oriented_is_integral,
)
from .spectrum import (
    ExactSpectrum,
    HermitianMatrix,
    SpectralVerdict,
    exact_spectrum,
    hermitian_matrix,
    is_integral_by_spectrum,
    matrix_to_csv,
    matrix_to_dot,
    numeric_spectrum,
    skew_part_eigenvalue,
    spectral_oracle_deviation,
    symmetric_part_eigenvalue,
)

__version__ = "0.1.0"
