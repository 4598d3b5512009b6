"""Exact arithmetic for the characters of S_n that depend only on cycle count."""

from .basis import (
    BASIS_TAGS,
    BasisCoords,
    LengthVector,
    change_of_basis,
    convert_coords,
    coords_to_vector,
    elementary_divisor,
    gamma_h_expansion,
    gamma_vector,
    length_vector_from_class_function,
    omega_vector,
    phi_coords,
    phi_vector,
    psi_h_expansion,
    psi_vector,
    regular_vector,
    restrict_length,
)
from .characters import (
    CharacterTable,
    ClassFunction,
    HCombination,
    character_table,
    class_size,
    gamma_multiplicity,
    h_to_class_function,
    induced_trivial,
    inner_product,
    irreducible_character,
    is_genuine_character,
)
from .combinatorics import (
    Partition,
    binom,
    cycle_count,
    cycle_type,
    descent_count,
    eulerian,
    multinomial_gcd,
    multiplicity_multinomial,
    partitions,
    partitions_by_length,
)
from .lattice import (
    ConeDecomposition,
    clearing_factor,
    cone_decompose,
    fundamental_domain,
    geometric_character,
    is_virtual_length_character,
    lattice_index,
    obstruction_witness,
    params_from_theta,
    theta_from_params,
)
from .products import (
    ClassProductDistribution,
    StructureConstants,
    class_product_distribution,
    intersection_inner_product,
    product_constants_brute,
    product_constants_formula,
    product_constants_from_values,
)
from .suites import SUITES, BruteCaps, VerificationReport, run_suite

__all__ = [name for name in dir() if not name.startswith("_")]
