"""Exact integer combinatorics of simple Lie types and flag varieties."""

from .classifier import (
    ClassificationResult,
    GroupSpec,
    Orbit,
    VarietyDescriptor,
    Violation,
    classify,
    group_spec,
    load_database,
    orbit_structure,
    relations,
    validate_database,
)
from .cone import cone_cover_order, cone_hilbert_function
from .errors import DomainError
from .parabolic import (
    HomogeneousVariety,
    ParabolicMarking,
    RMin,
    VarietyClass,
    admissible_conormal_range,
    character_weight,
    codim_parabolic,
    fano_index,
    identify_marking,
    marking,
    minimal_homogeneous_varieties,
    r_min,
)
from .representations import (
    MinimalIrrep,
    bwb_section_dim,
    check_rg_plus_one,
    min_nontrivial_irrep,
    weyl_dim,
)
from .roots import (
    DynkinType,
    RootSystem,
    Weight,
    cartan_matrix,
    dynkin_type,
    fundamental_weight,
    group_dimension,
    positive_roots,
    root_system,
    weight,
)

__version__ = "0.1.0"
