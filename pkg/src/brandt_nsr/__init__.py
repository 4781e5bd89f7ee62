"""Finite operation tables for affine near-semirings over Brandt semigroups.

The package builds the algebra of additively generated affine maps with an
adjoined zero, as explicit Cayley tables, and checks the classification
results about it: element counts, congruence lattices, right ideals,
annihilators of the constant carrier, and the radical values.
"""

from .brandt import THETA, Brandt, BrandtElement, Permutation, brandt_add
from .congruence import (
    CompatibilityMode,
    Congruence,
    congruence_closure,
    congruence_closure_reference,
    congruence_lattice,
    equality_congruence,
    is_congruence,
    join,
    kernel,
    lattice_bruteforce,
    principal_congruences,
    right_ideals,
    universal_congruence,
)
from .errors import (
    BrandtNsrError,
    CacheError,
    GenerationError,
    LatticeTooLarge,
    ValidationError,
)
from .generation import (
    NearSemiringTable,
    additive_closure,
    additively_generates,
    affine_maps,
    brandt_generators,
    build_nsr,
    count_formula,
    endomorphisms,
    endomorphisms_bruteforce,
    validate_nsr,
)
from .maps import (
    CanonicalForm,
    Const,
    ConstTheta,
    NSupport,
    Other,
    Singleton,
    canonical_name,
    classify,
    map_add,
    map_compose,
    parse_name,
    realize,
    realize_name,
    support,
    support_size,
)
from .structure import (
    ActionStructure,
    PremiseCheck,
    RadicalEntry,
    RadicalReport,
    annihilator,
    annihilator_of_set,
    aplus_congruence,
    build_C,
    has_left_identity,
    is_strongly_monogenic,
    modularity_witness,
    n_subsemigroups,
    nsr_annihilator,
    radical_report,
    report_to_json,
)
from .verify import Check, identity_vector_failures, run_verification

__all__ = [
    "THETA",
    "Brandt",
    "BrandtElement",
    "Permutation",
    "brandt_add",
    "CompatibilityMode",
    "Congruence",
    "congruence_closure",
    "congruence_closure_reference",
    "congruence_lattice",
    "equality_congruence",
    "is_congruence",
    "join",
    "kernel",
    "lattice_bruteforce",
    "principal_congruences",
    "right_ideals",
    "universal_congruence",
    "BrandtNsrError",
    "CacheError",
    "GenerationError",
    "LatticeTooLarge",
    "ValidationError",
    "NearSemiringTable",
    "additive_closure",
    "additively_generates",
    "affine_maps",
    "brandt_generators",
    "build_nsr",
    "count_formula",
    "endomorphisms",
    "endomorphisms_bruteforce",
    "validate_nsr",
    "CanonicalForm",
    "Const",
    "ConstTheta",
    "NSupport",
    "Other",
    "Singleton",
    "canonical_name",
    "classify",
    "map_add",
    "map_compose",
    "parse_name",
    "realize",
    "realize_name",
    "support",
    "support_size",
    "ActionStructure",
    "PremiseCheck",
    "RadicalEntry",
    "RadicalReport",
    "annihilator",
    "annihilator_of_set",
    "aplus_congruence",
    "build_C",
    "has_left_identity",
    "is_strongly_monogenic",
    "modularity_witness",
    "n_subsemigroups",
    "nsr_annihilator",
    "radical_report",
    "report_to_json",
    "Check",
    "identity_vector_failures",
    "run_verification",
]

__version__ = "0.1.0"
