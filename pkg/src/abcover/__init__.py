"""Exact-arithmetic models of Z2^r abelian covers of P1xP1 and its blowups."""

from .canonical import (BirationalityCertificate, CanonicalReport,
                        REMARK_DEGREE_FOUR, canonical_map_report,
                        eigenspace_dims, half_pullback_pairing, pullback_h0,
                        trivial_subgroup)
from .catalog import (FamilyRow, RemarkRow, TableEntry, VARIANTS, family,
                      theorem_table)
from .cover import (Assumptions, BranchComponent, BranchFlags, CoverSpec,
                    RelationCheck, ValidationReport, cover_spec_from_json,
                    cover_spec_to_json, derive_L, quotient_inertia,
                    quotient_nodes, validate)
from .errors import (CoverDataError, DegenerateCoverError,
                     InternalConsistencyError, NotTwoDivisibleError,
                     StructuralError, TableIntegrityError,
                     UnsupportedConfigurationError)
from .groups import (Character, GroupElement, Subgroup, all_characters,
                     all_elements, annihilator, coset_image,
                     nonzero_characters, pair, perp, perp_basis, span)
from .invariants import (InvariantReport, MinimalityReport, bicanonical_class,
                         minimality_report, numerical_invariants)
from .picard import (BlownUpPoint, DivClass, NefCheck, SurfaceModel,
                     adjunction_genus, canonical_class, h0, intersect,
                     interpolation_point, is_nef, pairing, strict_transform)

__version__ = "0.1.0"

__all__ = [
    "Assumptions",
    "BirationalityCertificate",
    "BlownUpPoint",
    "BranchComponent",
    "BranchFlags",
    "CanonicalReport",
    "Character",
    "CoverDataError",
    "CoverSpec",
    "DegenerateCoverError",
    "DivClass",
    "FamilyRow",
    "GroupElement",
    "InternalConsistencyError",
    "InvariantReport",
    "MinimalityReport",
    "NefCheck",
    "NotTwoDivisibleError",
    "REMARK_DEGREE_FOUR",
    "RelationCheck",
    "RemarkRow",
    "StructuralError",
    "Subgroup",
    "SurfaceModel",
    "TableEntry",
    "TableIntegrityError",
    "UnsupportedConfigurationError",
    "VARIANTS",
    "ValidationReport",
    "adjunction_genus",
    "all_characters",
    "all_elements",
    "annihilator",
    "bicanonical_class",
    "canonical_class",
    "canonical_map_report",
    "coset_image",
    "cover_spec_from_json",
    "cover_spec_to_json",
    "derive_L",
    "eigenspace_dims",
    "family",
    "h0",
    "half_pullback_pairing",
    "interpolation_point",
    "intersect",
    "is_nef",
    "minimality_report",
    "nonzero_characters",
    "numerical_invariants",
    "pair",
    "pairing",
    "perp",
    "perp_basis",
    "pullback_h0",
    "quotient_inertia",
    "quotient_nodes",
    "span",
    "strict_transform",
    "theorem_table",
    "trivial_subgroup",
    "validate",
]
