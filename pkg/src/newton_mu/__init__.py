"""Exact Newton numbers of power-series supports and certified
Milnor-number lower bounds."""

from .bounds import (
    BoundCertificate,
    ChainLink,
    bound_simplex,
    milnor_lower_bound,
    stabilized_region,
)
from .coefficients import elementary_symmetric, f_coeff, g_coeff
from .errors import (
    ContainmentError,
    DecompositionError,
    DomainError,
    FormulaMismatchError,
    GuardrailError,
    InvalidRegionError,
    NewtonMuError,
    NotConvenientError,
    NotQuasiConvenientError,
    ParseError,
    StabilizationError,
    UsageError,
)
from .family import FamilyStep, FamilyVerdict, family_difference, negligible_truncation_check
from .geometry import Simplex, simplex_volume
from .higher import (
    DegreeTuple,
    RNewtonReport,
    axis_simplex_r_newton,
    degree_tuple,
    r_bound,
    r_newton_factored,
    r_newton_number,
    sciv_milnor_bound,
)
from .newton import (
    DecompositionPiece,
    FactoredResult,
    NewtonReport,
    VanishingReport,
    decompose_difference,
    full_supporting_subsets,
    minimal_full_supporting,
    newton_number,
    newton_number_factored,
    vanishing_check,
)
from .oracles import Polynomial, ehrhart_volume, milnor_colength, shuffled_newton_number
from .parsing import ParsedSeries, parse_series, support_from_json, support_to_json
from .polyhedra import (
    Facet,
    NewtonDiagram,
    NewtonRegion,
    SupportSet,
    axis_simplex_region,
    gamma_minus,
    is_convenient,
    is_quasi_convenient,
    newton_diagram,
    project,
    restrict,
    simplex_below_diagram,
    standard_modification,
    support,
)

__version__ = "0.1.0"

__all__ = [
    "BoundCertificate",
    "ChainLink",
    "ContainmentError",
    "DecompositionError",
    "DecompositionPiece",
    "DegreeTuple",
    "DomainError",
    "Facet",
    "FactoredResult",
    "FamilyStep",
    "FamilyVerdict",
    "FormulaMismatchError",
    "GuardrailError",
    "InvalidRegionError",
    "NewtonDiagram",
    "NewtonMuError",
    "NewtonRegion",
    "NewtonReport",
    "NotConvenientError",
    "NotQuasiConvenientError",
    "ParseError",
    "ParsedSeries",
    "Polynomial",
    "RNewtonReport",
    "Simplex",
    "StabilizationError",
    "SupportSet",
    "UsageError",
    "VanishingReport",
    "axis_simplex_r_newton",
    "axis_simplex_region",
    "bound_simplex",
    "decompose_difference",
    "degree_tuple",
    "ehrhart_volume",
    "elementary_symmetric",
    "f_coeff",
    "family_difference",
    "full_supporting_subsets",
    "g_coeff",
    "gamma_minus",
    "is_convenient",
    "is_quasi_convenient",
    "milnor_colength",
    "milnor_lower_bound",
    "minimal_full_supporting",
    "negligible_truncation_check",
    "newton_diagram",
    "newton_number",
    "newton_number_factored",
    "parse_series",
    "project",
    "r_bound",
    "r_newton_factored",
    "r_newton_number",
    "restrict",
    "sciv_milnor_bound",
    "shuffled_newton_number",
    "simplex_below_diagram",
    "simplex_volume",
    "standard_modification",
    "stabilized_region",
    "support",
    "support_from_json",
    "support_to_json",
    "vanishing_check",
]
