"""Degree of autonomy of n-D behaviors over the Laurent polynomial ring.

Quick start::

    from ndautonomy import parse_system, analyze
    M = parse_system("2 1 2\\ns1 - 1\\ns2 - 1\\n")
    analyze(M).degree          # 2
"""

from .behavior import (
    INF,
    AutonomyReport,
    SystemMatrix,
    analyze,
    characteristic_ideal,
    degree_of_autonomy,
    is_autonomous,
    is_strongly_autonomous,
    maximal_minors,
)
from .control import (
    StrengthReport,
    SublatticeEmbedding,
    degree_by_restriction_oracle,
    generic_strength,
    interconnect,
    is_max_efficient,
    restrict,
    strength,
)
from .errors import InvariantViolation, ParseError, PreconditionError
from .genericity import (
    ExperimentStats,
    SampleSpec,
    expt_controller_strength,
    expt_generic_degree,
    expt_regular_sequences,
    expt_unit_ideal,
    generic_degree,
    sample_matrix,
    sample_poly,
)
from .groebner import GREVLEX, LEX, GroebnerBasis, MonomialOrder, StepLimitExceeded, buchberger
from .ideal import LaurentIdeal, height, is_nzd_mod, is_proper, is_regular_sequence, restrict_ideal, torus_dimension
from .laurent import LaurentPoly, count_monomials, normalize
from .textio import format_poly, format_system, parse_poly, parse_system, read_report, write_report

__version__ = "0.1.0"

__all__ = [
    "analyze",
    "AutonomyReport",
    "buchberger",
    "characteristic_ideal",
    "count_monomials",
    "degree_by_restriction_oracle",
    "degree_of_autonomy",
    "ExperimentStats",
    "expt_controller_strength",
    "expt_generic_degree",
    "expt_regular_sequences",
    "expt_unit_ideal",
    "format_poly",
    "format_system",
    "generic_degree",
    "generic_strength",
    "GREVLEX",
    "GroebnerBasis",
    "height",
    "INF",
    "interconnect",
    "InvariantViolation",
    "is_autonomous",
    "is_max_efficient",
    "is_nzd_mod",
    "is_proper",
    "is_regular_sequence",
    "is_strongly_autonomous",
    "LaurentIdeal",
    "LaurentPoly",
    "LEX",
    "maximal_minors",
    "MonomialOrder",
    "normalize",
    "parse_poly",
    "parse_system",
    "ParseError",
    "PreconditionError",
    "read_report",
    "restrict",
    "restrict_ideal",
    "sample_matrix",
    "sample_poly",
    "SampleSpec",
    "StepLimitExceeded",
    "strength",
    "StrengthReport",
    "SublatticeEmbedding",
    "SystemMatrix",
    "torus_dimension",
    "write_report",
]
