"""Exact linear algebra over large prime fields for ideals of forms and points."""

from hilbgeom.modla.backend import BACKEND
from hilbgeom.modla.field import RankEngineConfig
from hilbgeom.modla.forms import Form
from hilbgeom.modla.sources import (
    GeneratorSource,
    PointSource,
    SliceSource,
    TruncatedSource,
)
from hilbgeom.modla.engine import (
    FitReport,
    LefschetzReport,
    initial_degree,
    quotient_by_generic_linears,
    reduction_number,
    slice_dim,
    slp_test,
    truncated_ideal_polynomial,
    wlp_test,
)

__all__ = [
    "BACKEND",
    "FitReport",
    "Form",
    "GeneratorSource",
    "LefschetzReport",
    "PointSource",
    "RankEngineConfig",
    "SliceSource",
    "TruncatedSource",
    "initial_degree",
    "quotient_by_generic_linears",
    "reduction_number",
    "slice_dim",
    "slp_test",
    "truncated_ideal_polynomial",
    "wlp_test",
]
