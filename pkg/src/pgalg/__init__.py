"""Exact symbolic engine for presented algebras, their triangular matrix
representations, polynomial growth certificates, and truncated envelope
models."""

from .exactnum import (
    ExpPoly,
    GaussianRational,
    MultiPoly,
    Rational,
    exppoly_antiderivative,
    exppoly_mul,
    poly_substitute,
)
from .freealg import NCPoly, ParseError, apply_hom, nc_mul, parse
from .freelie import (
    Decomposed,
    GGen,
    LiePoly,
    ad_e,
    compose,
    enumerate_ggens,
    expand_g,
    straighten,
)
from .matrep import (
    FreeWord,
    TriMatrix,
    build_free_rep,
    build_qplane_rep,
    build_sl2_rep,
    free_upper_right,
    in_c2,
    upper_right_qplane,
)
from .presentations import (
    AqElement,
    LieData,
    Presentation,
    QPlaneElement,
    StepBudgetExceeded,
    lie_quotient,
    normal_form,
    qplane_decompose,
    qplane_recompose,
    sl2_eliminate_d,
)
from .pgrowth import (
    GrowthCertificate,
    certify,
    exp_is,
    growth_degree,
    radical_report,
)
from .envelope import (
    SeparationReport,
    TruncatedElement,
    env_from_poly,
    env_mul,
    separation_rank,
)

__version__ = "0.1.0"

__all__ = [
    "AqElement", "Decomposed", "ExpPoly", "FreeWord", "GGen",
    "GaussianRational", "GrowthCertificate", "LieData", "LiePoly",
    "MultiPoly", "NCPoly", "ParseError", "Presentation", "QPlaneElement",
    "Rational", "SeparationReport", "StepBudgetExceeded", "TriMatrix",
    "TruncatedElement", "ad_e", "apply_hom", "build_free_rep",
    "build_qplane_rep", "build_sl2_rep", "certify", "compose",
    "enumerate_ggens", "env_from_poly", "env_mul", "exp_is", "expand_g",
    "exppoly_antiderivative", "exppoly_mul", "free_upper_right",
    "growth_degree", "in_c2", "lie_quotient", "nc_mul", "normal_form",
    "parse", "poly_substitute", "qplane_decompose", "qplane_recompose",
    "radical_report", "separation_rank", "sl2_eliminate_d", "straighten",
    "upper_right_qplane",
]
