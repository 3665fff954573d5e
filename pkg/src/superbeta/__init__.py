"""Grassmann algebra, Berezin integration, supermatrices and the beta super-integral."""

from . import berezin, beta, errors, grassmann, quad, specfun, supergrass, supermatrix
from ._kernels import BACKEND
from .berezin import change_of_variables_odd, integrate_all, integrate_one, integrate_over, substitute
from .beta import (
    BetaParams,
    ClassicalParams,
    GeneralSuperBetaParams,
    beta_super_closed,
    beta_super_numeric,
    classical_phi,
    classical_phi_closed,
    general_superbeta,
    phi_super,
    phi_super_raw,
)
from .errors import DomainError
from .grassmann import GrassmannAlgebra, GrassmannElement, OddMonomial, Parity, invert, power
from .quad import gauss_jacobi, integrate_halfline
from .specfun import beta_classical, gamma, gen_binomial, hyp2f1
from .supergrass import BETA_CHART, Chart, chart_count, charts, reduce, transition
from .supermatrix import SuperMatrix, berezinian, inverse

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BETA_CHART",
    "BetaParams",
    "Chart",
    "ClassicalParams",
    "DomainError",
    "GeneralSuperBetaParams",
    "GrassmannAlgebra",
    "GrassmannElement",
    "OddMonomial",
    "Parity",
    "SuperMatrix",
    "berezin",
    "berezinian",
    "beta",
    "beta_classical",
    "beta_super_closed",
    "beta_super_numeric",
    "change_of_variables_odd",
    "chart_count",
    "charts",
    "classical_phi",
    "classical_phi_closed",
    "errors",
    "gamma",
    "gauss_jacobi",
    "gen_binomial",
    "general_superbeta",
    "grassmann",
    "hyp2f1",
    "integrate_all",
    "integrate_halfline",
    "integrate_one",
    "integrate_over",
    "inverse",
    "invert",
    "phi_super",
    "phi_super_raw",
    "power",
    "quad",
    "reduce",
    "specfun",
    "substitute",
    "supergrass",
    "supermatrix",
    "transition",
]
