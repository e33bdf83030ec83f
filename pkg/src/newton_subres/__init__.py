"""Generalized companion subresultants of several polynomials in Newton basis."""

from .algebra import Matrix, PolyMatrix, det_exact, det_polymatrix, mat_poly_eval
from .companion import CompanionMatrix, companion_matrix, modular_defect, shift_defect
from .errors import SubresError
from .gcdsolve import GcdReport, gcd_via_sres, glex_enumerate, icdeg_direct
from .kernels import BACKEND
from .parser import ParseError, parse_poly
from .poly import NewtonPoly, PowerPoly, newton_to_power, poly_divmod, power_to_newton, transition_matrix
from .subres import (
    DeltaIndex,
    PolySystem,
    SubresultantResult,
    build_N,
    build_X,
    build_X_newton,
    delta_params,
    detp,
    leading_coeff_sres,
    sres,
    sres_single_det,
)

__version__ = "0.1.0"
