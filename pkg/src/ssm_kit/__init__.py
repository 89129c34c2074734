"""Exact Chern-Schwartz-MacPherson and Segre-Schwartz-MacPherson classes of
matrix Schubert cells and rank loci, with independent cross-check routes."""

from .cellgeom import ColumnSet, cell_geometry, closure_leq, enumerate_orbits, lambda_of_set, set_of_lambda
from .errors import ArgumentError, ConfigurationError, InternalConsistencyError, SsmKitError
from .genfun import INFINITY, fcsm_expr, fssm_expr, tssm
from .a2pp import phi_class, ssm_sigma_sieve, ssm_sigma_tssm
from .ringcore import Poly, TruncatedSeries, substitute, symmetrize
from .schurbasis import RationalSeriesExpr, SchurSeries, apply_rho, schur_expand, sss_expand, straighten
from .weightfn import csm_cell, ssm_cell, verify_interpolation_axioms, weight_function

__all__ = [
    "ArgumentError", "ColumnSet", "ConfigurationError", "INFINITY", "InternalConsistencyError",
    "Poly", "RationalSeriesExpr", "SchurSeries", "SsmKitError", "TruncatedSeries",
    "apply_rho", "cell_geometry", "closure_leq", "csm_cell", "enumerate_orbits", "fcsm_expr",
    "fssm_expr", "lambda_of_set", "phi_class", "schur_expand", "set_of_lambda", "sss_expand",
    "ssm_cell", "ssm_sigma_sieve", "ssm_sigma_tssm", "straighten", "substitute", "symmetrize",
    "tssm", "verify_interpolation_axioms", "weight_function",
]
