"""Numerical laboratory for degenerate solitons of the quintic derivative NLS."""

from .grid import ComplexField, Grid
from .solitons import (
    ConservedTriple,
    SolitonParams,
    apply_Lambda,
    classify_params,
    conserved,
    conserved_profile,
    degenerate_params,
    find_kappa0,
    phase_eta,
    profile_Phi,
    soliton_at,
    soliton_phi,
    stationary_residual,
)

__all__ = [
    "ComplexField",
    "Grid",
    "ConservedTriple",
    "SolitonParams",
    "apply_Lambda",
    "classify_params",
    "conserved",
    "conserved_profile",
    "degenerate_params",
    "find_kappa0",
    "phase_eta",
    "profile_Phi",
    "soliton_at",
    "soliton_phi",
    "stationary_residual",
]
