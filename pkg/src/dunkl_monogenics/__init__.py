"""Exact Dunkl-Dirac computer algebra: operators, symmetries, projections and monogenic bases."""
from .bases import BasisError, BasisSet, Bases, expected_dim
from .clifford import CliffordElement, SpinorPoly, SpinorSpace
from .dunkl import DunklSetting, Weighted
from .operators import IdentityReport, Ops, verify_identity
from .poly import Poly
from .projections import ProjectionError, proj_h_to_m, proj_harmonic, proj_monogenic, xu_harmonic
from .roots import RootSystem, RootSystemError, b2, build_group, from_roots, z2
from .suites import run_suite, suite_names

__all__ = [
    "BasisError", "BasisSet", "Bases", "expected_dim", "CliffordElement", "SpinorPoly",
    "SpinorSpace", "DunklSetting", "Weighted", "IdentityReport", "Ops", "verify_identity",
    "Poly", "ProjectionError", "proj_h_to_m", "proj_harmonic", "proj_monogenic", "xu_harmonic",
    "RootSystem", "RootSystemError", "b2", "build_group", "from_roots", "z2", "run_suite",
    "suite_names",
]
