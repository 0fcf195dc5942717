"""Exact computations in the braided exterior algebras of Weyl groups."""

from .calculus import (
    algebra,
    antisymmetrize,
    braiding,
    canonical_theta,
    curvature,
    differential,
    h1,
    psi_i,
    quad_relations,
    quartic_relations_B,
    woronowicz_dim,
)
from .connections import (
    check_conjecture,
    run_suite,
    theta_general,
    theta_i,
    twisted_derivation,
    verify_identity,
    weyl_action,
)
from .linalg import SparseMatrix, kernel_basis, rank, rref
from .ncalg import AlgebraHandle, CapExceeded, NCPoly, hilbert_dims, normal_form
from .weyl import RootSystem, UnsupportedRootSystem, build_root_system, reflections

__all__ = [
    "AlgebraHandle", "CapExceeded", "NCPoly", "RootSystem", "SparseMatrix", "UnsupportedRootSystem",
    "algebra", "antisymmetrize", "braiding", "build_root_system", "canonical_theta", "check_conjecture",
    "curvature", "differential", "h1", "hilbert_dims", "kernel_basis", "normal_form", "psi_i",
    "quad_relations", "quartic_relations_B", "rank", "reflections", "rref", "run_suite",
    "theta_general", "theta_i", "twisted_derivation", "verify_identity", "weyl_action",
    "woronowicz_dim",
]
