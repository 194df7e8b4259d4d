"""Entanglement-assisted quantum error-correcting code parameters from classical codes."""

from .codes import LinearCode, dual, form, hull, minimum_distance, relative_distance, weight
from .entanglement import (
    EAParams,
    c_hermitian,
    c_symplectic,
    contract,
    ea_css,
    ea_from_parity_check_hermitian,
    ea_hermitian,
    ea_symplectic,
    expand_symplectic,
    extend_self_orthogonal,
    hermitian_pack,
    hermitian_unpack,
)
from .fields import GF, field, find_normal_pair, find_trace_orthogonal_basis
from .gv import gv_asymptotic, gv_feasible, gv_lhs, gv_search
from .linalg import Subspace, intersect, kernel, rank, rref
from .maps import expansion_context
from .puncture import (
    duality_identity_check,
    ea_from_punctured_css,
    ea_from_punctured_hermitian,
    ea_from_punctured_symplectic,
    puncture,
    shorten,
)

__version__ = "0.1.0"

__all__ = [
    "EAParams",
    "GF",
    "LinearCode",
    "Subspace",
    "c_hermitian",
    "c_symplectic",
    "contract",
    "dual",
    "duality_identity_check",
    "ea_css",
    "ea_from_parity_check_hermitian",
    "ea_from_punctured_css",
    "ea_from_punctured_hermitian",
    "ea_from_punctured_symplectic",
    "ea_hermitian",
    "ea_symplectic",
    "expand_symplectic",
    "expansion_context",
    "extend_self_orthogonal",
    "field",
    "find_normal_pair",
    "find_trace_orthogonal_basis",
    "form",
    "gv_asymptotic",
    "gv_feasible",
    "gv_lhs",
    "gv_search",
    "hermitian_pack",
    "hermitian_unpack",
    "hull",
    "intersect",
    "kernel",
    "minimum_distance",
    "puncture",
    "rank",
    "relative_distance",
    "rref",
    "shorten",
    "weight",
]
