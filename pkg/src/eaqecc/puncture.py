"""Puncturing and shortening, and the EA codes obtained from punctured codes.

Each construction re-derives the dimensions it relies on and refuses to emit
parameters when they do not hold.
"""

from __future__ import annotations

import math

import numpy as np

from .codes import DEFAULT_BUDGET, LinearCode, dual, hull, minimum_distance, relative_distance
from .entanglement import EAParams, css_as_symplectic, ea_hermitian, ea_symplectic
from .errors import (
    BadRange,
    BudgetExceeded,
    DimensionClaimFailed,
    DimTooLarge,
    LayoutMismatch,
    NotNested,
    PreconditionViolated,
)
from .linalg import null_basis, transpose

FLAVORS = ("symplectic_pairs", "plain")


def _kept(C: LinearCode, c: int, flavor: str):
    if flavor not in FLAVORS:
        raise ValueError(f"unknown flavor {flavor!r}")
    want = "symplectic" if flavor == "symplectic_pairs" else "plain"
    if C.layout != want:
        raise LayoutMismatch(f"{flavor} needs the {want} layout")
    n = C.n
    if not 0 < c < n:
        raise BadRange(f"c = {c} must satisfy 0 < c < n = {n}")
    if flavor == "plain":
        return list(range(n - c)), list(range(n - c, n))
    keep = list(range(n - c)) + list(range(n, 2 * n - c))
    drop = list(range(n - c, n)) + list(range(2 * n - c, 2 * n))
    return keep, drop


def puncture(C: LinearCode, c: int, flavor: str = "symplectic_pairs") -> LinearCode:
    keep, _ = _kept(C, c, flavor)
    return LinearCode(C.field, C.basis[:, keep], C.layout, len(keep))


def shorten(C: LinearCode, c: int, flavor: str = "symplectic_pairs") -> LinearCode:
    keep, drop = _kept(C, c, flavor)
    F = C.field
    G = C.basis
    if G.shape[0] == 0:
        return LinearCode(F, G[:, keep], C.layout, len(keep))
    msgs = null_basis(F, transpose(G[:, drop]), G.shape[0])
    rows = np.zeros((msgs.shape[0], C.length), dtype=np.int64)
    for t in range(G.shape[0]):
        rows = np.asarray(F.add(rows, F.mul(msgs[:, t, None], G[t][None, :]))).reshape(rows.shape)
    return LinearCode(F, rows[:, keep], C.layout, len(keep))


def duality_identities(C: LinearCode, c: int, mode: str = "symplectic") -> dict:
    """Both puncturing/shortening identities; the second only for self-orthogonal C."""
    flavor = "symplectic_pairs" if mode == "symplectic" else "plain"
    P = puncture(C, c, flavor)
    D = dual(C, mode)
    first = dual(P, mode) == shorten(D, c, flavor)
    second = None
    if C <= D:
        second = hull(P, mode) == shorten(C, c, flavor)
    return {"dual_of_puncture_is_shortened_dual": first, "hull_of_puncture_is_shortening": second}


def duality_identity_check(C: LinearCode, c: int, mode: str = "symplectic") -> bool:
    res = duality_identities(C, c, mode)
    return bool(res["dual_of_puncture_is_shortened_dual"]) and res["hull_of_puncture_is_shortening"] is not False


def _bound(A, B, kind, distance, budget, edge_code):
    if distance == "skip":
        return None, False
    d = relative_distance(A, B, kind, budget)
    if d == math.inf:
        d = minimum_distance(edge_code, kind, budget)
        return (None if d == math.inf else int(d)), True
    return int(d), False


def _verify(C: LinearCode, c: int, mode: str, expected_hull: int, checks: dict) -> LinearCode:
    flavor = "symplectic_pairs" if mode == "symplectic" else "plain"
    P = puncture(C, c, flavor)
    S = shorten(C, c, flavor)
    hP = hull(P, mode)
    checks.update(
        dim_C=C.dim,
        dim_P=P.dim,
        dim_S=S.dim,
        dim_hull_P=hP.dim,
        expected_dim_hull_P=expected_hull,
        hull_of_puncture_is_shortening=hP == S,
        dual_of_puncture_is_shortened_dual=dual(P, mode) == shorten(dual(C, mode), c, flavor),
    )
    if P.dim != C.dim:
        raise DimensionClaimFailed("dim P(C) = dim C", C.dim, P.dim)
    if hP.dim != expected_hull:
        raise DimensionClaimFailed("dim (P(C) ∩ P(C)^⊥) = dim S(C)", expected_hull, hP.dim)
    return P


def _recompute(P: LinearCode, mode: str, distance: str, budget: int) -> dict:
    """Parameters of P(C) from the general formula, or the reason they do not exist."""
    try:
        params = ea_symplectic(P, distance, budget) if mode == "symplectic" else ea_hermitian(P, distance, budget)
    except (DimTooLarge, BudgetExceeded) as exc:
        return {"error": type(exc).__name__, "message": str(exc)}
    return params.to_dict()


def punctured_symplectic_report(C: LinearCode, c: int, distance: str = "exact", budget: int = DEFAULT_BUDGET):
    """(EAParams, checks, P(C)) for a symplectic self-orthogonal C."""
    if C.layout != "symplectic":
        raise LayoutMismatch("needs the symplectic layout")
    n = C.n
    if not 0 < c < n:
        raise BadRange(f"c = {c} must satisfy 0 < c < n = {n}")
    D = dual(C, "symplectic")
    if not C <= D:
        raise PreconditionViolated("C is not symplectic self-orthogonal")
    dH = minimum_distance(C, "hamming", budget)
    if not 2 * c <= dH - 1:
        raise PreconditionViolated(f"2c = {2 * c} exceeds d_H(C) - 1 = {dH - 1}")
    checks = {"precondition": f"2c <= d_H(C) - 1 with d_H(C) = {_fmt(dH)}"}
    P = _verify(C, c, "symplectic", C.dim - 2 * c, checks)
    k = n - C.dim
    d, edge = _bound(D, C, "symplectic", distance, budget, C)
    params = EAParams(C.field.q, n - c, k + c, d, c, "puncture-symplectic", True, edge)
    checks["recomputed_from_punctured_code"] = _recompute(P, "symplectic", distance, budget)
    return params, checks, P


def punctured_hermitian_report(C: LinearCode, c: int, distance: str = "exact", budget: int = DEFAULT_BUDGET):
    if C.layout != "plain":
        raise LayoutMismatch("needs the plain layout")
    n = C.n
    if not 0 < c < n:
        raise BadRange(f"c = {c} must satisfy 0 < c < n = {n}")
    k = n - 2 * C.dim
    if k < 0:
        raise PreconditionViolated(f"2 dim C = {2 * C.dim} exceeds n = {n}")
    D = dual(C, "hermitian")
    if not C <= D:
        raise PreconditionViolated("C is not Hermitian self-orthogonal")
    dH = minimum_distance(C, "hamming", budget)
    if not c <= dH - 1:
        raise PreconditionViolated(f"c = {c} exceeds d_H(C) - 1 = {dH - 1}")
    checks = {"precondition": f"c <= d_H(C) - 1 with d_H(C) = {_fmt(dH)}"}
    P = _verify(C, c, "hermitian", C.dim - c, checks)
    d, edge = _bound(D, C, "hamming", distance, budget, C)
    params = EAParams(C.field.subfield.q, n - c, k + c, d, c, "puncture-hermitian", True, edge)
    checks["recomputed_from_punctured_code"] = _recompute(P, "hermitian", distance, budget)
    return params, checks, P


def punctured_css_report(
    C1: LinearCode, C2: LinearCode, c: int, distance: str = "exact", budget: int = DEFAULT_BUDGET
):
    if C1.layout != "plain" or C2.layout != "plain":
        raise LayoutMismatch("needs plain-layout codes")
    if C1.field != C2.field or C1.length != C2.length:
        raise LayoutMismatch("C1 and C2 must share field and length")
    n = C1.n
    if not 0 < c < n:
        raise BadRange(f"c = {c} must satisfy 0 < c < n = {n}")
    if not C2 <= C1:
        raise NotNested("C2 is not contained in C1")
    D1 = dual(C1, "euclidean")
    d2 = minimum_distance(C2, "hamming", budget)
    d1p = minimum_distance(D1, "hamming", budget)
    if not c <= min(d2, d1p) - 1:
        raise PreconditionViolated(f"c = {c} exceeds min(d_H(C2), d_H(C1^⊥)) - 1 = {min(d2, d1p) - 1}")
    checks = {"precondition": f"c <= min(d_H(C2), d_H(C1^⊥)) - 1 with values {_fmt(d2)}, {_fmt(d1p)}"}
    C0 = css_as_symplectic(C2, D1)
    P = _verify(C0, c, "symplectic", C0.dim - 2 * c, checks)
    if distance == "skip":
        d, edge = None, False
    else:
        D2 = dual(C2, "euclidean")
        d = min(relative_distance(C1, C2, "hamming", budget), relative_distance(D2, D1, "hamming", budget))
        edge = d == math.inf
        if edge:
            d = min(d2, d1p)
        d = None if d == math.inf else int(d)
    params = EAParams(C1.field.q, n - c, C1.dim - C2.dim + c, d, c, "puncture-css", True, edge)
    checks["recomputed_from_punctured_code"] = _recompute(P, "symplectic", distance, budget)
    return params, checks, P


def ea_from_punctured_symplectic(C, c, distance="exact", budget=DEFAULT_BUDGET) -> EAParams:
    return punctured_symplectic_report(C, c, distance, budget)[0]


def ea_from_punctured_hermitian(C, c, distance="exact", budget=DEFAULT_BUDGET) -> EAParams:
    return punctured_hermitian_report(C, c, distance, budget)[0]


def ea_from_punctured_css(C1, C2, c, distance="exact", budget=DEFAULT_BUDGET) -> EAParams:
    return punctured_css_report(C1, C2, c, distance, budget)[0]


def _fmt(d):
    return "inf" if d == math.inf else int(d)
