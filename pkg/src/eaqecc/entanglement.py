"""Entanglement counts and EAQECC parameters for the three constructions.

Every c is computed twice, once from a rank formula on the generator and once
from the hull dimension, and the two must agree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import maps
from .codes import (
    DEFAULT_BUDGET,
    LinearCode,
    dual,
    form,
    gram,
    hull,
    minimum_distance,
    relative_distance,
)
from .errors import DimTooLarge, InternalInconsistency, LayoutMismatch, ShapeMismatch, SpecMismatch
from .fields import GF, NormalPair, field, find_normal_pair
from .linalg import Subspace, as_matrix, matmul, null_basis, rank, transpose

JSON_KEYS = ("q", "n", "logical", "d", "d_is_bound", "d_edge_convention", "c", "mode")


@dataclass(frozen=True)
class EAParams:
    """[[n, logical, d; c]]_q.  ``d`` is None when the distance was skipped."""

    q: int
    n: int
    logical: int
    d: int | None
    c: int
    mode: str
    d_is_bound: bool = False
    d_edge_convention: bool = False

    @property
    def notation(self) -> str:
        if self.d is None:
            d = "?"
        else:
            d = f">={self.d}" if self.d_is_bound else str(self.d)
        return f"[[{self.n},{self.logical},{d};{self.c}]]_{self.q}"

    def to_dict(self) -> dict:
        out = {k: getattr(self, k) for k in JSON_KEYS}
        out["notation"] = self.notation
        return out


def _distance(A, B, kind, distance, budget, edge):
    """Relative distance with the empty-difference fallback ``edge()``."""
    if distance == "skip":
        return None, False
    if distance != "exact":
        raise ValueError(f"distance must be 'exact' or 'skip', not {distance!r}")
    d = relative_distance(A, B, kind, budget)
    if d == math.inf:
        d = edge()
        return (None if d == math.inf else int(d)), True
    return int(d), False


# -- symplectic ----------------------------------------------------------------


def symplectic_gram(C: LinearCode) -> np.ndarray:
    """H_X H_Z^T - H_Z H_X^T for the generator as supplied."""
    F = C.field
    HX, HZ = C.halves()
    return np.asarray(F.sub(matmul(F, HX, transpose(HZ)), matmul(F, HZ, transpose(HX)))).reshape(
        HX.shape[0], HX.shape[0]
    )


def c_symplectic(C: LinearCode) -> int:
    if C.layout != "symplectic":
        raise LayoutMismatch("c_symplectic needs the symplectic layout")
    r = rank(C.field, symplectic_gram(C)) if C.generator.shape[0] else 0
    via_hull = C.dim - hull(C, "symplectic").dim
    if r % 2 or r != via_hull:
        raise InternalInconsistency(f"symplectic rank {r} vs dim C - dim hull = {via_hull}")
    return r // 2


def ea_symplectic(C: LinearCode, distance: str = "exact", budget: int = DEFAULT_BUDGET) -> EAParams:
    if C.layout != "symplectic":
        raise LayoutMismatch("ea_symplectic needs the symplectic layout")
    n = C.n
    if C.dim > n:
        raise DimTooLarge(f"dim C = {C.dim} exceeds n = {n}")
    c = c_symplectic(C)
    k = n - C.dim
    d, edge = _distance(
        dual(C, "symplectic"),
        hull(C, "symplectic"),
        "symplectic",
        distance,
        budget,
        lambda: minimum_distance(C, "symplectic", budget),
    )
    return EAParams(C.field.q, n, k + c, d, c, "symplectic", False, edge)


# -- Hermitian -----------------------------------------------------------------


def hermitian_gram(F: GF, H) -> np.ndarray:
    """H H^* with H^* the conjugate transpose."""
    H = as_matrix(H)
    return matmul(F, H, transpose(F.conj(H)))


def c_hermitian(C: LinearCode) -> int:
    if C.layout != "plain":
        raise LayoutMismatch("c_hermitian needs the plain layout")
    F = C.field
    r = rank(F, hermitian_gram(F, C.generator)) if C.generator.shape[0] else 0
    via_hull = C.dim - hull(C, "hermitian").dim
    if r != via_hull:
        raise InternalInconsistency(f"rank(HH*) = {r} vs dim C - dim hull = {via_hull}")
    return r


def ea_hermitian(C: LinearCode, distance: str = "exact", budget: int = DEFAULT_BUDGET) -> EAParams:
    if C.layout != "plain":
        raise LayoutMismatch("ea_hermitian needs the plain layout")
    n = C.n
    k = n - 2 * C.dim
    if k < 0:
        raise DimTooLarge(f"2 dim C = {2 * C.dim} exceeds n = {n}")
    c = c_hermitian(C)
    d, edge = _distance(
        dual(C, "hermitian"),
        hull(C, "hermitian"),
        "hamming",
        distance,
        budget,
        lambda: minimum_distance(C, "hamming", budget),
    )
    return EAParams(C.field.subfield.q, n, k + c, d, c, "hermitian", False, edge)


def parity_check(D: LinearCode) -> np.ndarray:
    """Rows of a (Euclidean) parity-check matrix of D."""
    return null_basis(D.field, D.basis, D.length)


def ea_from_parity_check_hermitian(
    D: LinearCode, distance: str = "exact", budget: int = DEFAULT_BUDGET
) -> EAParams:
    """Parameters of the code generated by a parity-check matrix of D."""
    C = LinearCode(D.field, parity_check(D), "plain", D.length)
    params = ea_hermitian(C, distance, budget)
    expected = 2 * D.dim - D.length + params.c
    if params.logical != expected:
        raise InternalInconsistency(f"logical {params.logical} vs 2k - n + c = {expected}")
    return EAParams(**{**params.__dict__, "mode": "hermitian-check"})


def relative_hermitian_matrices(C: LinearCode, pair: NormalPair | None = None):
    """Matrices of the trace-alternating form on the stacked generator (wH ; w^q H).

    Returns (J, K, HH*) where K = (XY^* - X^(q) Y^T)/lambda restricted to the
    subfield and J = tr_{q^2/q}(K).
    """
    F = C.field
    pair = pair or find_normal_pair(F)
    H = as_matrix(C.generator, C.length)
    top = np.asarray(F.mul(pair.w, H)).reshape(H.shape)
    bottom = np.asarray(F.mul(pair.w_q, H)).reshape(H.shape)
    stacked = np.vstack([top, bottom])
    T = np.asarray(F.sub(hermitian_gram(F, stacked), matmul(F, F.conj(stacked), transpose(stacked))))
    ratio = np.asarray(F.div(T, pair.lam)).reshape(T.shape)
    K = np.asarray(F.restrict(ratio)).reshape(T.shape)
    J = np.asarray(F.restrict(F.add(ratio, F.conj(ratio)))).reshape(T.shape)
    return J, K, hermitian_gram(F, H)


# -- CSS -----------------------------------------------------------------------


def ea_css(C1: LinearCode, C2: LinearCode, distance: str = "exact", budget: int = DEFAULT_BUDGET) -> EAParams:
    if C1.field != C2.field:
        raise SpecMismatch(f"{C1.field} vs {C2.field}")
    if C1.layout != "plain" or C2.layout != "plain":
        raise LayoutMismatch("ea_css needs plain-layout codes")
    if C1.length != C2.length:
        raise ShapeMismatch(f"lengths {C1.length} and {C2.length} differ")
    F = C1.field
    n = C1.length
    H1, H2 = C1.generator, C2.generator
    empty = H1.shape[0] == 0 or H2.shape[0] == 0
    r12 = 0 if empty else rank(F, matmul(F, H1, transpose(H2)))
    r21 = 0 if empty else rank(F, matmul(F, H2, transpose(H1)))
    D1, D2 = dual(C1, "euclidean"), dual(C2, "euclidean")
    c1 = C1.dim - C1.intersection(D2).dim
    c2 = C2.dim - C2.intersection(D1).dim
    if not (r12 == r21 == c1 == c2) or c1 + c2 != 2 * r12:
        raise InternalInconsistency(f"CSS ranks {r12}, {r21} vs hull counts {c1}, {c2}")
    c = r12
    logical = n - C1.dim - C2.dim + c
    if distance == "skip":
        d, edge = None, False
    else:
        da = relative_distance(D1, C2.intersection(D1), "hamming", budget)
        db = relative_distance(D2, C1.intersection(D2), "hamming", budget)
        d, edge = min(da, db), False
        if d == math.inf:
            edge = True
            d = min(minimum_distance(C1, "hamming", budget), minimum_distance(C2, "hamming", budget))
        d = None if d == math.inf else int(d)
    return EAParams(F.q, n, logical, d, c, "css", True, edge)


# -- maps on codes -------------------------------------------------------------


def expand_symplectic(ctx: maps.ExpansionContext, C: LinearCode) -> LinearCode:
    """C_0 = (phi^E)^-1(C) as an F_p code with half-length m n."""
    if C.field != ctx.field or C.layout != "symplectic" or C.n != ctx.n:
        raise SpecMismatch("expansion context does not match the code")
    rows = maps.unexpand(ctx, maps.prime_span_rows(C.field, C.basis))
    C0 = LinearCode(ctx.base, rows, "symplectic", 2 * ctx.n * ctx.m)
    if C0.dim != ctx.m * C.dim:
        raise InternalInconsistency(f"expanded dimension {C0.dim} != {ctx.m} * {C.dim}")
    return C0


def contract(ctx: maps.ExpansionContext, C0: LinearCode) -> LinearCode:
    """F_q-span of phi^E(C_0)."""
    if C0.field != ctx.base or C0.layout != "symplectic" or C0.length != 2 * ctx.n * ctx.m:
        raise SpecMismatch("expansion context does not match the code")
    return LinearCode(ctx.field, maps.expand_vectors(ctx, C0.basis), "symplectic", 2 * ctx.n)


def quadratic_extension(F: GF) -> GF:
    """GF(q^2) whose registered subfield is F."""
    big = field(F.p, 2 * F.m)
    if big.subfield != F:
        raise SpecMismatch(f"{F} is not the registered subfield of {big}; use the default modulus")
    return big


def hermitian_pack(pair: NormalPair, v) -> np.ndarray:
    return maps.pack(pair, v)


def hermitian_unpack(pair: NormalPair, x) -> np.ndarray:
    return maps.unpack(pair, x)


# -- self-orthogonal extension -------------------------------------------------


def extend_self_orthogonal(C: LinearCode) -> LinearCode:
    """A self-orthogonal C' of half-length n + c projecting onto C.

    Hyperbolic pairs (e_i, f_i) of a hull complement are found by symplectic
    Gram-Schmidt in RREF order; e_i gets a unit tail in the new a-coordinates
    and f_i minus that unit in the new b-coordinates.
    """
    if C.layout != "symplectic":
        raise LayoutMismatch("extension needs the symplectic layout")
    F = C.field
    n = C.n
    H = hull(C, "symplectic")
    work = [r.copy() for r in C.space.complement_basis(H.space)]
    pairs = []
    while work:
        e = work.pop(0)
        vals = [int(form("symplectic", e, x, F)) for x in work]
        j = next((i for i, v in enumerate(vals) if v), None)
        if j is None:
            raise InternalInconsistency("hull complement is degenerate")
        f = np.asarray(F.div(work.pop(j), vals[j]))
        rest = []
        for x in work:
            xf = int(form("symplectic", x, f, F))
            xe = int(form("symplectic", x, e, F))
            x = np.asarray(F.add(F.sub(x, F.mul(xf, e)), F.mul(xe, f)))
            rest.append(x)
        work = rest
        pairs.append((e, f))
    c = len(pairs)
    half = n + c
    rows = []

    def place(v, ta=None, tb=None):
        out = np.zeros(2 * half, dtype=np.int64)
        out[:n] = v[:n]
        out[half : half + n] = v[n:]
        if ta is not None:
            out[n + ta] = 1
        if tb is not None:
            out[half + n + tb] = F.neg(1)
        return out

    for h in H.basis:
        rows.append(place(h))
    for i, (e, f) in enumerate(pairs):
        rows.append(place(e, ta=i))
        rows.append(place(f, tb=i))
    ext = LinearCode(F, np.array(rows, dtype=np.int64).reshape(-1, 2 * half), "symplectic", 2 * half)
    _check_extension(C, ext, c)
    return ext


def projection_coords(n: int, c: int) -> list[int]:
    """Coordinates 1..n and n+c+1..2n+c (0-based) of a half-length n+c code."""
    return list(range(n)) + list(range(n + c, 2 * n + c))


def _check_extension(C: LinearCode, ext: LinearCode, c: int):
    if c != c_symplectic(C):
        raise InternalInconsistency(f"extension used {c} pairs, rank formula gives {c_symplectic(C)}")
    if ext.n != C.n + c:
        raise InternalInconsistency("extension has the wrong length")
    if ext.dim != C.dim:
        raise InternalInconsistency("extension changed the dimension")
    if ext.dim and np.any(gram("symplectic", ext.basis, ext.basis, C.field)):
        raise InternalInconsistency("extension is not self-orthogonal")
    proj = Subspace(C.field, ext.basis[:, projection_coords(C.n, c)], C.length)
    if proj != C.space:
        raise InternalInconsistency("extension does not project onto C")


def css_as_symplectic(C1: LinearCode, C2: LinearCode) -> LinearCode:
    """C1 x C2 in the (a|b) layout."""
    F = C1.field
    n = C1.length
    a = np.hstack([C1.basis, np.zeros((C1.dim, n), dtype=np.int64)])
    b = np.hstack([np.zeros((C2.dim, n), dtype=np.int64), C2.basis])
    return LinearCode(F, np.vstack([a, b]), "symplectic", 2 * n)


__all__ = [
    "EAParams",
    "c_symplectic",
    "ea_symplectic",
    "c_hermitian",
    "ea_hermitian",
    "ea_from_parity_check_hermitian",
    "ea_css",
    "expand_symplectic",
    "contract",
    "hermitian_pack",
    "hermitian_unpack",
    "extend_self_orthogonal",
    "relative_hermitian_matrices",
    "symplectic_gram",
    "hermitian_gram",
]
