"""Coordinate maps between fields: prime-field expansion and Hermitian packing.

Both work on raw vectors (last axis = coordinates).  Code-level wrappers live
in :mod:`eaqecc.entanglement`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import SpecMismatch
from .fields import GF, NormalPair, TraceOrthogonalBasis, field, find_trace_orthogonal_basis


@dataclass(frozen=True)
class ExpansionContext:
    """Data fixing the F_p-isomorphism F_p^(2mn) -> F_q^(2n).

    The first half of a vector is written in the trace-orthogonal basis, the
    second half in its dual basis, one block of m prime-field digits per
    coordinate.
    """

    field: GF
    basis: TraceOrthogonalBasis
    n: int

    @property
    def base(self) -> GF:
        return field(self.field.p)

    @property
    def m(self) -> int:
        return self.field.m


def expansion_context(F: GF, n: int, basis: TraceOrthogonalBasis | None = None) -> ExpansionContext:
    if basis is None:
        basis = find_trace_orthogonal_basis(F)
    elif basis.field != F:
        raise SpecMismatch(f"basis belongs to {basis.field}, not {F}")
    return ExpansionContext(F, basis, n)


def unexpand(ctx: ExpansionContext, V) -> np.ndarray:
    """(phi^E)^-1 : F_q^(2n) -> F_p^(2mn)."""
    V = np.asarray(V, dtype=np.int64)
    n, m = ctx.n, ctx.m
    if V.shape[-1] != 2 * n:
        raise SpecMismatch(f"expected vectors of length {2 * n}, got {V.shape[-1]}")
    a = ctx.basis.coords(V[..., :n])
    b = ctx.basis.dual_coords(V[..., n:])
    lead = V.shape[:-1]
    return np.concatenate([a.reshape(lead + (n * m,)), b.reshape(lead + (n * m,))], axis=-1)


def expand_vectors(ctx: ExpansionContext, X) -> np.ndarray:
    """phi^E : F_p^(2mn) -> F_q^(2n)."""
    X = np.asarray(X, dtype=np.int64)
    n, m = ctx.n, ctx.m
    if X.shape[-1] != 2 * n * m:
        raise SpecMismatch(f"expected vectors of length {2 * n * m}, got {X.shape[-1]}")
    lead = X.shape[:-1]
    a = ctx.basis.combine(X[..., : n * m].reshape(lead + (n, m)))
    b = ctx.basis.combine(X[..., n * m :].reshape(lead + (n, m)), dual=True)
    return np.concatenate([a, b], axis=-1)


def prime_span_rows(F: GF, rows) -> np.ndarray:
    """An F_p-basis of the F_q-span of ``rows``: every row times every p^t."""
    rows = np.asarray(rows, dtype=np.int64)
    if rows.shape[0] == 0 or F.m == 1:
        return rows
    betas = F.p ** np.arange(F.m, dtype=np.int64)
    return np.asarray(F.mul(betas[:, None, None], rows[None, :, :])).reshape(-1, rows.shape[1])


def pack(pair: NormalPair, V) -> np.ndarray:
    """phi(a|b) = w a + w^q b from F_q^(2n) to GF(q^2)^n."""
    F = pair.field
    V = np.asarray(V, dtype=np.int64)
    if V.shape[-1] % 2:
        raise SpecMismatch("packing needs an even-length (a|b) vector")
    n = V.shape[-1] // 2
    a = F.embed(V[..., :n])
    b = F.embed(V[..., n:])
    return np.asarray(F.add(F.mul(pair.w, a), F.mul(pair.w_q, b)))


def unpack(pair: NormalPair, X) -> np.ndarray:
    """Inverse of :func:`pack`."""
    F = pair.field
    X = np.asarray(X, dtype=np.int64)
    xq = F.conj(X)
    det = F.sub(F.mul(pair.w, pair.w), F.mul(pair.w_q, pair.w_q))
    a = F.div(F.sub(F.mul(X, pair.w), F.mul(xq, pair.w_q)), det)
    b = F.div(F.sub(F.mul(xq, pair.w), F.mul(X, pair.w_q)), det)
    return np.concatenate([np.atleast_1d(F.restrict(a)), np.atleast_1d(F.restrict(b))], axis=-1)
