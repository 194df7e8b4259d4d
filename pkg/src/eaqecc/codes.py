"""Linear codes, their five dualities, hulls, weights and exhaustive distances."""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import maps
from .errors import BudgetExceeded, InternalInconsistency, LayoutMismatch, SpecMismatch
from .fields import GF, field, find_normal_pair
from .linalg import Subspace, as_matrix, dot, intersect, kernel, rank

MODES = ("euclidean", "hermitian", "symplectic", "trace_symplectic", "trace_alternating")
SYMPLECTIC_MODES = ("symplectic", "trace_symplectic")
DEFAULT_BUDGET = 2**26


class LinearCode:
    """An F_q-linear code given by generator rows.

    ``generator`` keeps the rows as supplied (possibly redundant); ``space``
    is the canonical row space used for comparisons.  With
    ``layout="symplectic"`` vectors are read as (a|b) with half-length n.
    """

    def __init__(self, F: GF, rows, layout: str = "plain", length: int | None = None):
        if layout not in ("plain", "symplectic"):
            raise LayoutMismatch(f"unknown layout {layout!r}")
        rows = as_matrix(rows, length)
        if length is None:
            length = rows.shape[1]
        if layout == "symplectic" and length % 2:
            raise LayoutMismatch("symplectic layout needs an even length")
        self.field = F
        self.layout = layout
        self.length = length
        self.generator = rows
        self.space = Subspace(F, rows, length)

    @classmethod
    def from_space(cls, space: Subspace, layout: str = "plain") -> "LinearCode":
        return cls(space.field, space.basis, layout, space.ambient)

    @property
    def n(self) -> int:
        return self.length // 2 if self.layout == "symplectic" else self.length

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def basis(self) -> np.ndarray:
        return self.space.basis

    def halves(self, rows=None):
        if self.layout != "symplectic":
            raise LayoutMismatch("halves only exist for the symplectic layout")
        rows = self.generator if rows is None else rows
        return rows[:, : self.n], rows[:, self.n :]

    def __eq__(self, other):
        return isinstance(other, LinearCode) and self.layout == other.layout and self.space == other.space

    def __hash__(self):
        return hash((self.layout, self.space))

    def __repr__(self):
        return f"LinearCode([{self.length}, {self.dim}] over {self.field}, layout={self.layout})"

    def __le__(self, other: "LinearCode") -> bool:
        return self.space <= other.space

    def _same(self, other: "LinearCode"):
        if self.layout != other.layout or self.length != other.length:
            raise LayoutMismatch(f"{self!r} vs {other!r}")

    def intersection(self, other: "LinearCode") -> "LinearCode":
        self._same(other)
        return LinearCode.from_space(intersect(self.space, other.space), self.layout)

    def __add__(self, other: "LinearCode") -> "LinearCode":
        self._same(other)
        return LinearCode.from_space(self.space + other.space, self.layout)

    def is_self_orthogonal(self, mode: str) -> bool:
        return self <= dual(self, mode)

    def codewords(self) -> np.ndarray:
        """All q^dim codewords; only for tiny codes."""
        return _span_table(self.field, self.basis)


def zero_code(F: GF, length: int, layout: str = "plain") -> LinearCode:
    return LinearCode(F, np.zeros((0, length), dtype=np.int64), layout, length)


def full_code(F: GF, length: int, layout: str = "plain") -> LinearCode:
    return LinearCode(F, np.eye(length, dtype=np.int64), layout, length)


def _check_mode(C_or_field, mode: str, layout: str | None):
    if mode not in MODES:
        raise ValueError(f"unknown duality mode {mode!r}")
    F = C_or_field
    if mode in ("hermitian", "trace_alternating"):
        F.subfield  # raises NoSubfieldRegistered
    if layout is None:
        return
    if mode in SYMPLECTIC_MODES and layout != "symplectic":
        raise LayoutMismatch(f"{mode} duality needs the symplectic layout")
    if mode not in SYMPLECTIC_MODES and layout != "plain":
        raise LayoutMismatch(f"{mode} duality needs the plain layout")


def form(mode: str, u, v, F: GF):
    """Evaluate one of the bilinear/sesquilinear/trace forms on vectors u, v.

    Leading axes broadcast.  Trace forms return prime-field values.
    """
    _check_mode(F, mode, None)
    u = np.asarray(u, dtype=np.int64)
    v = np.asarray(v, dtype=np.int64)
    if u.shape[-1] != v.shape[-1]:
        raise LayoutMismatch("vectors have different lengths")
    if mode == "euclidean":
        return dot(F, u, v)
    if mode == "hermitian":
        return dot(F, F.conj(u), v)
    if mode in SYMPLECTIC_MODES:
        if u.shape[-1] % 2:
            raise LayoutMismatch("symplectic forms need even-length vectors")
        n = u.shape[-1] // 2
        s = F.sub(dot(F, u[..., :n], v[..., n:]), dot(F, v[..., :n], u[..., n:]))
        return s if mode == "symplectic" else F.trace(s)
    pair = find_normal_pair(F)
    z = F.sub(dot(F, u, F.conj(v)), dot(F, F.conj(u), v))
    ratio = F.div(z, pair.lam)
    return F.subfield.trace(F.restrict(ratio))


def gram(mode: str, X, Y, F: GF) -> np.ndarray:
    """Matrix of form values between the rows of X and the rows of Y."""
    X = as_matrix(X)
    Y = as_matrix(Y)
    return np.asarray(form(mode, X[:, None, :], Y[None, :, :], F)).reshape(X.shape[0], Y.shape[0])


def _dual_space(C: LinearCode, mode: str) -> Subspace:
    F = C.field
    G = C.basis
    L = C.length
    if C.dim == 0:
        return Subspace.full(F, L)
    if mode == "euclidean":
        return kernel(F, G, L)
    if mode == "hermitian":
        return kernel(F, F.conj(G), L)
    if mode == "symplectic":
        a, b = C.halves(G)
        return kernel(F, np.hstack([np.asarray(F.neg(b)).reshape(b.shape), a]), L)
    if mode == "trace_symplectic":
        return _trace_symplectic_dual(C)
    return _prime_form_dual(C, "trace_alternating")


def _trace_symplectic_dual(C: LinearCode) -> Subspace:
    F = C.field
    if F.m == 1:
        return _dual_space(C, "symplectic")
    ctx = maps.expansion_context(F, C.n)
    P = ctx.base
    expanded = maps.unexpand(ctx, maps.prime_span_rows(F, C.basis))
    a = expanded[:, : C.n * F.m]
    b = expanded[:, C.n * F.m :]
    prime_dual = kernel(P, np.hstack([(-b) % P.p, a]), 2 * C.n * F.m)
    contracted = Subspace(F, maps.expand_vectors(ctx, prime_dual.basis), C.length)
    if prime_dual.dim != F.m * contracted.dim:
        raise InternalInconsistency(
            f"trace-symplectic dual has F_p-dimension {prime_dual.dim}, "
            f"its F_q-span has dimension {contracted.dim}"
        )
    return contracted


def _prime_form_dual(C: LinearCode, mode: str) -> Subspace:
    """Dual for an F_p-bilinear form computed in prime-field coordinates."""
    F = C.field
    P = field(F.p)
    L = C.length
    m = F.m
    X = maps.prime_span_rows(F, C.basis)
    betas = F.p ** np.arange(m, dtype=np.int64)
    E = np.zeros((L * m, L), dtype=np.int64)
    for k in range(L):
        E[k * m : (k + 1) * m, k] = betas
    R = gram(mode, X, E, F)
    prime_dual = kernel(P, R, L * m)
    back = (prime_dual.basis.reshape(-1, L, m) @ F._pw).reshape(-1, L)
    span = Subspace(F, back, L)
    if prime_dual.dim != m * span.dim:
        raise InternalInconsistency(
            f"{mode} dual has F_p-dimension {prime_dual.dim}, its span has dimension {span.dim}"
        )
    return span


def dual(C: LinearCode, mode: str) -> LinearCode:
    _check_mode(C.field, mode, C.layout)
    return LinearCode.from_space(_dual_space(C, mode), C.layout)


def hull(C: LinearCode, mode: str) -> LinearCode:
    return C.intersection(dual(C, mode))


def weight(v, kind: str = "hamming") -> int | np.ndarray:
    """Hamming or symplectic weight along the last axis."""
    v = np.asarray(v)
    if kind == "hamming":
        w = np.count_nonzero(v, axis=-1)
    elif kind == "symplectic":
        if v.shape[-1] % 2:
            raise LayoutMismatch("symplectic weight needs an even-length vector")
        n = v.shape[-1] // 2
        w = np.count_nonzero((v[..., :n] != 0) | (v[..., n:] != 0), axis=-1)
    else:
        raise ValueError(f"unknown weight kind {kind!r}")
    return int(w) if np.ndim(w) == 0 else w


# -- exhaustive enumeration ----------------------------------------------------


def _span_table(F: GF, rows) -> np.ndarray:
    """All F-combinations of ``rows``; the first row varies slowest."""
    rows = as_matrix(rows)
    out = np.zeros((1, rows.shape[1]), dtype=np.int64)
    scalars = np.arange(F.q, dtype=np.int64)
    for r in rows:
        step = np.asarray(F.mul(scalars[:, None], r[None, :]))
        out = np.asarray(F.add(out[:, None, :], step[None, :, :])).reshape(-1, rows.shape[1])
    return out


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("EAQECC_THREADS", "1")))
    except ValueError:
        return 1


def _search(F: GF, high_rows, low_rows, kind, keep, skip_first_high, budget, workers):
    """Minimum weight over {h + l} for h in span(high_rows), l in span(low_rows).

    ``keep(words)`` returns a mask of candidate words that count; when
    ``skip_first_high`` is set the zero combination of ``high_rows`` is skipped.
    """
    kh, kl = high_rows.shape[0], low_rows.shape[0]
    total = F.q ** (kh + kl)
    if total > budget:
        raise BudgetExceeded(total, budget)
    length = high_rows.shape[1]
    low = _span_table(F, low_rows) if kl else np.zeros((1, length), dtype=np.int64)
    n_high = F.q**kh
    block = max(1, (1 << 20) // max(1, low.shape[0] * length))
    qpow = F.q ** np.arange(kh - 1, -1, -1, dtype=np.int64) if kh else np.zeros(0, dtype=np.int64)

    def run(start):
        stop = min(start + block, n_high)
        idx = np.arange(start, stop, dtype=np.int64)
        if skip_first_high:
            idx = idx[idx != 0]
        if idx.size == 0:
            return math.inf
        digits = (idx[:, None] // qpow[None, :]) % F.q if kh else np.zeros((idx.size, 0), dtype=np.int64)
        high = np.zeros((idx.size, length), dtype=np.int64)
        for j in range(kh):
            high = np.asarray(F.add(high, F.mul(digits[:, j, None], high_rows[j][None, :])))
        words = np.asarray(F.add(high[:, None, :], low[None, :, :])).reshape(-1, length)
        w = weight(words, kind)
        w = np.atleast_1d(w)
        order = np.argsort(w, kind="stable")
        best = math.inf
        # check candidates in increasing weight; stop at the first kept one
        for chunk in np.array_split(order, max(1, order.size // 4096)):
            if chunk.size == 0 or w[chunk[0]] >= best:
                break
            mask = keep(words[chunk])
            if np.any(mask):
                best = min(best, int(w[chunk][mask].min()))
                break
        return best

    starts = range(0, n_high, block)
    if workers > 1 and len(starts) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run, starts))
    else:
        results = [run(s) for s in starts]
    return min(results, default=math.inf)


def relative_distance(
    A: LinearCode,
    B: LinearCode | None = None,
    kind: str = "hamming",
    budget: int = DEFAULT_BUDGET,
    method: str = "full",
    workers: int | None = None,
):
    """Minimum weight of a codeword of A that is not in B.

    Returns ``math.inf`` when A is contained in B (empty difference).  With
    ``B=None`` this is the ordinary minimum distance of A.

    Args:
        method: ``"full"`` enumerates A and tests membership in B;
            ``"coset"`` enumerates (A ∩ B) + w over nonzero w in a complement.
    """
    if B is None:
        B = zero_code(A.field, A.length, A.layout)
    A._same(B)
    if A.field != B.field:
        raise SpecMismatch(f"{A.field} vs {B.field}")
    if kind == "symplectic" and A.layout != "symplectic":
        raise LayoutMismatch("symplectic weight needs the symplectic layout")
    workers = _workers() if workers is None else workers
    F = A.field
    if method == "full":
        if A.dim == 0:
            return math.inf
        G = A.basis
        kl = min(A.dim, max(1, int(math.log(4096, F.q))))
        member = B.space
        keep = (lambda words: ~member.contains(words)) if member.dim else (lambda words: np.any(words, axis=1))
        return _search(F, G[: A.dim - kl], G[A.dim - kl :], kind, keep, False, budget, workers)
    if method == "coset":
        H = intersect(A.space, B.space)
        W = A.space.complement_basis(H)
        if W.shape[0] == 0:
            return math.inf
        return _search(F, W, H.basis, kind, lambda words: np.ones(len(words), bool), True, budget, workers)
    raise ValueError(f"unknown method {method!r}")


def minimum_distance(C: LinearCode, kind: str = "hamming", budget: int = DEFAULT_BUDGET):
    return relative_distance(C, None, kind, budget)


def project(C: LinearCode, coords, layout: str | None = None) -> LinearCode:
    """Image of C under keeping the listed coordinates (in order)."""
    coords = list(coords)
    return LinearCode(C.field, C.basis[:, coords], layout or C.layout, len(coords))


def rank_of(F: GF, A) -> int:
    return rank(F, A)
