"""Dense exact linear algebra over a :class:`~eaqecc.fields.GF`.

Matrices are plain 2-D ``int64`` numpy arrays of element encodings; every
function takes the field as its first argument.  Vectors are treated as rows
throughout, so the kernel of ``A`` is ``{v : v A^T = 0}``.
"""

from __future__ import annotations

import numpy as np

from .errors import AmbientMismatch, ShapeMismatch
from .fields import GF


def as_matrix(A, cols: int | None = None) -> np.ndarray:
    A = np.asarray(A, dtype=np.int64)
    if A.ndim == 1:
        if A.size == 0 and cols is not None:
            return A.reshape(0, cols)
        A = A.reshape(1, -1)
    if A.ndim != 2:
        raise ShapeMismatch(f"expected a matrix, got shape {A.shape}")
    return A


def rref(F: GF, A):
    """Gauss-Jordan reduction.

    Returns:
        (R, rank, pivots) where R has the same shape as A, its first ``rank``
        rows are the canonical reduced rows and the rest are zero.
    """
    R = as_matrix(A).copy()
    rows, cols = R.shape
    pivots: list[int] = []
    r = 0
    for col in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(R[r:, col])
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            R[[r, piv]] = R[[piv, r]]
        lead = R[r, col]
        if lead != 1:
            R[r] = F.mul(R[r], F.inv(lead))
        others = np.flatnonzero(R[:, col])
        others = others[others != r]
        if others.size:
            R[others] = F.sub(R[others], F.mul(R[others, col][:, None], R[r][None, :]))
        pivots.append(col)
        r += 1
    return R, r, pivots


def rank(F: GF, A) -> int:
    A = as_matrix(A)
    if A.size == 0:
        return 0
    return rref(F, A)[1]


def transpose(A) -> np.ndarray:
    return as_matrix(A).T.copy()


def matmul(F: GF, A, B) -> np.ndarray:
    A = as_matrix(A)
    B = as_matrix(B)
    if A.shape[1] != B.shape[0]:
        raise ShapeMismatch(f"cannot multiply {A.shape} by {B.shape}")
    k = A.shape[1]
    if F.m == 1 and k * (F.p - 1) ** 2 < 2**62:
        return (A @ B) % F.p
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for t in range(k):
        out = F.add(out, F.mul(A[:, t, None], B[None, t, :]))
    return np.asarray(out).reshape(A.shape[0], B.shape[1])


def entrywise_frobenius(F: GF, A, s: int) -> np.ndarray:
    A = as_matrix(A)
    return np.asarray(F.frob(A, s)).reshape(A.shape)


def add(F: GF, A, B) -> np.ndarray:
    A, B = as_matrix(A), as_matrix(B)
    if A.shape != B.shape:
        raise ShapeMismatch(f"{A.shape} vs {B.shape}")
    return np.asarray(F.add(A, B)).reshape(A.shape)


def sub(F: GF, A, B) -> np.ndarray:
    A, B = as_matrix(A), as_matrix(B)
    if A.shape != B.shape:
        raise ShapeMismatch(f"{A.shape} vs {B.shape}")
    return np.asarray(F.sub(A, B)).reshape(A.shape)


def null_basis(F: GF, A, cols: int | None = None) -> np.ndarray:
    """Rows spanning {v : v A^T = 0} (not canonicalised)."""
    A = as_matrix(A, cols)
    n = A.shape[1] if cols is None else cols
    if A.shape[0] == 0:
        return np.eye(n, dtype=np.int64)
    R, r, pivots = rref(F, A)
    free = [c for c in range(n) if c not in set(pivots)]
    N = np.zeros((len(free), n), dtype=np.int64)
    for i, f in enumerate(free):
        N[i, f] = 1
        for row, pc in enumerate(pivots):
            N[i, pc] = F.neg(R[row, f])
    return N


class Subspace:
    """Row space kept in canonical RREF, so equal spaces have equal bases."""

    __slots__ = ("field", "basis", "ambient", "pivots")

    def __init__(self, F: GF, rows, ambient: int | None = None):
        rows = as_matrix(rows, ambient)
        if ambient is None:
            ambient = rows.shape[1]
        if rows.shape[1] != ambient:
            raise AmbientMismatch(f"rows have length {rows.shape[1]}, ambient is {ambient}")
        if rows.shape[0]:
            R, r, pivots = rref(F, rows)
            rows = R[:r]
        else:
            pivots = []
        self.field = F
        self.basis = rows
        self.ambient = ambient
        self.pivots = list(pivots)

    @classmethod
    def zero(cls, F: GF, ambient: int) -> "Subspace":
        return cls(F, np.zeros((0, ambient), dtype=np.int64), ambient)

    @classmethod
    def full(cls, F: GF, ambient: int) -> "Subspace":
        return cls(F, np.eye(ambient, dtype=np.int64), ambient)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.field == other.field
            and self.ambient == other.ambient
            and np.array_equal(self.basis, other.basis)
        )

    def __hash__(self):
        return hash((self.field, self.ambient, self.basis.tobytes()))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient}, {self.field})"

    def _check(self, other: "Subspace"):
        if self.field != other.field or self.ambient != other.ambient:
            raise AmbientMismatch(f"{self!r} vs {other!r}")

    def residual(self, vectors) -> np.ndarray:
        """Reduce vectors against the basis; zero rows are members."""
        F = self.field
        V = as_matrix(vectors, self.ambient)
        for row, pc in enumerate(self.pivots):
            coef = V[:, pc]
            if np.any(coef):
                V = np.asarray(F.sub(V, F.mul(coef[:, None], self.basis[row][None, :])))
        return V.reshape(-1, self.ambient)

    def contains(self, vectors) -> np.ndarray:
        """Boolean membership per row."""
        return ~np.any(self.residual(vectors), axis=1)

    def __contains__(self, vector) -> bool:
        return bool(self.contains(vector)[0])

    def issubspace(self, other: "Subspace") -> bool:
        self._check(other)
        return bool(np.all(other.contains(self.basis))) if self.dim else True

    def __le__(self, other):
        return self.issubspace(other)

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace(self.field, np.vstack([self.basis, other.basis]), self.ambient)

    def perp(self) -> "Subspace":
        """Euclidean orthogonal complement."""
        return kernel(self.field, self.basis, self.ambient)

    def complement_basis(self, inner: "Subspace") -> np.ndarray:
        """Rows extending a basis of ``inner`` (a subspace of self) to one of self."""
        self._check(inner)
        picked = []
        current = inner
        for row in self.basis:
            if row not in current:
                picked.append(row)
                current = current + Subspace(self.field, row[None, :], self.ambient)
        if not picked:
            return np.zeros((0, self.ambient), dtype=np.int64)
        return np.array(picked, dtype=np.int64)


def kernel(F: GF, A, cols: int | None = None) -> Subspace:
    A = as_matrix(A, cols)
    n = A.shape[1] if cols is None else cols
    return Subspace(F, null_basis(F, A, n), n)


def intersect(U: Subspace, V: Subspace) -> Subspace:
    """U ∩ V as the kernel of the stacked Euclidean complements."""
    U._check(V)
    if U.dim == 0 or V.dim == 0:
        return Subspace.zero(U.field, U.ambient)
    dual_rows = np.vstack([null_basis(U.field, U.basis, U.ambient), null_basis(V.field, V.basis, V.ambient)])
    return kernel(U.field, dual_rows, U.ambient)


def intersect_zassenhaus(U: Subspace, V: Subspace) -> Subspace:
    """Independent route for U ∩ V, kept for cross-checking."""
    U._check(V)
    n = U.ambient
    F = U.field
    if U.dim == 0 or V.dim == 0:
        return Subspace.zero(F, n)
    top = np.hstack([U.basis, U.basis])
    bottom = np.hstack([V.basis, np.zeros_like(V.basis)])
    R, r, _ = rref(F, np.vstack([top, bottom]))
    rows = R[:r]
    picked = rows[~np.any(rows[:, :n], axis=1)][:, n:]
    return Subspace(F, picked, n)


def field_sum(F: GF, X, axis: int = -1):
    """Sum of field elements along ``axis``."""
    X = np.asarray(X, dtype=np.int64)
    if F.m == 1:
        return F._out(X.sum(axis=axis) % F.p)
    if F.p == 2:
        return F._out(np.bitwise_xor.reduce(X, axis=axis))
    d = F._digits(X)
    ax = axis if axis >= 0 else axis - 1
    return F._out((d.sum(axis=ax) % F.p) @ F._pw)


def dot(F: GF, u, v):
    """Euclidean product along the last axis, broadcasting leading axes."""
    return field_sum(F, F.mul(u, v), axis=-1)
