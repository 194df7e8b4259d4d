"""Index calculus on a basis compatible with a geometric decomposition.

Indices are 0-based here; the CLI converts from and to 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .codes import LinearCode, dual, gram, hull
from .errors import EllipticOutsideChar2, InternalInconsistency, NotADecomposition, UndefinedPrime
from .fields import GF
from .linalg import as_matrix, rank

HYPERBOLIC, LINE, ELLIPTIC = "hyperbolic", "line", "elliptic"
_ORDER = {HYPERBOLIC: 0, LINE: 1, ELLIPTIC: 2}


@dataclass(frozen=True)
class Block:
    kind: str
    start: int
    g: int | None = None

    @property
    def indices(self) -> tuple[int, ...]:
        return (self.start,) if self.kind == LINE else (self.start, self.start + 1)

    def to_dict(self) -> dict:
        out = {"type": self.kind, "indices": [i + 1 for i in self.indices]}
        if self.g is not None:
            out["g"] = self.g
        return out


@dataclass(frozen=True)
class GramProfile:
    field: GF
    basis: np.ndarray
    blocks: tuple[Block, ...]
    mode: str
    _role: dict = dc_field(default_factory=dict, compare=False, repr=False)

    @property
    def n(self) -> int:
        return self.basis.shape[0]

    def role(self, i: int) -> tuple[str, int]:
        """(block kind, position 0 or 1 within the block) for index i."""
        return self._role[i]

    def code(self, I) -> LinearCode:
        I = sorted(I)
        rows = self.basis[I] if I else np.zeros((0, self.n), dtype=np.int64)
        return LinearCode(self.field, rows, "plain", self.n)


def validate(F: GF, V, mode: str = "euclidean") -> GramProfile:
    """Read off the block structure of the Gram matrix of the rows of V."""
    if mode not in ("euclidean", "hermitian"):
        raise ValueError(f"mode must be euclidean or hermitian, not {mode!r}")
    V = as_matrix(V)
    n = V.shape[0]
    if V.shape[1] != n or rank(F, V) != n:
        raise NotADecomposition("basis must be a square matrix of full rank")
    G = gram(mode, V, V, F)
    blocks = []
    i = 0
    while i < n:
        if G[i, i]:
            blocks.append(Block(LINE, i, int(G[i, i])))
            i += 1
            continue
        if i + 1 >= n or G[i, i + 1] != 1 or G[i + 1, i] != 1:
            raise NotADecomposition(f"isotropic vector {i + 1} is not paired with the next one")
        if G[i + 1, i + 1] == 0:
            blocks.append(Block(HYPERBOLIC, i))
        elif G[i + 1, i + 1] == 1:
            if F.p != 2:
                raise EllipticOutsideChar2("elliptic blocks only exist in characteristic 2")
            blocks.append(Block(ELLIPTIC, i))
        else:
            raise NotADecomposition(f"block at {i + 1} has Gram [[0,1],[1,{G[i + 1, i + 1]}]]")
        i += 2
    kinds = [_ORDER[b.kind] for b in blocks]
    if kinds != sorted(kinds) or kinds.count(_ORDER[ELLIPTIC]) > 1:
        raise NotADecomposition("blocks must be hyperbolic, then lines, then at most one elliptic")
    expected = np.zeros_like(G)
    role = {}
    for b in blocks:
        if b.kind == LINE:
            expected[b.start, b.start] = b.g
            role[b.start] = (LINE, 0)
        else:
            s = b.start
            expected[s, s + 1] = expected[s + 1, s] = 1
            expected[s + 1, s + 1] = 1 if b.kind == ELLIPTIC else 0
            role[s] = (b.kind, 0)
            role[s + 1] = (b.kind, 1)
    if not np.array_equal(G, expected):
        raise NotADecomposition("Gram matrix has entries outside the diagonal blocks")
    return GramProfile(F, V.copy(), tuple(blocks), mode, role)


def _check_indices(profile: GramProfile, I):
    I = set(int(i) for i in I)
    bad = [i for i in I if not 0 <= i < profile.n]
    if bad:
        raise ValueError(f"indices out of range: {sorted(bad)}")
    for i in I:
        if profile.role(i) == (ELLIPTIC, 1):
            raise UndefinedPrime(f"index {i + 1} is the second generator of the elliptic block")
    return I


def prime(profile: GramProfile, i: int) -> int:
    kind, pos = profile.role(i)
    if kind == LINE:
        return i
    if kind == HYPERBOLIC:
        return i + 1 if pos == 0 else i - 1
    if pos == 0:
        return i + 1
    raise UndefinedPrime(f"index {i + 1} is the second generator of the elliptic block")


def index_dual(profile: GramProfile, I, verify: bool = True) -> set[int]:
    I = _check_indices(profile, I)
    primed = {prime(profile, i) for i in I}
    out = set(range(profile.n)) - primed
    if verify and profile.code(out) != dual(profile.code(I), profile.mode):
        raise InternalInconsistency("index dual disagrees with the computed dual")
    return out


def radical_split(profile: GramProfile, I, verify: bool = True) -> tuple[set[int], set[int]]:
    I = _check_indices(profile, I)
    IR = set()
    for i in I:
        kind, pos = profile.role(i)
        if kind == HYPERBOLIC and prime(profile, i) not in I:
            IR.add(i)
        elif kind == ELLIPTIC and pos == 0:
            IR.add(i)
    IL = I - IR
    if verify and profile.code(IR) != hull(profile.code(I), profile.mode):
        raise InternalInconsistency("radical split disagrees with the computed hull")
    return IR, IL


def c_from_indices(profile: GramProfile, I, verify: bool = True) -> int:
    I = _check_indices(profile, I)
    _, IL = radical_split(profile, I, verify)
    c = len(IL)
    if verify:
        C = profile.code(I)
        if c != C.dim - hull(C, profile.mode).dim:
            raise InternalInconsistency("card(I_L) disagrees with dim C - dim hull")
    return c


def is_self_orthogonal_indices(profile: GramProfile, I) -> bool:
    I = _check_indices(profile, I)
    return I <= index_dual(profile, I, verify=False)

