import numpy as np
import pytest

import oracles
from conftest import oracle_for
from eaqecc import field
from eaqecc.checks import GEOMETRY_FIELDS, BlockKit
from eaqecc.errors import EllipticOutsideChar2, NotADecomposition, UndefinedPrime
from eaqecc.geometry import c_from_indices, index_dual, is_self_orthogonal_indices, radical_split, validate


def test_validate_examples():
    p = validate(field(3), np.eye(2, dtype=np.int64))
    assert [(b.kind, b.g) for b in p.blocks] == [("line", 1), ("line", 1)]
    p = validate(field(5), [[1, 2], [3, 4]])
    assert [b.kind for b in p.blocks] == ["hyperbolic"]
    with pytest.raises(NotADecomposition):
        validate(field(2), [[1, 0], [1, 1]])
    with pytest.raises(NotADecomposition):
        validate(field(2), [[1, 0], [1, 0]])  # not full rank


def test_elliptic_rules():
    F2 = field(2)
    p = validate(F2, [[1, 1], [1, 0]])
    assert [b.kind for b in p.blocks] == ["elliptic"]
    with pytest.raises(UndefinedPrime):
        index_dual(p, {1})
    assert index_dual(p, {0}) == {0}  # the first elliptic vector is isotropic
    # over GF(5), u = (1, 2) is isotropic and v = (1, 0) gives Gram [[0,1],[1,1]]
    with pytest.raises(EllipticOutsideChar2):
        validate(field(5), [[1, 2], [1, 0]])


def test_index_examples():
    hyp = validate(field(5), [[1, 2], [3, 4]])
    assert index_dual(hyp, set()) == {0, 1}
    assert index_dual(hyp, {0}) == {0}
    assert radical_split(hyp, {0}) == ({0}, set())
    assert radical_split(hyp, {0, 1}) == (set(), {0, 1})
    assert c_from_indices(hyp, {0, 1}) == 2
    assert c_from_indices(hyp, {0}) == 0
    lines = validate(field(3), np.eye(2, dtype=np.int64))
    assert index_dual(lines, {0}) == {1}
    assert radical_split(lines, {0}) == (set(), {0})
    assert c_from_indices(lines, {0}) == 1


@pytest.mark.parametrize("spec,mode", GEOMETRY_FIELDS)
def test_index_calculus_matches_brute_force(spec, mode):
    F = field(*spec)
    O = oracle_for(F)
    kit = BlockKit(F, mode)
    rng = np.random.default_rng(31)
    if mode == "euclidean":
        pairing = lambda u, v: oracles.euclidean(O, u, v)  # noqa: E731
    else:
        s = F.subfield.q
        pairing = lambda u, v: oracles.hermitian(O, u, v, s)  # noqa: E731
    max_n = 4 if F.q <= 4 else 3
    for _ in range(10):
        prof = kit.random_profile(rng, max_n=max_n)
        n = prof.n
        allowed = [i for i in range(n) if prof.role(i) != ("elliptic", 1)]
        I = {i for i in allowed if rng.random() < 0.5}
        rows = prof.basis[sorted(I)] if I else np.zeros((0, n), dtype=np.int64)
        words = oracles.span(O, rows, n)
        D = oracles.brute_dual(O, words, n, pairing)
        perp = index_dual(prof, I, verify=False)
        assert oracles.span(O, prof.basis[sorted(perp)], n) == D
        IR, IL = radical_split(prof, I, verify=False)
        assert oracles.span(O, prof.basis[sorted(IR)], n) == words & D
        assert c_from_indices(prof, I, verify=False) == len(I) - oracles.dim_of(O, words & D)
        assert is_self_orthogonal_indices(prof, I) == (words <= D)
