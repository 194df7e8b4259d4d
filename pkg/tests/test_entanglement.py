import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import oracles
from conftest import oracle_for
from eaqecc import (
    LinearCode,
    c_hermitian,
    c_symplectic,
    contract,
    dual,
    ea_css,
    ea_from_parity_check_hermitian,
    ea_hermitian,
    ea_symplectic,
    expand_symplectic,
    expansion_context,
    extend_self_orthogonal,
    field,
    find_normal_pair,
    form,
    hermitian_pack,
    hermitian_unpack,
    weight,
)
from eaqecc.codes import full_code
from eaqecc.entanglement import projection_coords
from eaqecc.errors import DimTooLarge, LayoutMismatch, ShapeMismatch
from eaqecc.linalg import Subspace

F2, F3, F4 = field(2), field(3), field(2, 2)


# -- worked examples -----------------------------------------------------------


def test_symplectic_examples():
    C = LinearCode(F2, [[1, 0, 0, 0], [0, 0, 1, 0]], "symplectic")
    assert c_symplectic(C) == 1
    assert ea_symplectic(C).notation == "[[2,1,1;1]]_2"
    assert c_symplectic(LinearCode(F3, [[1, 0], [0, 1]], "symplectic")) == 1

    edge = ea_symplectic(LinearCode(F2, [[1, 0]], "symplectic"))
    assert (edge.c, edge.logical, edge.d, edge.d_edge_convention) == (0, 0, 1, True)

    four = LinearCode(F2, [[1, 1, 1, 1, 0, 0, 0, 0], [0, 0, 0, 0, 1, 1, 1, 1]], "symplectic")
    p = ea_symplectic(four)
    assert (p.c, p.logical, p.d, p.d_edge_convention) == (0, 2, 2, False)
    assert c_symplectic(four) == 0


def test_symplectic_rejects():
    with pytest.raises(DimTooLarge):
        ea_symplectic(full_code(F2, 4, "symplectic"))
    with pytest.raises(LayoutMismatch):
        ea_symplectic(LinearCode(F2, [[1, 0]]))


def test_hermitian_examples():
    assert c_hermitian(LinearCode(F4, [[1, 0]])) == 1
    assert c_hermitian(LinearCode(F4, [[1, 2]])) == 0
    assert ea_hermitian(LinearCode(F4, [[1, 0]])).notation == "[[2,1,1;1]]_2"
    p = ea_hermitian(LinearCode(F4, [[1, 1, 1, 1]]))
    assert (p.c, p.logical) == (0, 2)
    p9 = ea_hermitian(LinearCode(field(3, 2), [[1, 0, 0]]))
    assert (p9.q, p9.n, p9.c, p9.logical) == (3, 3, 1, 2)
    with pytest.raises(DimTooLarge):
        ea_hermitian(LinearCode(F4, [[1, 0], [0, 1]]))


def test_parity_check_examples():
    p = ea_from_parity_check_hermitian(full_code(F4, 2))
    assert (p.c, p.logical) == (0, 2)
    p = ea_from_parity_check_hermitian(LinearCode(F4, [[0, 1]]))
    assert p.notation == "[[2,1,1;1]]_2" and p.mode == "hermitian-check"
    p = ea_from_parity_check_hermitian(LinearCode(F4, [[1, 2]]))  # Hermitian self-dual
    assert (p.c, p.logical) == (0, 0)


def test_css_examples():
    p = ea_css(LinearCode(F2, [[1, 0]]), LinearCode(F2, [[1, 0]]))
    assert (p.n, p.logical, p.d, p.c, p.d_is_bound) == (2, 1, 1, 1, True)
    assert p.notation == "[[2,1,>=1;1]]_2"
    p = ea_css(LinearCode(F2, [[1, 1]]), LinearCode(F2, [[1, 1]]))
    assert (p.c, p.logical) == (0, 0)
    p = ea_css(LinearCode(F3, [[1, 0, 0]]), LinearCode(F3, [[0, 1, 0]]))
    assert (p.c, p.logical) == (0, 1)
    with pytest.raises(ShapeMismatch):
        ea_css(LinearCode(F2, [[1, 0]]), LinearCode(F2, [[1, 0, 0]]))


def test_css_of_self_orthogonal_code_is_standard_css():
    # [7,3] simplex code is contained in its dual, the [7,4] Hamming code
    S = LinearCode(F2, [[1, 0, 0, 1, 0, 1, 1], [0, 1, 0, 1, 1, 1, 0], [0, 0, 1, 0, 1, 1, 1]])
    p = ea_css(S, S)
    assert (p.n, p.logical, p.c, p.d) == (7, 1, 0, 3)


def test_json_shape():
    p = ea_symplectic(LinearCode(F2, [[1, 0, 0, 0], [0, 0, 1, 0]], "symplectic"))
    assert list(p.to_dict()) == ["q", "n", "logical", "d", "d_is_bound", "d_edge_convention", "c", "mode", "notation"]
    skipped = ea_symplectic(LinearCode(F2, [[1, 0, 0, 0]], "symplectic"), distance="skip")
    assert skipped.d is None


# -- oracle cross-checks ---------------------------------------------------------


@pytest.mark.parametrize("spec,n", [((2, 1), 3), ((3, 1), 2), ((2, 2), 2)])
def test_symplectic_params_match_oracle(spec, n):
    F = field(*spec)
    O = oracle_for(F)
    rng = np.random.default_rng(21)
    for _ in range(12):
        rows = rng.integers(0, F.q, (int(rng.integers(0, n + 1)), 2 * n))
        C = LinearCode(F, rows, "symplectic")
        if C.dim > n:
            continue
        words = oracles.span(O, rows, 2 * n)
        D = oracles.brute_dual(O, words, 2 * n, lambda u, v: oracles.symplectic(O, u, v))
        hull_dim = oracles.dim_of(O, words & D)
        p = ea_symplectic(C)
        assert p.c * 2 == C.dim - hull_dim
        assert p.logical == n - C.dim + p.c
        d = oracles.relative_min_weight(D, words & D, oracles.swt)
        if d == math.inf:
            assert p.d_edge_convention
            d = oracles.min_weight(words, oracles.swt)
            d = None if d == math.inf else d
        assert p.d == d


@pytest.mark.parametrize("spec,n", [((2, 2), 3), ((3, 2), 2)])
def test_hermitian_params_match_oracle(spec, n):
    F = field(*spec)
    O = oracle_for(F)
    s = F.subfield.q
    rng = np.random.default_rng(22)
    for _ in range(12):
        rows = rng.integers(0, F.q, (int(rng.integers(0, n // 2 + 1)), n))
        C = LinearCode(F, rows, "plain", n)
        words = oracles.span(O, rows, n)
        D = oracles.brute_dual(O, words, n, lambda u, v: oracles.hermitian(O, u, v, s))
        p = ea_hermitian(C)
        assert p.c == C.dim - oracles.dim_of(O, words & D)
        d = oracles.relative_min_weight(D, words & D, oracles.hamming)
        if d != math.inf:
            assert p.d == d and not p.d_edge_convention


@settings(max_examples=80, deadline=None)
@given(st.sampled_from([(2, 1), (3, 1), (2, 2), (5, 1), (3, 2)]), st.integers(1, 4), st.integers(0, 2**32 - 1))
def test_extension_postconditions(spec, n, seed):
    F = field(*spec)
    rng = np.random.default_rng(seed)
    C = LinearCode(F, rng.integers(0, F.q, (int(rng.integers(0, 2 * n + 1)), 2 * n)), "symplectic")
    c = c_symplectic(C)
    E = extend_self_orthogonal(C)
    assert E.n == n + c
    assert E.dim == C.dim
    assert E.is_self_orthogonal("symplectic")
    assert Subspace(F, E.basis[:, projection_coords(n, c)], 2 * n) == C.space


def test_extension_examples():
    C = LinearCode(F2, [[1, 0, 0, 0], [0, 0, 1, 0]], "symplectic")
    assert extend_self_orthogonal(C).basis.tolist() == [[1, 0, 1, 0, 0, 0], [0, 0, 0, 1, 0, 1]]
    S = LinearCode(F2, [[1, 1, 1, 1, 0, 0, 0, 0]], "symplectic")
    assert extend_self_orthogonal(S) == S
    E3 = extend_self_orthogonal(LinearCode(F3, [[1, 0], [0, 1]], "symplectic"))
    assert E3.n == 2 and E3.is_self_orthogonal("symplectic")


# -- field maps ------------------------------------------------------------------


def test_expansion_examples():
    ctx = expansion_context(F2, 2)
    C = LinearCode(F2, [[1, 0, 0, 0], [0, 0, 1, 0]], "symplectic")
    assert expand_symplectic(ctx, C) == C
    ctx4 = expansion_context(F4, 1)
    C0 = expand_symplectic(ctx4, LinearCode(F4, [[1, 0]], "symplectic"))
    assert C0.dim == 2 and not np.any(C0.basis[:, 2:])
    assert contract(ctx4, C0) == LinearCode(F4, [[1, 0]], "symplectic")


@pytest.mark.parametrize("spec", [(2, 2), (2, 3), (3, 2)])
def test_expansion_preserves_forms_and_round_trips(spec):
    F = field(*spec)
    n = 2
    ctx = expansion_context(F, n)
    rng = np.random.default_rng(3)
    for _ in range(10):
        C = LinearCode(F, rng.integers(0, F.q, (int(rng.integers(0, 2 * n + 1)), 2 * n)), "symplectic")
        C0 = expand_symplectic(ctx, C)
        assert C0.dim == F.m * C.dim
        assert contract(ctx, C0) == C
        # the trace-symplectic dual expands to the symplectic dual
        assert expand_symplectic(ctx, dual(C, "trace_symplectic")) == dual(C0, "symplectic")


def test_pack_examples():
    pair = find_normal_pair(F4)
    assert hermitian_pack(pair, [0, 0, 0, 0]).tolist() == [0, 0]
    x = hermitian_pack(pair, [1, 0, 0, 1])
    assert x.tolist() == [2, 3]
    assert weight([1, 0, 0, 1], "symplectic") == 2 == weight(x)
    assert hermitian_unpack(pair, x).tolist() == [1, 0, 0, 1]


@pytest.mark.parametrize("spec", [(2, 2), (3, 2)])
def test_pack_isometry_and_form_sign(spec):
    big = field(*spec)
    F = big.subfield
    pair = find_normal_pair(big)
    rng = np.random.default_rng(4)
    U = rng.integers(0, F.q, (200, 6))
    V = rng.integers(0, F.q, (200, 6))
    X, Y = hermitian_pack(pair, U), hermitian_pack(pair, V)
    assert np.array_equal(weight(U, "symplectic"), weight(X))
    ts = np.asarray(form("trace_symplectic", U, V, F))
    alt = np.asarray(form("trace_alternating", X, Y, big))
    # the packing map sends ts to minus the trace-alternating form
    assert np.array_equal((-ts) % F.p, alt)
