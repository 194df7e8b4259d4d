import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import oracles
from conftest import oracle_for
from eaqecc import LinearCode, dual, duality_identity_check, ea_symplectic, field, puncture, shorten
from eaqecc.codes import full_code
from eaqecc.errors import BadRange, DimensionClaimFailed, NotNested, PreconditionViolated
from eaqecc.puncture import (
    duality_identities,
    ea_from_punctured_css,
    ea_from_punctured_hermitian,
    ea_from_punctured_symplectic,
    punctured_css_report,
    punctured_hermitian_report,
    punctured_symplectic_report,
)

F2, F4 = field(2), field(2, 2)
FOUR = LinearCode(F2, [[1, 1, 1, 1, 0, 0, 0, 0], [0, 0, 0, 0, 1, 1, 1, 1]], "symplectic")


def test_puncture_and_shorten_examples():
    assert puncture(FOUR, 1) == LinearCode(F2, [[1, 1, 1, 0, 0, 0], [0, 0, 0, 1, 1, 1]], "symplectic")
    assert shorten(FOUR, 1).dim == 0
    assert puncture(LinearCode(F4, [[1, 2, 0]]), 1, "plain") == LinearCode(F4, [[1, 2]])
    assert shorten(full_code(F2, 6, "symplectic"), 1) == full_code(F2, 4, "symplectic")
    # no support on the removed coordinates: dimension is preserved
    C = LinearCode(F2, [[1, 0, 0, 0, 0, 0], [0, 0, 0, 0, 1, 0]], "symplectic")
    assert puncture(C, 1).dim == 2
    with pytest.raises(BadRange):
        puncture(FOUR, 0)
    with pytest.raises(BadRange):
        shorten(FOUR, 4)


def test_identity_examples():
    assert duality_identity_check(FOUR, 1)
    nso = LinearCode(F2, [[1, 0, 0, 0, 0, 0], [0, 0, 0, 1, 0, 0]], "symplectic")
    res = duality_identities(nso, 1)
    assert res["dual_of_puncture_is_shortened_dual"] is True
    assert res["hull_of_puncture_is_shortening"] is None


@pytest.mark.parametrize("spec", [(2, 1), (3, 1), (2, 2)])
def test_puncture_shorten_match_oracle(spec):
    F = field(*spec)
    O = oracle_for(F)
    rng = np.random.default_rng(41)
    n = 3 if F.q == 2 else 2
    for _ in range(10):
        rows = rng.integers(0, F.q, (int(rng.integers(0, 2 * n + 1)), 2 * n))
        C = LinearCode(F, rows, "symplectic")
        words = oracles.span(O, rows, 2 * n)
        keep = list(range(n - 1)) + list(range(n, 2 * n - 1))
        drop = [n - 1, 2 * n - 1]
        P = {tuple(w[i] for i in keep) for w in words}
        S = {tuple(w[i] for i in keep) for w in words if not any(w[i] for i in drop)}
        assert set(map(tuple, puncture(C, 1).codewords().tolist())) == P
        assert set(map(tuple, shorten(C, 1).codewords().tolist())) == S


@settings(max_examples=80, deadline=None)
@given(st.sampled_from([(2, 1), (3, 1), (2, 2), (5, 1)]), st.integers(2, 5), st.integers(0, 2**32 - 1))
def test_first_identity_and_nesting(spec, n, seed):
    F = field(*spec)
    rng = np.random.default_rng(seed)
    C = LinearCode(F, rng.integers(0, F.q, (int(rng.integers(0, 2 * n + 1)), 2 * n)), "symplectic")
    c = int(rng.integers(1, n))
    assert dual(puncture(C, c), "symplectic") == shorten(dual(C, "symplectic"), c)
    assert shorten(C, c) <= puncture(C, c)
    P = LinearCode(F, C.basis, "plain", 2 * n)
    assert shorten(P, c, "plain") <= puncture(P, c, "plain")


def test_symplectic_worked_example():
    params, checks, P = punctured_symplectic_report(FOUR, 1)
    assert params.notation == "[[3,3,>=2;1]]_2"
    assert (checks["dim_P"], checks["dim_S"]) == (2, 0)
    assert checks["hull_of_puncture_is_shortening"] and checks["dual_of_puncture_is_shortened_dual"]
    # the general formula applied to P(C) gives one logical qudit fewer
    assert ea_symplectic(P).notation == "[[3,2,2;1]]_2"
    assert checks["recomputed_from_punctured_code"]["logical"] == 2


def test_symplectic_rejections():
    with pytest.raises(BadRange):
        ea_from_punctured_symplectic(FOUR, 0)
    with pytest.raises(DimensionClaimFailed) as exc:
        ea_from_punctured_symplectic(LinearCode(F2, [[1, 1, 1, 0, 0, 0]], "symplectic"), 1)
    assert exc.value.expected == -1
    with pytest.raises(PreconditionViolated):
        ea_from_punctured_symplectic(LinearCode(F2, [[1, 0, 0, 0, 0, 0], [0, 0, 0, 1, 0, 0]], "symplectic"), 1)
    with pytest.raises(PreconditionViolated):
        ea_from_punctured_symplectic(FOUR, 2)  # 2c = 4 > d_H - 1 = 3


def test_hermitian_worked_example():
    C = LinearCode(F4, [[1, 1, 1, 1]])
    params, checks, P = punctured_hermitian_report(C, 1)
    assert (params.n, params.logical, params.c, params.q) == (3, 3, 1, 2)
    assert params.d_is_bound
    assert checks["dim_hull_P"] == 0
    with pytest.raises(BadRange):
        ea_from_punctured_hermitian(C, 4)
    with pytest.raises(PreconditionViolated):
        ea_from_punctured_hermitian(LinearCode(F4, [[1, 1, 1, 1, 0, 0]]), 4)


def test_css_worked_example():
    C1 = LinearCode(F2, [[1, 1, 1, 1], [1, 0, 1, 0]])
    C2 = LinearCode(F2, [[1, 1, 1, 1]])
    params, checks, _ = punctured_css_report(C1, C2, 1)
    assert (params.n, params.logical, params.c) == (3, 2, 1)
    assert params.d_is_bound and params.d == 2
    p, checks, P = punctured_css_report(C1, C1, 1)
    assert p.logical == p.c == 1
    # P has dimension 4 > n - c = 3, so the general formula does not apply to it
    assert checks["recomputed_from_punctured_code"]["error"] == "DimTooLarge"
    with pytest.raises(NotNested):
        ea_from_punctured_css(C2, C1, 1)
