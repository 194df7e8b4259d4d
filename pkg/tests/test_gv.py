import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from eaqecc import gv_asymptotic, gv_feasible, gv_lhs, gv_search
from eaqecc.errors import InvariantViolation, RangeViolation
from eaqecc.gv import entropy, gv_lhs_parts, max_delta


def oracle_lhs(q, n, k, c, delta):
    """Direct evaluation of the counting expression with Python integers."""
    total = Fraction(0)
    for i in range(1, delta):
        total += Fraction(math.comb(n, i) * (q * q - 1) ** i)
    return Fraction(q ** (n + k) - q ** (n - k - 2 * c), q ** (2 * n) - 1) * total


def test_reference_value():
    num, den = gv_lhs_parts(2, 10, 2, 1, 2)
    assert (num, den) == (120960, 1048575)
    assert gv_lhs(2, 10, 2, 1, 2) == Fraction(120960, 1048575)
    assert abs(float(gv_lhs(2, 10, 2, 1, 2)) - 0.11535) < 1e-5
    assert gv_feasible(2, 10, 2, 1, 2)


def test_delta_one_and_monotone():
    assert gv_lhs(3, 5, 1, 1, 1) == 0
    assert gv_feasible(3, 5, 1, 1, 1)
    assert gv_lhs(2, 10, 2, 1, 3) > gv_lhs(2, 10, 2, 1, 2)


def test_zero_prefactor_when_k_and_c_vanish():
    # q^(n+k) - q^(n-k-2c) = 0 for k = c = 0, so every delta passes
    assert gv_lhs(2, 4, 0, 0, 4) == 0
    assert gv_feasible(2, 4, 0, 0, 4)


def test_invalid_queries():
    for args in [(6, 4, 1, 0, 2), (2, 0, 0, 0, 1), (2, 4, 5, 0, 2), (2, 4, 2, 2, 2), (2, 4, 1, 0, 0)]:
        with pytest.raises(InvariantViolation):
            gv_lhs(*args)


def test_search_tables():
    assert gv_search(2, 0) == []
    assert gv_search(2, 1, n_min=1, k_max=0, c_max=0) == [(1, 0, 0, 1)]
    rows = gv_search(2, 10, n_min=10)
    assert rows == sorted(rows)
    by_key = {(n, k, c): d for n, k, c, d in rows}
    assert by_key[(10, 2, 1)] >= 2
    assert all(gv_feasible(2, n, k, c, d) for n, k, c, d in rows)
    assert all(d == n or not gv_feasible(2, n, k, c, d + 1) for n, k, c, d in rows)


@settings(max_examples=200, deadline=None)
@given(
    st.sampled_from([2, 3, 4, 5, 7, 8, 9]),
    st.integers(1, 12),
    st.data(),
)
def test_lhs_matches_oracle(q, n, data):
    k = data.draw(st.integers(0, n))
    c = data.draw(st.integers(0, (n - k) // 2))
    delta = data.draw(st.integers(1, n + 1))
    assert gv_lhs(q, n, k, c, delta) == oracle_lhs(q, n, k, c, delta)
    assert gv_feasible(q, n, k, c, delta) == (oracle_lhs(q, n, k, c, delta) < 1)
    assert max_delta(q, n, k, c) >= 1


def test_asymptotic():
    assert gv_asymptotic(2, 0.5, 0.0)
    assert not gv_asymptotic(2, 1.0, 0.01)
    h = entropy(2, 0.05)
    assert abs(h - 0.286396957) < 1e-9
    assert abs(h + 0.05 * math.log2(3) - 0.365645082) < 1e-9
    assert gv_asymptotic(2, 0.5, 0.05)
    assert not gv_asymptotic(2, 0.5, 0.05, margin=0.2)
    for bad in [dict(R=1.5, eps=0.1), dict(R=0.5, eps=0.6), dict(R=0.5, eps=0.1, lam=0.3)]:
        with pytest.raises(RangeViolation):
            gv_asymptotic(2, **bad)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([2, 3, 4, 5, 8]), st.integers(2, 10), st.data())
def test_lhs_monotone(q, n, data):
    k = data.draw(st.integers(0, n - 1))
    c = data.draw(st.integers(0, (n - k - 1) // 2))
    delta = data.draw(st.integers(1, n))
    lo = gv_lhs(q, n, k, c, delta)
    if (q ** (n + k) - q ** (n - k - 2 * c)) > 0:
        assert gv_lhs(q, n, k, c, delta + 1) > lo
    else:
        assert lo == 0
    # raising k keeps 2c <= n - k when c <= (n - k - 1) // 2
    assert gv_lhs(q, n, k + 1, c, delta) >= lo
