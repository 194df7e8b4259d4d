import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import oracle_for
from eaqecc import field, find_normal_pair, find_trace_orthogonal_basis
from eaqecc.fields import GF, arith, frobenius, is_irreducible, trace_relative, trace_to_prime

SMALL = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (2, 4), (5, 2), (3, 3)]


def test_gf4_modulus_and_product():
    F = field(2, 2)
    assert F.poly == 7
    assert int(F.mul(2, 2)) == 3


def test_gf9_alternative_modulus():
    F = field(3, 2, 10)  # x^2 + 1
    alpha = F(3)
    assert int(alpha * alpha) == 2
    assert int(frobenius(alpha, 1)) == int(F.neg(3))
    assert trace_to_prime(alpha) == 0
    assert int(trace_relative(F(1))) == 2


def test_conway_defaults():
    # x^3+x+1, x^2+2x+2 and x^4+x+1
    assert field(2, 3).poly == 11
    assert field(3, 2).poly == 17
    assert field(2, 4).poly == 19


def test_gf4_frobenius_and_traces():
    F = field(2, 2)
    w = F(2)
    assert int(frobenius(w, 1)) == 3
    assert trace_to_prime(w) == 1
    assert trace_to_prime(F(0)) == 0
    assert int(trace_relative(w)) == 1


def test_rejects_bad_specs():
    with pytest.raises(ValueError):
        GF(4)
    with pytest.raises(ValueError):
        GF(2, 2, (1, 0, 1))  # x^2 + 1 = (x+1)^2
    with pytest.raises(ValueError):
        GF(2, 40)


def test_irreducibility_check_small_polys():
    # compare against root/factor search over F_2 for degrees up to 4
    for deg in range(1, 5):
        for tail in itertools.product(range(2), repeat=deg):
            coeffs = list(tail) + [1]
            reducible = False
            for d in range(1, deg // 2 + 1):
                for low in itertools.product(range(2), repeat=d):
                    f = list(low) + [1]
                    # long division over F_2
                    r = coeffs[:]
                    for top in range(len(r) - 1, d - 1, -1):
                        if r[top]:
                            for i, c in enumerate(f):
                                r[top - d + i] ^= c
                    if not any(r[:d]):
                        reducible = True
            assert is_irreducible(tuple(coeffs), 2) == (not reducible)


@pytest.mark.parametrize("p,m", SMALL)
def test_tables_match_oracle(p, m):
    F = field(p, m)
    O = oracle_for(F)
    a = np.repeat(np.arange(F.q), F.q)
    b = np.tile(np.arange(F.q), F.q)
    mul = np.asarray(F.mul(a, b)).reshape(F.q, F.q)
    add = np.asarray(F.add(a, b)).reshape(F.q, F.q)
    assert mul.tolist() == O.mul_t
    assert add.tolist() == O.add_t
    for x in range(1, F.q):
        assert int(F.mul(x, F.inv(x))) == 1
        assert int(F.trace(x)) == O.trace(x)


@pytest.mark.parametrize("p,m", SMALL)
def test_trace_orthogonal_basis(p, m):
    F = field(p, m)
    B = find_trace_orthogonal_basis(F)
    G = B.gram()
    assert np.count_nonzero(G - np.diag(np.diag(G))) == 0
    assert all(np.diag(G) % p)
    # dual basis has the inverse Gram matrix
    O = oracle_for(F)
    for i, j in itertools.product(range(m), repeat=2):
        t = O.trace(O.mul(B.gamma[i], B.dual[j]))
        assert t == (1 if i == j else 0)
    xs = np.arange(F.q)
    assert np.array_equal(B.combine(B.coords(xs)), xs)
    assert np.array_equal(B.combine(B.dual_coords(xs), dual=True), xs)


def test_trace_orthogonal_examples():
    assert find_trace_orthogonal_basis(field(2)).gamma == (1,)
    B4 = find_trace_orthogonal_basis(field(2, 2))
    assert sorted(B4.gamma) == [2, 3]
    assert np.array_equal(B4.gram(), np.eye(2, dtype=np.int64))
    B9 = find_trace_orthogonal_basis(field(3, 2, 10))
    assert B9.gamma == (1, 3)
    assert np.array_equal(B9.gram(), np.diag([2, 1]))


@pytest.mark.parametrize("p,m", [(2, 2), (3, 2), (5, 2), (2, 4), (7, 2)])
def test_normal_pair(p, m):
    F = field(p, m)
    pair = find_normal_pair(F)
    assert pair.w != 1
    assert pair.lam != 0
    assert pair.w_q == int(F.pow(pair.w, F.subfield.q))
    if (p, m) == (2, 2):
        assert pair.w == 2


def test_subfield_embedding():
    F = field(3, 2)
    S = F.subfield
    assert S.q == 3
    for x in range(3):
        e = int(F.embed(x))
        assert int(F.conj(e)) == e
        assert int(F.restrict(e)) == x


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(SMALL), st.data())
def test_field_axioms(spec, data):
    F = field(*spec)
    x, y, z = (F(data.draw(st.integers(0, F.q - 1))) for _ in range(3))
    assert (x + y) * z == x * z + y * z
    assert x + (-x) == F(0)
    assert (x * y) * z == x * (y * z)
    if int(y):
        assert (x / y) * y == x
        assert arith("inv", y) * y == F(1)
    assert x ** F.q == x
    assert frobenius(x + y, 1) == frobenius(x, 1) + frobenius(y, 1)


def test_conway_table_is_irreducible_and_primitive():
    from eaqecc.conway import CONWAY
    from eaqecc.fields import prime_factors

    for (p, m), coeffs in CONWAY.items():
        assert len(coeffs) == m + 1 and coeffs[-1] == 1
        assert is_irreducible(coeffs, p)
        if m == 1:
            continue
        F = field(p, m, coeffs)
        x = p  # the class of x in the digit encoding
        for r in set(prime_factors(F.q - 1)):
            assert int(F._pow_slow(x, (F.q - 1) // r)) != 1, (p, m)
