import itertools

import pytest
from hypothesis import given, settings, strategies as st
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p, gf_mul, gf_rem

from mdsconv import GF, element_order, field_new, find_element_of_order
from mdsconv.errors import DegreeMismatch, NoSuchOrder, NotPrime, ReducibleModulus, ZeroElement
from mdsconv.gf import FieldSpec, is_prime, prime_power, smallest_irreducible

SMALL_Q = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16]


def _sympy_mul(F, a, b):
    """Product of two elements through sympy's GF(p)[x] arithmetic (descending coefficients)."""
    ra, rb = list(reversed(F.rep_of(a))), list(reversed(F.rep_of(b)))
    mod = list(reversed(F.modulus))
    prod = gf_rem(gf_mul(ra, rb, F.p, ZZ), mod, F.p, ZZ)
    rep = list(reversed([int(c) for c in prod]))
    return F.code_of(rep + [0] * (F.m - len(rep)))


def test_prime_helpers():
    assert [p for p in range(30) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert prime_power(16) == (2, 4)
    assert prime_power(9) == (3, 2)
    with pytest.raises(NotPrime):
        prime_power(12)


def test_gf4_matches_reference_relation(gf4, alpha4):
    # alpha^2 = alpha + 1
    assert alpha4 * alpha4 == alpha4 + 1
    assert gf4.modulus == (1, 1, 1)
    assert element_order(alpha4) == 3


def test_prime_field_ignores_modulus():
    F = field_new(5, 1)
    assert F.q == 5 and F.m == 1
    assert [F.from_int(k) for k in range(5)] == [0, 1, 2, 3, 4]


@pytest.mark.parametrize('p,m', [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2), (2, 5)])
def test_smallest_irreducible_against_sympy(p, m):
    # scan monic polynomials by integer value sum c_i p^i and take the first irreducible one
    for low in range(p ** m):
        coeffs = [(low // p ** i) % p for i in range(m)] + [1]
        if gf_irreducible_p(list(reversed(coeffs)), p, ZZ):
            break
    assert smallest_irreducible(p, m) == tuple(coeffs)


def test_default_moduli():
    assert GF(8).modulus == (1, 1, 0, 1)
    assert GF(9).modulus == (1, 0, 1)
    assert GF(16).modulus == (1, 1, 0, 0, 1)


def test_field_new_errors():
    with pytest.raises(NotPrime):
        field_new(4, 1)
    with pytest.raises(ReducibleModulus):
        field_new(2, 2, [1, 0, 1])
    with pytest.raises(DegreeMismatch):
        field_new(2, 3, [1, 1, 1])
    with pytest.raises(DegreeMismatch):
        field_new(2, 0)


def test_code_order():
    F = GF(9)
    assert F.zero == 0 and F.one == 3
    assert [F.code_of(F.rep_of(c)) for c in range(9)] == list(range(9))
    # constant term is most significant
    assert F.rep_of(1) == (0, 1)
    assert F.rep_of(3) == (1, 0)


@pytest.mark.parametrize('q', SMALL_Q)
def test_multiplication_matches_sympy(q):
    F = GF(q)
    for a, b in itertools.product(range(q), repeat=2):
        assert F.mul(a, b) == _sympy_mul(F, a, b)


@pytest.mark.parametrize('q', SMALL_Q)
def test_field_axioms_exhaustive(q):
    F = GF(q)
    els = range(q)
    for a in els:
        assert F.add(a, F.neg(a)) == 0
        assert F.mul(a, F.one) == a
        if a:
            assert F.mul(a, F.inv(a)) == F.one
            assert F.pow(a, q - 1) == F.one
    for a, b in itertools.product(els, repeat=2):
        assert F.add(a, b) == F.add(b, a)
        assert F.mul(a, b) == F.mul(b, a)
        # Frobenius is additive
        assert F.pow(F.add(a, b), F.p) == F.add(F.pow(a, F.p), F.pow(b, F.p))
    for a, b, c in itertools.product(els, repeat=3):
        assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


@settings(max_examples=300, deadline=None)
@given(st.data())
def test_field_axioms_random_large(data):
    q = data.draw(st.sampled_from([25, 27, 32, 49, 64, 81, 121, 128, 256]))
    F = GF(q)
    a, b, c = (data.draw(st.integers(0, q - 1)) for _ in range(3))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.mul(a, b) == _sympy_mul(F, a, b)
    if a:
        assert F.mul(a, F.inv(a)) == F.one


def test_element_wrapper_arithmetic(gf4, alpha4):
    a = alpha4
    assert a ** 3 == gf4.element(gf4.one)
    assert a / a == 1
    assert (a + a) == 0
    assert a.inverse() == a * a
    assert 1 - a == a * a
    assert gf4(a.to_json()) == a
    with pytest.raises(ZeroDivisionError):
        gf4.element(0).inverse()


def test_element_order():
    assert element_order(GF(4).element(GF(4).one)) == 1
    assert element_order(GF(8).gen) == 7
    with pytest.raises(ZeroElement):
        element_order(GF(8).element(0))


@pytest.mark.parametrize('q', SMALL_Q)
def test_find_element_of_order(q):
    F = GF(q)
    for t in range(1, q):
        if (q - 1) % t == 0:
            a = find_element_of_order(F, t)
            assert element_order(a) == t
            # first such element in code order
            assert all(element_order(F.element(c)) != t for c in range(1, a.code))
        else:
            with pytest.raises(NoSuchOrder):
                find_element_of_order(F, t)
        b = find_element_of_order(F, t, 'at_least')
        assert element_order(b) >= t
    with pytest.raises(NoSuchOrder):
        find_element_of_order(F, q, 'at_least')


def test_find_element_examples(gf4, alpha4):
    assert find_element_of_order(gf4, 3) == alpha4
    assert find_element_of_order(GF(13), 1).code == GF(13).one
    with pytest.raises(NoSuchOrder):
        find_element_of_order(GF(8), 3)


def test_json_round_trip():
    F = GF(16)
    assert F.to_json() == {'p': 2, 'm': 4, 'modulus': [1, 1, 0, 0, 1]}
    assert FieldSpec.from_json(F.to_json()) == F
    for c in range(16):
        assert F(F.element(c).to_json()).code == c
