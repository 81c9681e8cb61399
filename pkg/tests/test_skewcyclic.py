import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from mdsconv import GF, DensePoly, PolyMatrix, build_code, find_element_of_order
from mdsconv.errors import DeltaZero, LengthMismatch, NotAutomorphism, NotCoprime, RingMismatch
from mdsconv.polyalg import module_membership
from mdsconv.skewcyclic import (
    SkewPoly,
    all_automorphisms,
    build_ring,
    cyclicity_decision,
    expanded_unit,
    geometric_z_sum,
    idempotent_form,
    is_sigma_cyclic,
    make_automorphism,
    multiplication_automorphism,
    p_inverse,
    p_map,
    reed_solomon_form,
    sigma_on_idempotents,
    skew_mul,
    unit_factorization,
)

SWEEP_Q = [4, 5, 7, 8, 9, 11, 13, 16]
# every (q, n) with n | q - 1, 2 <= n <= 7: the rings where x^n - 1 splits into linear factors
LINEAR_RINGS = [(q, n) for q in SWEEP_Q for n in range(2, min(q - 1, 7) + 1) if (q - 1) % n == 0]


def cyclotomic_coset_sizes(q, n):
    seen, sizes = set(), []
    for s in range(n):
        if s in seen:
            continue
        coset, t = set(), s
        while t not in coset:
            coset.add(t)
            t = t * q % n
        seen |= coset
        sizes.append(len(coset))
    return sorted(sizes)


def rand_elem(ring, rng):
    return ring.elem([rng.randrange(ring.field.q) for _ in range(ring.n)])


def rand_skew(sigma, rng, deg=3):
    return SkewPoly(sigma.ring, sigma, [rand_elem(sigma.ring, rng) for _ in range(rng.randrange(deg + 1))])


def test_build_ring_gf4(gf4, alpha4):
    R = build_ring(gf4, 3)
    assert [f.degree for f in R.factors] == [1, 1, 1]
    eps = R.linear_idempotents(alpha4)
    assert eps[0] == R.elem([gf4.one] * 3)
    with pytest.raises(NotCoprime):
        build_ring(gf4, 2)
    R5 = build_ring(gf4, 5)
    assert [f.degree for f in R5.factors] == [1, 2, 2]


@pytest.mark.parametrize('q', SWEEP_Q)
def test_factorization_matches_cyclotomic_cosets(q):
    F = GF(q)
    for n in range(1, 9):
        if math.gcd(n, F.p) != 1:
            continue
        R = build_ring(F, n)
        assert sorted(f.degree for f in R.factors) == cyclotomic_coset_sizes(q, n)
        prod = DensePoly.constant(F, F.one)
        for f in R.factors:
            assert f.lead == F.one
            prod = prod * f
        assert prod == R.modulus
        assert len(set(R.factors)) == len(R.factors)


@pytest.mark.parametrize('q', SWEEP_Q)
def test_idempotent_axioms(q):
    F = GF(q)
    for n in range(1, 8):
        if math.gcd(n, F.p) != 1:
            continue
        R = build_ring(F, n)
        total = R.zero
        for k, e in enumerate(R.idempotents):
            assert e * e == e
            for l, f in enumerate(R.idempotents):
                if k != l:
                    assert (e * f).is_zero()
            # CRT: e is 1 modulo its own factor and 0 modulo the others
            residues = R.crt(e)
            assert residues[k] == DensePoly.constant(F, F.one)
            assert all(r.is_zero() for i, r in enumerate(residues) if i != k)
            total = total + e
        assert total == R.one


@pytest.mark.parametrize('q,n', LINEAR_RINGS)
def test_linear_idempotents_evaluate_as_indicators(q, n):
    F = GF(q)
    a = find_element_of_order(F, n)
    eps = build_ring(F, n).linear_idempotents(a)
    for k, e in enumerate(eps):
        for i in range(n):
            assert e.evaluate(F.pow(a.code, i)) == (F.one if i == k else 0)


def test_make_automorphism(gf4, alpha4):
    R = build_ring(gf4, 3)
    assert multiplication_automorphism(R, alpha4).image == R.monomial(1, alpha4.code)
    assert make_automorphism(R, R.x).is_identity()
    make_automorphism(R, R.monomial(2))
    with pytest.raises(NotAutomorphism):
        make_automorphism(R, R.zero)
    with pytest.raises(NotAutomorphism):
        make_automorphism(R, R.one)


def test_automorphism_is_ring_homomorphism():
    rng = random.Random(5)
    for q, n in [(4, 3), (5, 4), (8, 3), (7, 3)]:
        R = build_ring(GF(q), n)
        for s in all_automorphisms(R):
            for _ in range(20):
                a, b = rand_elem(R, rng), rand_elem(R, rng)
                assert s(a * b) == s(a) * s(b)
                assert s(a + b) == s(a) + s(b)
            assert s(R.one) == R.one


def test_automorphism_count_gf4_n3(gf4):
    # A = GF(4)^3; F-automorphisms permute the three factors: 3! of them
    assert len(all_automorphisms(build_ring(gf4, 3))) == 6


def test_automorphism_count_gf8_n3():
    # A = GF(8) x GF(64): identity and the GF(8)-Frobenius on the second factor
    assert len(all_automorphisms(build_ring(GF(8), 3))) == 2


def test_sigma_on_idempotents_cycle(gf4, alpha4):
    R = build_ring(gf4, 3)
    eps = R.linear_idempotents(alpha4)
    s = multiplication_automorphism(R, alpha4)
    assert sigma_on_idempotents(s, eps) == [2, 0, 1]
    assert sigma_on_idempotents(make_automorphism(R, R.x), eps) == [0, 1, 2]


@pytest.mark.parametrize('q,n', LINEAR_RINGS)
def test_idempotent_cycle_all_linear_rings(q, n):
    F = GF(q)
    a = find_element_of_order(F, n)
    R = build_ring(F, n)
    eps = R.linear_idempotents(a)
    s = multiplication_automorphism(R, a)
    assert sigma_on_idempotents(s, eps) == [(k - 1) % n for k in range(n)]
    for nu in range(n + 1):
        assert s.power(nu)(eps[0]) == eps[(n - nu) % n]
    assert s.power(n).is_identity()


@pytest.mark.parametrize('q,n', [(4, 3), (4, 5), (5, 4), (7, 3), (8, 3), (9, 4), (11, 2)])
def test_permutation_preserves_degrees(q, n):
    R = build_ring(GF(q), n)
    for s in all_automorphisms(R):
        perm = sigma_on_idempotents(s)
        assert sorted(perm) == list(range(len(R.factors)))
        assert all(R.factors[k].degree == R.factors[l].degree for k, l in enumerate(perm))


def test_skew_mul_examples(gf4, alpha4):
    R = build_ring(gf4, 3)
    s = multiplication_automorphism(R, alpha4)
    eps = R.linear_idempotents(alpha4)
    one = SkewPoly.one(s)
    f = SkewPoly(R, s, [R.one, eps[2]])
    g = SkewPoly(R, s, [R.one, -eps[2]])
    assert skew_mul(f, g) == one
    assert skew_mul(f, one) == f and skew_mul(one, f) == f
    # x z = z (alpha x)
    lhs = skew_mul(SkewPoly.const(s, R.x), SkewPoly.z_power(s, 1))
    assert lhs == SkewPoly.z_power(s, 1, R.monomial(1, alpha4.code))
    other = make_automorphism(R, R.x)
    with pytest.raises(RingMismatch):
        skew_mul(f, SkewPoly.one(other))


@pytest.mark.parametrize('q,n', [(4, 3), (5, 4), (7, 3), (8, 7), (9, 4), (4, 5)])
def test_skew_ring_axioms(q, n):
    rng = random.Random(q * 100 + n)
    F = GF(q)
    R = build_ring(F, n)
    sigmas = all_automorphisms(R) if q ** n <= 10**4 else [multiplication_automorphism(R, find_element_of_order(F, n))]
    for s in sigmas[:3]:
        for _ in range(-(-1000 // len(sigmas[:3]))):
            f, g, h = rand_skew(s, rng), rand_skew(s, rng), rand_skew(s, rng)
            assert skew_mul(skew_mul(f, g), h) == skew_mul(f, skew_mul(g, h))
            assert skew_mul(f, g + h) == skew_mul(f, g) + skew_mul(f, h)
            c = F.element(rng.randrange(1, q))
            i = rng.randrange(3)
            cz = SkewPoly.z_power(s, i, R.scalar(1) * c)
            # z^i c commutes with f exactly when sigma^i fixes f's coefficients; c itself is central
            assert (skew_mul(cz, f) == skew_mul(f, cz)) == all(s.power(i)(a) == a for a in f.coeffs)
            assert skew_mul(SkewPoly.const(s, R.scalar(1) * c), f) == skew_mul(f, SkewPoly.const(s, R.scalar(1) * c))


def test_p_map_round_trip(code_ex3, gf4, alpha4):
    R = build_ring(gf4, 3)
    s = multiplication_automorphism(R, alpha4)
    g = p_map(code_ex3.G, s)
    for nu in range(3):
        assert g[nu] == R.elem([gf4.pow(alpha4.code, nu * i) for i in range(3)])
    zero = PolyMatrix(gf4, [[DensePoly(gf4)] * 3])
    assert p_map(zero, s) == SkewPoly(R, s)
    rng = random.Random(2)
    for _ in range(100):
        v = PolyMatrix(gf4, [[DensePoly(gf4, [rng.randrange(4) for _ in range(rng.randrange(6))])
                              for _ in range(3)]])
        assert p_inverse(p_map(v, s)) == v
    with pytest.raises(LengthMismatch):
        p_map(PolyMatrix(gf4, [[DensePoly(gf4)] * 2]), s)


def _left_ideal_oracle(code, sigma):
    """Is a g in p(im G) for every a in A?  Direct check over all q^n ring elements."""
    g = p_map(code.G, sigma)
    return all(module_membership(p_inverse(skew_mul(SkewPoly.const(sigma, a), g)), code.G) is not None
               for a in sigma.ring.elements())


@pytest.mark.parametrize('q,n,d', [(4, 3, 1), (4, 3, 2), (5, 3, 1), (5, 4, 2), (7, 3, 1), (8, 3, 1)])
def test_sigma_cyclic_against_left_ideal_oracle(q, n, d):
    F = GF(q)
    code = build_code(F, n, d, find_element_of_order(F, n, 'at_least'))
    R = build_ring(F, n)
    for s in all_automorphisms(R):
        assert is_sigma_cyclic(code, s) == _left_ideal_oracle(code, s)


@pytest.mark.parametrize('q,n', LINEAR_RINGS)
def test_x_fixes_g_when_order_is_n(q, n):
    F = GF(q)
    a = find_element_of_order(F, n)
    R = build_ring(F, n)
    s = multiplication_automorphism(R, a)
    for d in range(0, n):
        code = build_code(F, n, d, a)
        g = p_map(code.G, s)
        assert skew_mul(SkewPoly.const(s, R.x), g) == g
        assert is_sigma_cyclic(code, s)
        assert g == idempotent_form(code, s)
        assert g == reed_solomon_form(code, s)


def test_repetition_code_cyclic_under_identity(gf4, alpha4):
    code = build_code(gf4, 3, 0, alpha4)
    R = build_ring(gf4, 3)
    assert is_sigma_cyclic(code, make_automorphism(R, R.x))
    with pytest.raises(DeltaZero):
        cyclicity_decision(code)


def test_cyclicity_decision_examples(code_ex3, code_ex1):
    r = cyclicity_decision(code_ex3)
    assert r.predicted and r.agreement and r.coverage == 'exhaustive'
    assert r.alpha_x_witness
    F = GF(8)
    neg = cyclicity_decision(build_code(F, 3, 1, find_element_of_order(F, 7)))
    assert not neg.predicted and neg.witnesses == () and neg.agreement
    assert neg.images_searched == 512 and neg.coverage == 'exhaustive'


def test_cyclicity_partial_coverage():
    F = GF(16)
    code = build_code(F, 5, 2, find_element_of_order(F, 5))
    r = cyclicity_decision(code)
    assert r.coverage == 'partial' and r.predicted and r.agreement and r.alpha_x_witness


@pytest.mark.parametrize('q,n', LINEAR_RINGS)
def test_unit_factorization(q, n):
    F = GF(q)
    a = find_element_of_order(F, n)
    R = build_ring(F, n)
    s = multiplication_automorphism(R, a)
    eps0 = R.linear_idempotents(a)[0]
    one = SkewPoly.one(s)
    for d in range(1, n + 1):
        u, u_inv = unit_factorization(R, s, d)
        assert skew_mul(u, u_inv) == one and skew_mul(u_inv, u) == one
        assert u == expanded_unit(R, s, d)
        g = skew_mul(SkewPoly.const(s, eps0), u)
        nF = F.element(F.from_int(n))
        assert g == skew_mul(SkewPoly.const(s, eps0), geometric_z_sum(s, d)) * nF
        if d < n:
            assert g == p_map(build_code(F, n, d, a).G, s)


def test_unit_factorization_small(gf4, alpha4, code_ex1):
    R = build_ring(gf4, 3)
    s = multiplication_automorphism(R, alpha4)
    eps = R.linear_idempotents(alpha4)
    u, _ = unit_factorization(R, s, 1)
    # n = 3 = 1 in characteristic 2
    assert u == SkewPoly(R, s, [R.one, eps[2]])
    assert skew_mul(SkewPoly.const(s, eps[0]), u) == p_map(code_ex1.G, s)


def test_reed_solomon_form_gf4(code_ex1, gf4, alpha4):
    R = build_ring(gf4, 3)
    s = multiplication_automorphism(R, alpha4)
    f = reed_solomon_form(code_ex1)
    # (x - a)(x - a^2) = 1 + x + x^2, and moving it past z applies sigma
    assert f[0] == R.elem([gf4.one] * 3) and f.degree == 1
    assert f[1] == s(f[0]) == R.elem([gf4.one, alpha4.code, gf4.pow(alpha4.code, 2)])
    assert f == p_map(code_ex1.G, s)


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(LINEAR_RINGS), st.integers(0, 6))
def test_generator_identities_property(ring_params, d):
    q, n = ring_params
    d = d % n
    F = GF(q)
    a = find_element_of_order(F, n)
    code = build_code(F, n, d, a)
    R = build_ring(F, n)
    s = multiplication_automorphism(R, a)
    g = p_map(code.G, s)
    assert reed_solomon_form(code) == g == idempotent_form(code)
