from math import comb, isqrt

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from gccodes import codes as cc
from gccodes.cyclotomic import enumerate_blocks, orbit_table, quadratic_residues
from gccodes.field import primitive_nth_root
from gccodes.poly import Polynomial, poly_sigma
from gccodes.span import GuardExceeded


def block(n, elems):
    return orbit_table(n, 2, 2).block(elems)


def test_splitting_fields():
    assert cc.splitting_field(13, 2, 2).M == 12
    assert cc.splitting_field(17, 2, 2).M == 8
    assert cc.splitting_field(19, 2, 2).M == 18


def test_generator_n3():
    C = cc.code_from_block(block(3, [1]))
    F = C.field
    w = primitive_nth_root(F, 3)
    assert C.generator == Polynomial(F, (w.value, 1))
    # g g^sigma = x^2 + x + 1
    assert C.generator * poly_sigma(C.generator, 2) == Polynomial(F, (1, 1, 1))


def test_generator_n5_divides_cyclotomic():
    C = cc.code_from_block(block(5, [1, 4]))
    F = C.field
    assert C.generator.degree == 2
    assert (Polynomial(F, (1, 1, 1, 1, 1)) % C.generator).is_zero
    assert C.dimension == 3


def test_generator_n17(b17):
    C = cc.code_from_block(b17)
    assert C.generator.degree == 4 and C.dimension == 13


def test_galois_coprime_examples():
    C = cc.code_from_block(block(3, [1]))
    F = C.field
    assert cc.is_galois_coprime(C.generator, 2, 2)
    assert not cc.is_galois_coprime(Polynomial(F, (1, 1, 1)), 2, 2)
    assert cc.is_galois_coprime(Polynomial.one(F), 2, 2)


def test_closed_form_examples(b17):
    C5 = cc.code_from_block(block(5, [1, 4]))
    assert cc.fqwe_closed(C5).counts == (2, 10, 20, 20, 10, 2)
    assert cc.fqwe_brute(C5).counts == (2, 10, 20, 20, 10, 2)
    W = cc.fqwe_closed(cc.code_from_block(b17))
    assert W[9] == 2**9 * comb(17, 9)


def test_full_space_closed_form():
    C = cc.code_from_roots(5, 2, 2, [])
    W = cc.fqwe_closed(C)
    assert W.counts == tuple(2**5 * comb(5, w) for w in range(6))
    assert W.total == 4**5


def test_zero_code():
    C = cc.code_from_roots(5, 2, 2, range(5))
    assert cc.fqwe_brute(C).counts == (0, 0, 0, 0, 0, 1)
    assert cc.psi_weight_enumerator_brute(C).counts == (1, 0, 0, 0, 0, 0)


def test_closed_form_rejects_non_coprime():
    C = cc.code_from_roots(3, 2, 2, [1, 2])
    with pytest.raises(cc.NotGaloisCoprime):
        cc.fqwe_closed(C)


def _psi_identity(C):
    b = cc.fqwe_brute(C)
    a = cc.psi_weight_enumerator_brute(C)
    L = cc.conjugate_lcm(C.generator, C.q, C.r)
    return b.counts == a.reciprocal().scaled(C.q ** (C.n - L.degree), "fq_weight").counts


def test_psi_identity_fq_generator():
    assert _psi_identity(cc.code_from_roots(3, 2, 2, [1, 2]))


def test_psi_image_of_supplemented_code():
    a = cc.psi_weight_enumerator_brute(cc.code_from_block(block(5, [1, 4])))
    assert a.counts == tuple(comb(5, w) for w in range(6))


def test_r2_route_matches_brute():
    # n=15: generator mixing a block factor with x+1
    t = orbit_table(15, 2, 2)
    orbs = [o for o in t.H_orbits if 0 not in o]
    roots = set(orbs[0]) | {0}
    C = cc.code_from_roots(15, 2, 2, roots | set(orbs[-1]))
    assert cc.fqwe_r2(C.generator, 2, 15) == cc.fqwe_brute(C)
    C = cc.code_from_block(block(5, [1, 4]))
    assert cc.fqwe_r2(C.generator, 2, 5) == cc.fqwe_closed(C)


def test_repetition_code_r2():
    C = cc.code_from_roots(5, 2, 2, [1, 2, 3, 4])
    W = cc.fqwe_r2(C.generator, 2, 5)
    assert W[5] == 2 and W[0] == 2 and W.total == 4


def test_subcode_examples():
    C = cc.code_from_block(block(5, [1, 4]))
    F = C.field
    assert cc.fqwe_subcode(C, Polynomial.one(F)) == cc.fqwe_closed(C)
    W = cc.fqwe_subcode(C, Polynomial.linear(F, 1))
    assert (W[5], W[3], W[1]) == (1, 10, 5)
    assert W == cc.fqwe_even_subcode(C)


def test_subcode_general_divisor_brute():
    B = block(15, [1, 4])
    C = cc.code_from_block(B)
    F = C.field
    # x^2 + x + 1 has coefficients in F_2 and is coprime to g
    g0 = Polynomial(F, (1, 1, 1))
    sub = cc.code_from_generator(g0 * C.generator, 15, 2, 2)
    assert cc.fqwe_subcode(C, g0) == cc.fqwe_brute(sub)


def test_even_and_extended_n5():
    C = cc.code_from_block(block(5, [1, 4]))
    assert cc.fqwe_even_subcode(C).counts == (0, 5, 0, 10, 0, 1)
    assert cc.fqwe_extended(C).counts == (2, 0, 30, 0, 30, 0, 2)
    assert cc.fqwe_extended_brute(C) == cc.fqwe_extended(C)


def test_even_subcode_n17(b17):
    W = cc.fqwe_even_subcode(cc.code_from_block(b17))
    assert W[9] == 2**8 * comb(17, 9)


def test_min_distances(qr13):
    assert cc.min_distance(cc.code_from_block(qr13)) == 5
    assert cc.min_distance(cc.code_from_block(block(17, [2, 6, 7, 8, 9, 10, 11, 15]))) == 7


def test_guard():
    C = cc.code_from_block(block(17, [2, 8, 9, 15]))
    with pytest.raises(GuardExceeded):
        cc.min_distance(C, guard=1000)


def test_idempotent_n3():
    C = cc.code_from_block(block(3, [1]))
    F = C.field
    w = primitive_nth_root(F, 3)
    assert cc.idempotent(C) == Polynomial(F, (0, (w * w).value, w.value))


def test_idempotent_trivial_codes():
    C = cc.code_from_roots(5, 2, 2, [])
    assert cc.idempotent(C) == Polynomial.one(C.field)
    rep = cc.code_from_roots(5, 2, 2, [1, 2, 3, 4])
    # 1/5 = 1 in characteristic 2
    assert cc.idempotent(rep) == Polynomial(rep.field, (1,) * 5)


def test_quaternary_dual_examples(qr13):
    B3 = block(3, [1])
    star = cc.quaternary_dual_block(B3)
    assert star.elements == (2,)
    assert cc.quaternary_dual_block(star).elements == B3.scaled(-2).elements == (1,)
    assert cc.quaternary_dual_block(cc.quaternary_dual_block(qr13)).elements == qr13.elements


@pytest.mark.parametrize("n", [3, 5, 11, 13, 17])
def test_idempotent_closed_form(n):
    for B in enumerate_blocks(orbit_table(n, 2, 2), complete=True):
        C = cc.code_from_block(B)
        assert cc.idempotent(C) == cc.quaternary_idempotent_form(B)
        star2 = cc.quaternary_dual_block(cc.quaternary_dual_block(B))
        expect = B.scaled(-1) if n % 4 == 1 else B.scaled(-2)
        assert star2.elements == expect.elements


def test_self_duality_examples(qr13):
    assert cc.dual_extended_check(block(3, [1])).self_dual
    assert cc.dual_extended_check(block(11, quadratic_residues(11))).self_dual
    rep = cc.dual_extended_check(qr13)
    assert not rep.self_dual and rep.orthogonal_to_dual


def test_odd_type_weight_n13(qr13):
    C = cc.code_from_block(qr13)
    w = cc.min_weight_odd_type(C)
    assert w * w >= 13


def test_affine_examples(qr13):
    word = list(range(7))
    assert cc.apply_affine(word, -1, 1) == word[::-1]
    C = cc.code_from_block(qr13)
    assert cc.is_automorphism(C, 3, 0)
    assert not cc.is_automorphism(C, 2, 0)
    assert cc.is_automorphism(C, 1, 5)  # cyclic shift


@pytest.mark.parametrize("n", [5, 13, 17])
def test_reversibility_matches_reversal(n):
    for B in enumerate_blocks(orbit_table(n, 2, 2)):
        C = cc.code_from_block(B)
        assert cc.is_automorphism(C, -1, 1) == B.is_reversible


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([1, 3, 4, 9, 10, 12]), st.integers(0, 12))
def test_affine_closure_qr13(a, b):
    qr = orbit_table(13, 2, 2).block(quadratic_residues(13))
    assert cc.is_automorphism(cc.code_from_block(qr), a, b)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 4**7 - 1))
def test_codewords_are_contained(msg):
    qr = orbit_table(13, 2, 2).block(quadratic_residues(13))
    C = cc.code_from_block(qr)
    coeffs = [(msg >> (2 * i)) & 3 for i in range(7)]
    sf = C.coefficient_field
    word = np.zeros(13, dtype=np.uint8)
    for c, row in zip(coeffs, C.basis()):
        word = sf.add(word, sf.scale(c, row))
    assert C.contains(word)
    assert C.contains(np.roll(word, 1))


@pytest.mark.parametrize("n", [3, 13, 17])
def test_conjugate_lambda_swaps_dual_block(n):
    for B in enumerate_blocks(orbit_table(n, 2, 2), complete=True):
        assert cc.quaternary_dual_block(B, "w2").elements == cc.quaternary_dual_block(B).scaled(2).elements


def test_empty_block_is_full_code():
    C = cc.code_from_block(block(5, []))
    assert C.dimension == 5 and C.generator == Polynomial.one(C.field)


def test_splitting_field_n29_root():
    F = cc.splitting_field(29, 2, 2)
    assert F.M == 28
    assert primitive_nth_root(F, 29).order() == 29
