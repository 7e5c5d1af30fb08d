"""Endomorphism construction, cocycles, the bidegree application formula,
and the range-containment facts that bound the induced dynamics."""

import itertools

import pytest

from cuntzlab import (AlgebraElement, EndomorphismSpec, NotUnitaryError,
                      ParseError, Permutation, parse_element, perm_unitary,
                      theta, theta_power, words)
from cuntzlab.endomorphism import index_word, word_index
from cuntzlab.sampling import random_element


def all_line_perms():
    for line in itertools.permutations(range(1, 5)):
        yield Permutation.from_one_line(line, 2, 2)


# ---------------------------------------------------------------- plumbing

def test_word_indexing():
    assert [index_word(i, 2, 2) for i in range(1, 5)] == \
        [(1, 1), (1, 2), (2, 1), (2, 2)]
    for i in range(1, 5):
        assert word_index(index_word(i, 2, 2), 2) == i


def test_permutation_parsing():
    p = Permutation.parse("(1 2)(3 4)")
    assert p.one_line() == (2, 1, 4, 3)
    assert Permutation.parse("(12)(34)").one_line() == (2, 1, 4, 3)
    assert Permutation.parse("id").one_line() == (1, 2, 3, 4)
    assert Permutation.parse("shift").one_line() == (1, 3, 2, 4)
    assert Permutation.parse("flip").one_line() == (3, 4, 1, 2)
    assert Permutation.from_one_line((2, 1, 3, 4), 2, 2) == Permutation.parse("(1 2)")
    with pytest.raises(ParseError):
        Permutation.parse("nonsense")
    with pytest.raises(ValueError):
        Permutation.parse("(1 9)")


def test_cycle_notation_roundtrip():
    for perm in all_line_perms():
        assert Permutation.parse(perm.cycle_notation()) == perm
        assert perm.inverse().inverse() == perm


# ----------------------------------------------------------- theta and u_s

def test_theta_definition(s1):
    assert theta(AlgebraElement.one(2)) == AlgebraElement.one(2)
    expected = parse_element("s[11] t[1] + s[21] t[2]", 2)
    assert theta(s1) == expected


def test_theta_homomorphism(rng):
    for _ in range(10):
        a = random_element(rng, max_terms=3, max_len=2)
        b = random_element(rng, max_terms=3, max_len=2)
        assert theta(a * b) == theta(a) * theta(b)


def test_perm_unitary_examples(one):
    u12 = perm_unitary(Permutation.parse("(1 2)"))
    assert u12 == parse_element(
        "s[11] t[12] + s[12] t[11] + s[21] t[21] + s[22] t[22]", 2)
    assert perm_unitary(Permutation.parse("id")) == one
    assert u12 * u12.adjoint() == one
    assert all(d == 0 for d in u12.degrees())


def test_shift_unitary_gives_theta(rng):
    sh = EndomorphismSpec.canonical_shift(2)
    for i in (1, 2):
        assert sh.apply(AlgebraElement.generator(2, i)) == \
            theta(AlgebraElement.generator(2, i))
    a = random_element(rng, max_terms=3, max_len=2)
    assert sh.apply(a) == theta(a)
    # sigma_23 defines the same endomorphism
    s23 = EndomorphismSpec.from_label("(2 3)")
    assert s23.u == sh.u


# ----------------------------------------------------------------- cocycle

def test_cocycle_identities(psi12, one):
    assert psi12.cocycle(0) == one
    assert psi12.cocycle(1) == psi12.u
    for k in range(5):
        assert psi12.cocycle(k + 1) == psi12.cocycle(k) * theta_power(k, psi12.u)
    ident = EndomorphismSpec.identity(2)
    assert ident.cocycle(4) == one


def test_unitary_enforced():
    p = AlgebraElement.diagonal(2, (1,))
    with pytest.raises(NotUnitaryError):
        EndomorphismSpec(p)


def test_rank_inference(one):
    assert EndomorphismSpec(one, check=False).rank == 1
    u12 = perm_unitary(Permutation.parse("(1 2)"))
    assert EndomorphismSpec(u12).rank == 2
    s1 = AlgebraElement.generator(2, 1)
    s2 = AlgebraElement.generator(2, 2)
    flip = s1 * s2.adjoint() + s2 * s1.adjoint()
    assert EndomorphismSpec(flip).rank == 1


# -------------------------------------------------------------------- apply

def test_apply_worked_examples(psi12, s1, s2):
    assert psi12.apply(s1) == parse_element("s[11] t[2] + s[12] t[1]", 2)
    assert psi12.apply(s2) == s2
    s13 = EndomorphismSpec.from_label("(1 3)")
    assert s13.apply(s1 * s1.adjoint()) == \
        parse_element("s[12] t[12] + s[21] t[21]", 2)


def test_apply_multiplicative_star(rng, psi12):
    for _ in range(10):
        a = random_element(rng, max_terms=3, max_len=2)
        b = random_element(rng, max_terms=3, max_len=2)
        assert psi12.apply(a * b) == psi12.apply(a) * psi12.apply(b)
        assert psi12.apply(a.adjoint()) == psi12.apply(a).adjoint()


def test_apply_agrees_with_generator_substitution(psi12, s1, s2):
    # rho(s_I s_J^*) should equal the product of rho-images of the letters
    for left in words(2, 2):
        for right in words(2, 2):
            mono = AlgebraElement.monomial(2, left, right)
            via_gens = AlgebraElement.one(2)
            for c in left:
                via_gens = via_gens * psi12.apply(AlgebraElement.generator(2, c))
            for c in reversed(right):
                via_gens = via_gens * psi12.apply(
                    AlgebraElement.generator(2, c)).adjoint()
            assert psi12.apply(mono) == via_gens


def test_correspondence_roundtrip():
    for label in ("(1 2)", "(2 3)", "(1 3 2 4)", "(1 4)(2 3)"):
        endo = EndomorphismSpec.from_label(label)
        total = AlgebraElement.zero(2)
        for i in (1, 2):
            s_i = AlgebraElement.generator(2, i)
            total = total + endo.apply(s_i) * s_i.adjoint()
        assert total == endo.u


def test_verify_report(psi12):
    assert all(psi12.verify().values())
    bad = EndomorphismSpec(AlgebraElement.diagonal(2, (1,)), rank=1, check=False)
    assert not bad.verify()["unitary"]


def test_gauge_invariance(one):
    assert EndomorphismSpec.from_label("(1 2 3)").is_gauge_invariant()
    from cuntzlab import GaussianRational
    from fractions import Fraction
    lam = GaussianRational(Fraction(0), Fraction(1))
    gauge = EndomorphismSpec(one.scaled(lam), rank=1)
    assert gauge.is_gauge_invariant()
    s1 = AlgebraElement.generator(2, 1)
    unbalanced = EndomorphismSpec(
        AlgebraElement.isometry(2, (1, 1)) * s1.adjoint()
        + AlgebraElement.isometry(2, (1, 2))
        * AlgebraElement.generator(2, 2).adjoint(),
        check=False)
    assert not unbalanced.is_gauge_invariant()


# ------------------------------------------------------- range containment

def test_range_containment_examples():
    assert EndomorphismSpec.from_label("(1 2)").range_containment(1, 1, 1)
    assert EndomorphismSpec.identity(2).range_containment(2, 2, 2)
    assert EndomorphismSpec.from_label("(2 3)").range_containment(2, 2, 2)


def test_apply_power_single_monomials():
    s23 = EndomorphismSpec.from_label("(2 3)")
    start = AlgebraElement.diagonal(2, (1,))
    out = s23.apply_power(2, start)
    expected = AlgebraElement.zero(2)
    for k in words(2, 2):
        expected = expected + AlgebraElement.diagonal(2, k + (1,))
    assert out == expected
    assert s23.apply_power(0, start) == start


def test_f_subspace_invariance_of_automorphisms():
    for label in ("id", "(1 2)(3 4)", "(1 3)(2 4)", "(1 4)(2 3)"):
        endo = EndomorphismSpec.from_label(label)
        for p in range(1, 5):
            for left in words(2, p):
                for right in words(2, p):
                    img = endo.apply(AlgebraElement.monomial(2, left, right))
                    assert img.in_F(p, p), (label, left, right)


def test_trace_invariance_spot(rng):
    for label in ("(1 2)", "(2 3)", "(1 2 3 4)"):
        endo = EndomorphismSpec.from_label(label)
        for _ in range(10):
            a = random_element(rng, max_terms=4, max_len=3)
            assert endo.apply(a).trace_state() == a.trace_state()
