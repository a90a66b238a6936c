from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st
import pytest

from fock import (
    EndoSpec,
    ExteriorElement,
    WedgeWord,
    basis_element,
    boson_fermion_check,
    complement_element,
    derivation_apply,
    normalize_wedge,
    pairing,
    schubert_derivation_check,
    shift_endo,
    sigma_bar_plus,
    sigma_minus,
    sigma_minus_pieri,
    sigma_plus,
    sigma_plus_exp,
    wedge,
    zero_element,
)
from partitions import conjugate, fits, partitions_in_rectangle, pieri_up
from ringb import complete_generator, expand_in_schur, schur_polynomial


def word(*indices):
    return WedgeWord(indices)


def single(n, j):
    return ExteriorElement(1, n, {word(j): 1})


def test_wedge_words():
    assert WedgeWord.from_partition((2, 1), 3) == (4, 2, 0)
    assert word(4, 2, 0).partition == (2, 1)
    assert WedgeWord.from_partition((), 2) == (1, 0)
    assert str(word(3, 1, 0)) == "X[3,1,0]"
    with pytest.raises(ValueError):
        WedgeWord((0, 1))


def test_normalize_wedge():
    assert normalize_wedge([1, 0], 2) == (1, word(1, 0))
    assert normalize_wedge([0, 1], 2) == (-1, word(1, 0))
    assert normalize_wedge([2, 2], 3) == (0, None)
    assert normalize_wedge([0, 2, 1], 3) == (1, word(2, 1, 0))
    with pytest.raises(ValueError):
        normalize_wedge([4, 0], 4)


def test_exterior_element_validation_and_json():
    u = basis_element((1,), 2, 4)
    assert u.to_json() == {"r": 2, "n": 4, "terms": [{"partition": "1", "word": [2, 0], "coef": "1"}]}
    assert u.render() == "X[2,0]"
    with pytest.raises(ValueError):
        basis_element((3,), 2, 4)
    with pytest.raises(ValueError):
        ExteriorElement(2, 4, {word(4, 0): 1})


def test_shift_endo():
    assert shift_endo(4, 1)(3) is None
    assert shift_endo(4, -1)(0) is None
    assert shift_endo(4, -1)(2) == (1, 1)
    assert shift_endo(5, 1).compose(shift_endo(5, 1)) == shift_endo(5, 2)
    with pytest.raises(ValueError):
        EndoSpec(3, ((5, 1), None, None))


def test_derivation_apply():
    u = ExteriorElement(2, 4, {word(1, 0): 1})
    assert derivation_apply(shift_endo(4, 1), u) == ExteriorElement(2, 4, {word(2, 0): 1})
    assert derivation_apply(shift_endo(4, 1), single(4, 2)) == single(4, 3)
    assert not derivation_apply(shift_endo(4, -1), single(4, 0))


def test_sigma_plus_examples():
    assert sigma_plus(0, basis_element((2, 1), 2, 5)) == basis_element((2, 1), 2, 5)
    assert sigma_plus(1, basis_element((), 2, 4)) == basis_element((1,), 2, 4)
    assert sigma_plus(2, basis_element((), 1, 4)) == basis_element((2,), 1, 4)
    assert sigma_plus(1, basis_element((2, 2), 2, 4)) == zero_element(2, 4)


def test_sigma_plus_exp_examples():
    u = basis_element((), 2, 4)
    assert sigma_plus_exp(0, u) == u
    assert sigma_plus_exp(1, u) == basis_element((1,), 2, 4)
    assert sigma_plus_exp(2, basis_element((), 1, 4)) == basis_element((2,), 1, 4)


def test_sigma_bar_plus_on_single_vectors():
    assert sigma_bar_plus(0, single(4, 0)) == single(4, 0)
    assert sigma_bar_plus(1, single(4, 0)) == single(4, 1).scale(-1)
    assert not sigma_bar_plus(2, single(4, 0))


def test_sigma_bar_plus_adds_vertical_strips():
    r, n = 2, 6
    for shape in partitions_in_rectangle(r, n - r):
        u = basis_element(shape, r, n)
        for i in range(4):
            expected = {}
            for mu_conj in pieri_up(conjugate(shape), i):
                mu = conjugate(mu_conj)
                if fits(mu, r, n - r):
                    expected[mu] = (-1) ** i
            assert sigma_bar_plus(i, u) == ExteriorElement.from_partitions(r, n, expected)


def test_sigma_minus_examples():
    assert sigma_minus(1, basis_element((1,), 1, 4)) == basis_element((), 1, 4)
    assert sigma_minus(1, basis_element((2, 2), 2, 4)) == basis_element((2, 1), 2, 4)
    for i in range(1, 4):
        assert not sigma_minus(i, basis_element((), 2, 4))


@pytest.mark.parametrize("r, n", [(1, 4), (2, 4), (2, 5), (3, 6)])
def test_pieri_matches_exponential(r, n):
    for shape in partitions_in_rectangle(r, n - r):
        u = basis_element(shape, r, n)
        for i in range(5):
            assert sigma_plus(i, u) == sigma_plus_exp(i, u)
            assert sigma_minus(i, u) == sigma_minus_pieri(i, u)


def test_wedge_product():
    assert wedge(single(3, 1), single(3, 0)) == ExteriorElement(2, 3, {word(1, 0): 1})
    assert wedge(single(3, 0), single(3, 1)) == ExteriorElement(2, 3, {word(1, 0): -1})
    assert not wedge(single(3, 2), single(3, 2))
    with pytest.raises(ValueError):
        wedge(single(3, 0), single(4, 0))


@pytest.mark.parametrize("i", range(4))
def test_hasse_schmidt_leibniz_rule(i):
    n = 5
    for j in range(n):
        u = single(n, j)
        for shape in partitions_in_rectangle(2, n - 2):
            v = basis_element(shape, 2, n)
            for apply in (sigma_plus, sigma_minus):
                lhs = apply(i, wedge(u, v))
                rhs = zero_element(3, n)
                for k in range(i + 1):
                    rhs = rhs + wedge(apply(k, u), apply(i - k, v))
                assert lhs == rhs


def test_adjointness_on_basis_of_wedge_two_v_six():
    basis = [basis_element(p, 2, 6) for p in partitions_in_rectangle(2, 4)]
    for i in range(4):
        for u in basis:
            for v in basis:
                assert pairing(sigma_minus(i, u), v) == pairing(u, sigma_plus(i, v))


def test_pairing_is_orthonormal():
    u = basis_element((1,), 2, 4)
    v = basis_element((2,), 2, 4)
    assert pairing(u, u) == 1
    assert pairing(u, v) == 0
    assert pairing(u.scale(3) + v, u) == 3


def test_complement_element():
    assert complement_element(basis_element((1,), 2, 4)) == basis_element((2, 1), 2, 4)
    for shape in partitions_in_rectangle(2, 3):
        u = basis_element(shape, 2, 5).scale(Fraction(2, 3))
        assert complement_element(complement_element(u)) == u


@pytest.mark.parametrize("r, n", [(2, 4), (2, 5)])
def test_sigma_plus_matches_schur_multiplication(r, n):
    for shape in partitions_in_rectangle(r, n - r):
        for i in range(3):
            nvars = max(shape.weight + i, 1)
            product = expand_in_schur(complete_generator(i, nvars) * schur_polynomial(shape, nvars))
            image = sigma_plus(i, basis_element(shape, r, n))
            for mu, coef in product.coeffs.items():
                if fits(mu, r, n - r):
                    assert image.coefficient(mu) == coef
            assert all(product.coefficient(mu) == c for mu, c in image.partition_coeffs().items())


@pytest.mark.parametrize("r, n, max_i", [(1, 4, 3), (2, 4, 4), (2, 6, 3)])
def test_schubert_derivation_check(r, n, max_i):
    report = schubert_derivation_check(r, n, max_i)
    assert report.passed, report.render()


@pytest.mark.parametrize("r, n, cut", [(1, 5, 4), (2, 4, 2), (2, 4, 4)])
def test_boson_fermion(r, n, cut):
    report = boson_fermion_check(r, n, cut)
    assert report.passed, report.render()


def test_boson_fermion_refuses_large_cut():
    with pytest.raises(ValueError):
        boson_fermion_check(2, 4, 5)


@pytest.mark.property_based
@given(st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=5), min_size=10, max_size=10),
       st.integers(min_value=0, max_value=3))
@settings(max_examples=30, deadline=None)
def test_sigma_plus_is_linear(coefficients, i):
    shapes = partitions_in_rectangle(2, 3)
    u = ExteriorElement.from_partitions(2, 5, dict(zip(shapes, coefficients)))
    total = zero_element(2, 5)
    for shape, coef in zip(shapes, coefficients):
        total = total + sigma_plus(i, basis_element(shape, 2, 5)).scale(coef)
    assert sigma_plus(i, u) == total
    assert sigma_plus_exp(i, u) == total
