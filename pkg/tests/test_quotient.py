from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from punctual.diagram import YoungDiagram, enumerate_partitions, from_partition
from punctual.quotient import QuotientElement, mult, nf0, nf1
from punctual.tangent import HomElement, hom_basis

from conftest import all_diagrams


def test_nf0():
    d = YoungDiagram((5, 2, 1, 1))
    assert nf0((2, 0), d) == QuotientElement(d, {(2, 0): 1})
    assert nf0((2, 1), d).is_zero()
    assert nf0((0, 0), d) == QuotientElement(d, {(0, 0): 1})


def test_mult_examples():
    d = YoungDiagram((2,))
    one = nf0((0, 0), d)
    assert mult((1, 0), one) == nf0((1, 0), d)
    assert mult((1, 0), nf0((1, 0), d)).is_zero()
    d = YoungDiagram((2, 1))
    x_plus_1 = QuotientElement(d, {(1, 0): 1, (0, 0): 1})
    assert mult((0, 1), x_plus_1) == QuotientElement(d, {(0, 1): 1})


def test_element_rejects_cells_outside():
    with pytest.raises(ValueError):
        QuotientElement(YoungDiagram((2,)), {(0, 1): 1})


def test_vector_round_trip():
    d = YoungDiagram((3, 1))
    q = QuotientElement(d, {(2, 0): Fraction(1, 2), (0, 1): -3})
    assert QuotientElement.from_vector(d, q.to_vector()) == q
    assert len(q.to_vector()) == d.n


def _x_squared_to_x():
    d = YoungDiagram((2,))
    return d, HomElement.from_values(d, {(2, 0): {(1, 0): 1}})


def test_nf1_examples():
    d, phi = _x_squared_to_x()
    assert phi.is_valid()
    assert nf1((2, 0), phi) == QuotientElement(d, {(1, 0): 1})
    assert nf1((3, 0), phi).is_zero()
    assert nf1((1, 0), phi).is_zero()


def _elements(d):
    coeffs = st.lists(st.integers(-3, 3), min_size=d.n, max_size=d.n)
    return coeffs.map(lambda v: QuotientElement.from_vector(d, v))


@given(st.sampled_from(all_diagrams(6)).flatmap(lambda d: _elements(d)))
def test_mult_commutes(q):
    assert mult((1, 0), mult((0, 1), q)) == mult((0, 1), mult((1, 0), q))
    assert mult((2, 1), q) == mult((1, 0), mult((1, 1), q))


@pytest.mark.parametrize("n", range(1, 9))
def test_nf1_independent_of_divisor(n):
    for d in enumerate_partitions(n):
        for phi in hom_basis(d):
            for a in range(2 * n + 1):
                for b in range(2 * n + 1):
                    assert nf1((a, b), phi, strategy="max_y") == nf1((a, b), phi, strategy="max_x")


@given(st.sampled_from(all_diagrams(6)), st.integers(-3, 3), st.integers(-3, 3), st.data())
def test_nf1_linear_in_phi(d, s, t, data):
    basis = hom_basis(d)
    phi = data.draw(st.sampled_from(basis))
    psi = data.draw(st.sampled_from(basis))
    combo = phi.scale(s) + psi.scale(t)
    for a in range(d.width + 3):
        for b in range(d.height + 3):
            m = (a, b)
            assert nf1(m, combo) == nf1(m, phi).scale(s) + nf1(m, psi).scale(t)


def test_nf1_on_larger_example():
    d = from_partition([5, 2, 1, 1])
    phi = HomElement.from_values(d, {(5, 0): {(2, 0): 1}})
    assert phi.is_valid()
    assert nf1((5, 0), phi) == nf0((2, 0), d)
    assert nf1((6, 0), phi) == nf0((3, 0), d)
    assert nf1((7, 0), phi) == nf0((4, 0), d)
    assert nf1((8, 0), phi).is_zero()
