"""Expected-degree sums against closed forms and domination bounds."""

import pytest

from distgraph.degrees import expected_degree_finite, expected_degree_infinite
from distgraph.lattice import LatticeSpace, iter_points
from distgraph.models import Constant, InverseDistance


def test_dimension_two_closed_form_example():
    # sum over d=1..2(n-1) of 4d / (n^beta d) = 4(2n-2)/n^beta
    value = expected_degree_infinite(2, 18, InverseDistance(beta=1.0, n=10))
    assert value == pytest.approx(7.2, rel=1e-12)


@pytest.mark.parametrize("n", [10, 100, 1000])
@pytest.mark.parametrize("beta", [0.5, 1.0, 2.0])
def test_dimension_two_closed_form(n, beta):
    value = expected_degree_infinite(2, 2 * (n - 1), InverseDistance(beta=beta, n=n))
    assert value == pytest.approx(4 * (2 * n - 2) / n**beta, rel=1e-12)
    assert value < 8 * n ** (1 - beta)


def test_degree_bound_higher_dimensions():
    # empirical check that the O(n^(r-1-beta)) scaling holds at desk sizes
    for r in (3, 4):
        for beta in (r - 1 + 0.5, r - 1 + 1.0):
            ratios = []
            for n in (8, 16, 32):
                value = expected_degree_infinite(r, r * (n - 1), InverseDistance(beta, n))
                ratios.append(value / n ** (r - 1 - beta))
            # the normalized values stay bounded as n doubles
            assert max(ratios) <= 4 * min(ratios)


def test_constant_model_counts_all_other_vertices():
    space = LatticeSpace(5, 2)
    assert expected_degree_finite(space, Constant(1.0), (2, 2)) == pytest.approx(24.0)


@pytest.mark.parametrize("n,r", [(6, 2), (4, 3)])
def test_finite_never_exceeds_truncated_infinite(n, r):
    space = LatticeSpace(n, r)
    model = InverseDistance(beta=1.0, n=n)
    bound = expected_degree_infinite(r, space.max_distance, model)
    for v in iter_points(space):
        assert expected_degree_finite(space, model, v) <= bound + 1e-12


def test_validation():
    with pytest.raises(ValueError):
        expected_degree_infinite(0, 5, Constant(0.5))
    with pytest.raises(ValueError):
        expected_degree_infinite(2, -1, Constant(0.5))
