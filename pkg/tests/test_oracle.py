from itertools import combinations

import networkx as nx
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from cecpoly.errors import BudgetExceeded
from cecpoly.graphs import Graph, generate, spec
from cecpoly.oracle import OracleConfig, cec_poly_oracle, ec_poly_covered_dp, ec_poly_oracle, min_cec_size
from cecpoly.poly import ONE, ZERO, Poly
from cecpoly.verify import random_tree


def brute_force(g: Graph, connected: bool = True) -> Poly:
    """Reference count written against networkx, sharing no code with the oracle."""
    counts = [0] * (g.m + 1)
    for s in range(g.m + 1):
        for subset in combinations(g.edges, s):
            h = nx.Graph(list(subset))
            if h.number_of_nodes() != g.n:
                continue
            if connected and not nx.is_connected(h):
                continue
            counts[s] += 1
    return Poly(tuple(counts))


@st.composite
def small_graphs(draw, max_n=7, max_m=12):
    n = draw(st.integers(min_value=2, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=max_m))
    return Graph(n, tuple(edges))


@settings(max_examples=60, deadline=None)
@given(small_graphs())
def test_matches_networkx_brute_force(g):
    assert cec_poly_oracle(g) == brute_force(g)
    assert ec_poly_oracle(g) == brute_force(g, connected=False)


@pytest.mark.parametrize("params", [("cycle", 5), ("complete", 4), ("wheel", 5), ("complete_bipartite", 2, 3)])
def test_tutte_specialization(params):
    g = generate(spec(*params))
    x, y = sympy.symbols("x y")
    t = nx.tutte_polynomial(nx.Graph(list(g.edges)))
    z = sympy.Symbol("z")
    expr = sympy.expand(z ** (g.n - 1) * t.subs({x: 1, y: 1 + z}))
    coeffs = sympy.Poly(expr, z).all_coeffs()[::-1]
    assert cec_poly_oracle(g) == Poly(tuple(int(c) for c in coeffs))


def test_small_conventions():
    assert cec_poly_oracle(Graph(1, ())) == ONE
    assert cec_poly_oracle(Graph(0, ())) == ONE
    assert cec_poly_oracle(Graph(4, ((0, 1), (2, 3)))) == ZERO
    assert ec_poly_oracle(Graph(4, ((0, 1), (2, 3)))) == Poly.monomial(2)
    assert ec_poly_oracle(Graph(3, ((0, 1),))) == ZERO


def test_known_values():
    assert cec_poly_oracle(generate(spec("cycle", 5))) == Poly.from_dict({4: 5, 5: 1})
    assert cec_poly_oracle(generate(spec("complete", 4))) == Poly.from_dict({3: 16, 4: 15, 5: 6, 6: 1})
    assert cec_poly_oracle(generate(spec("fan", 4))) == Poly.from_dict({3: 8, 4: 5, 5: 1})


@pytest.mark.parametrize("n", range(2, 12))
def test_trees_are_a_single_monomial(n):
    for seed in range(3):
        assert cec_poly_oracle(random_tree(n, seed)) == Poly.monomial(n - 1)


@pytest.mark.parametrize("params", [("complete", 5), ("hypercube", 3), ("cocktail_party", 3), ("wheel", 7)])
def test_structural_invariants(params):
    g = generate(spec(*params))
    p = cec_poly_oracle(g)
    assert p.coeff(g.m) == 1
    assert p.degree == g.m
    assert (g.n + 1) // 2 <= p.min_exp <= g.n - 1
    assert min_cec_size(g) == g.n - 1
    # removing any single edge keeps these graphs connected
    assert p.coeff(g.m - 1) == g.m


@pytest.mark.parametrize("workers, chunking", [(1, 0), (1, 3), (2, 6), (4, 6), (4, 9)])
def test_partitioning_does_not_change_the_answer(workers, chunking):
    g = generate(spec("hypercube", 3))
    ref = cec_poly_oracle(g, OracleConfig(chunking=0))
    assert cec_poly_oracle(g, OracleConfig(workers=workers, chunking=chunking)) == ref


def test_budget_enforced():
    g = generate(spec("complete", 8))
    with pytest.raises(BudgetExceeded):
        cec_poly_oracle(g)
    with pytest.raises(BudgetExceeded):
        cec_poly_oracle(generate(spec("cycle", 5)), OracleConfig(max_edges=4))


def test_config_validation():
    with pytest.raises(ValueError):
        OracleConfig(max_edges=64)
    with pytest.raises(ValueError):
        OracleConfig(workers=0)


@pytest.mark.parametrize("params", [("complete", 5), ("complete_multipartite", 1, 2, 3), ("wheel", 6), ("path", 4)])
def test_covered_dp_matches_oracle(params):
    g = generate(spec(*params))
    assert ec_poly_covered_dp(g) == ec_poly_oracle(g)


def test_covered_dp_with_isolated_vertex():
    assert ec_poly_covered_dp(Graph(3, ((0, 1),))) == ZERO
