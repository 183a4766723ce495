from math import comb

import pytest

from cecpoly import formulas as F
from cecpoly.engine import spanning_tree_count
from cecpoly.errors import InvalidParameter
from cecpoly.graphs import generate, spec
from cecpoly.oracle import cec_poly_oracle, ec_poly_oracle
from cecpoly.poly import Poly


def test_small_families():
    assert F.cec_path(4) == Poly.monomial(3)
    assert F.cec_star(5) == Poly.monomial(5)
    assert F.cec_tree(1) == Poly.monomial(0)
    assert F.cec_cycle(5) == Poly.from_dict({4: 5, 5: 1})


def test_complete_totals():
    assert [F.cec_complete_total(n) for n in range(1, 7)] == [1, 1, 4, 38, 728, 26704]


def test_k2n():
    assert F.cec_k2n(3) == Poly.from_dict({4: 12, 5: 6, 6: 1})
    for n in range(2, 7):
        assert F.cec_k2n(n)(1) == F.cec_k2n_total(n) == 3**n - 2**n


def test_friendship():
    assert F.cec_friendship(1) == Poly.from_dict({2: 3, 3: 1})
    assert F.cec_friendship(3)(1) == 64


def test_lollipop_is_a_shift():
    k4 = Poly.from_dict({3: 16, 4: 15, 5: 6, 6: 1})
    assert F.cec_lollipop(4, 2, k4) == Poly.from_dict({5: 16, 6: 15, 7: 6, 8: 1})


def test_fan_claim_reproduced_as_stated():
    assert F.cec_fan_claimed(4) == Poly.from_dict({3: 1, 4: 4, 5: 4})
    assert F.fan_total_claimed(6) == 81
    # enumeration disagrees already at n = 4
    assert cec_poly_oracle(generate(spec("fan", 4))) == Poly.from_dict({3: 8, 4: 5, 5: 1})


def test_cocktail_claims_reproduced_as_stated():
    assert F.cec_cocktail_claimed(2) == Poly.from_dict({3: 4, 4: 1})
    listed = F.cec_cocktail_claimed(3)
    assert listed(1) == 2712 != F.cocktail_total_claimed(3) == 2656
    assert listed.coeff(10) == 90 > comb(12, 2)
    assert F.cec_cocktail_claimed(4).is_zero()


def test_wheel_recurrence_and_closed_form():
    assert [F.wheel_total(n) for n in (4, 5, 6, 7)] == [38, 134, 462, 1526]
    for n in range(4, 65):
        assert F.wheel_total(n, "recurrence") == F.wheel_total(n, "closed_form")
    with pytest.raises(InvalidParameter):
        F.wheel_total(5, "other")


@pytest.mark.parametrize("parts, count", [((1, 1, 1), 4), ((2, 2), 7), ((1, 1, 2), 16)])
def test_multipartite_examples(parts, count):
    assert F.ec_count_multipartite(parts) == count
    assert F.ec_poly_multipartite(parts)(1) == count


@pytest.mark.parametrize("parts", [(1, 2), (2, 3), (1, 1, 1, 1), (2, 2, 1), (3, 3)])
def test_multipartite_poly_matches_edge_covers(parts):
    g = generate(spec("complete_multipartite", *parts))
    assert F.ec_poly_multipartite(parts) == ec_poly_oracle(g)


@pytest.mark.parametrize("n, k", [(4, 2), (5, 3), (6, 4), (7, 3)])
def test_turan_ie_counts_edge_covers(n, k):
    g = generate(spec("turan", n, k))
    assert F.turan_ie_poly(n, k) == ec_poly_oracle(g)


def test_turan_ie_is_not_the_connected_polynomial():
    g = generate(spec("turan", 4, 2))
    assert F.turan_ie_poly(4, 2) != cec_poly_oracle(g)


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_hypercube_trees(d):
    assert F.hypercube_spanning_trees(d) == spanning_tree_count(generate(spec("hypercube", d)))


def test_hypercube_d4_value():
    assert F.hypercube_spanning_trees(4) == 42467328


@pytest.mark.parametrize("n, k", [(n, k) for n in range(3, 10) for k in range(2, n)])
def test_turan_trees(n, k):
    assert F.turan_spanning_trees(n, k) == spanning_tree_count(generate(spec("turan", n, k)))


def test_bounds_check():
    g = generate(spec("cycle", 6))
    assert F.bounds_check(g, Poly.from_dict({5: 6, 6: 1}))
    assert not F.bounds_check(g, Poly.from_dict({2: 1}))


def test_dispatch():
    assert F.formula_for(spec("cycle", 5)).poly == F.cec_cycle(5)
    assert F.formula_for(spec("complete", 6)).total == 26704
    assert F.formula_for(spec("wheel", 7)).total == 1526
    assert F.formula_for(spec("hypercube", 3)) is None
    assert F.formula_for(spec("lollipop", 3, 2)) is None
    assert F.formula_for(spec("complete_bipartite", 5, 2)).total == 3**5 - 2**5


@pytest.mark.parametrize(
    "call", [lambda: F.cec_cycle(2), lambda: F.cec_path(1), lambda: F.cec_fan_claimed(3), lambda: F.turan_spanning_trees(3, 3)]
)
def test_parameter_errors(call):
    with pytest.raises(InvalidParameter):
        call()
