import random
from itertools import product
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from ggs_lcs.ggs import classify_vector, congruence_quotient
from ggs_lcs.perm_core import Permutation, build_chain, lower_central_series, normal_closure
from ggs_lcs.verify import small_test_groups
from ggs_lcs.wreath_algebra import (
    AlgebraElement,
    GroupTuple,
    block_rotation,
    chain_of_tuples,
    check_exponent_p_factors,
    delta_map,
    equation_system,
    gamma_level_equations,
    gamma_level_field,
    iterate_delta,
    iterated_delta_p_minus_2,
    lambda_tuple,
    lambda_vector,
    permutation_to_tuple,
    reduce_to_first_component,
    theta,
    theta_inverse,
    tuple_commutator_with_sigma_perm,
    tuple_to_permutation,
    word_value,
    wreath_lcs_closed_form,
    wreath_membership,
    wreath_perm_group,
)

import brute


def vectors(p):
    return st.lists(st.integers(0, p - 1), min_size=p, max_size=p).map(tuple)


def random_perm(rng, degree):
    img = list(range(1, degree + 1))
    rng.shuffle(img)
    return Permutation(img)


def test_theta_basics():
    assert theta((1, 0, 0)) == AlgebraElement.constant(3)
    assert theta((0, 1, 0, 0, 0)) == AlgebraElement.x(5)
    assert theta_inverse(theta((2, 0, 1))) == (2, 0, 1)
    with pytest.raises(ValueError):
        theta_inverse(theta((2, 0, 1)), 5)


def test_algebra_relations():
    for p in (3, 5, 7):
        x, one = AlgebraElement.x(p), AlgebraElement.constant(p)
        assert x**p == one
        assert ((x - one) ** p).is_zero()
        assert not ((x - one) ** (p - 1)).is_zero()


@settings(max_examples=50)
@given(vectors(5), vectors(5), vectors(5))
def test_ring_axioms(u, v, w):
    a, b, c = theta(u), theta(v), theta(w)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@settings(max_examples=50)
@given(st.sampled_from([3, 5, 7]).flatmap(vectors))
def test_delta_is_multiplication_by_x_minus_one(v):
    p = len(v)
    assert theta(delta_map(v)) == (AlgebraElement.x(p) - AlgebraElement.constant(p)) * theta(v)


def test_delta_examples():
    assert delta_map((1, 0, 0)) == (2, 1, 0)
    assert delta_map((4, 4, 4, 4, 4)) == (0,) * 5
    for p in (3, 5, 7):
        for v in [(1,) + (0,) * (p - 1), tuple(range(p))]:
            assert iterate_delta(v, p) == (0,) * p


def test_lambda_vectors():
    assert lambda_vector(5, 3) == (1, 3, 1, 0, 0)
    assert lambda_vector(5, 1) == (1, 0, 0, 0, 0)
    for p in (3, 5, 7, 11):
        assert lambda_vector(p, p) == (1,) * p
        for i in range(1, p + 1):
            assert lambda_vector(p, i) == iterate_delta((1,) + (0,) * (p - 1), i - 1)
    with pytest.raises(ValueError):
        lambda_vector(3, 4)


def test_binomial_identities():
    for p in (3, 5, 7):
        for i in range(p - 1):
            assert (comb(p - 2, i) - (-1) ** i * (i + 1)) % p == 0
        for r in range(p):
            assert ((-1) ** (p - r - 1) * comb(p - 1, r)) % p == 1


def test_gamma_level_examples():
    assert gamma_level_field((1, 1, 1)) == 3
    assert gamma_level_field((1, 0, 0)) == 1
    assert gamma_level_field((2, 1, 0)) == 2
    assert gamma_level_field((0, 0, 0)) == 4


def test_gamma_level_counts_exhaustive_p3():
    p = 3
    levels = [gamma_level_field(v) for v in product(range(p), repeat=p)]
    for i in range(1, p + 2):
        assert sum(1 for lv in levels if lv >= i) == p ** (p - i + 1)


def test_equation_systems_agree_exhaustive_p3():
    for v in product(range(3), repeat=3):
        assert gamma_level_field(v) == gamma_level_equations(v, "power") == gamma_level_equations(v, "derivative")


@settings(max_examples=200)
@given(st.sampled_from([5, 7]).flatmap(vectors))
def test_equation_systems_agree_random(v):
    assert gamma_level_field(v) == gamma_level_equations(v, "power") == gamma_level_equations(v, "derivative")


def test_equation_system_errors():
    with pytest.raises(ValueError):
        equation_system(3, 1)
    with pytest.raises(ValueError):
        equation_system(3, 2, "other")


def test_top_derivative_is_power_of_x_minus_one():
    # 1 + X + ... + X^(p-1) = (X - 1)^(p-1) in characteristic p
    for p in (3, 5, 7):
        assert equation_system(p, p, "power")[-1] == (1,) * p


def test_lambda_tuple_small_cases():
    g = Permutation([2, 3, 1])
    one = g**0
    assert lambda_tuple(g, 1, 3).entries == (g, one, one)
    assert lambda_tuple(g, 2, 3).entries == (g**-1, g, one)


def test_lambda_tuple_matches_iterated_delta():
    rng = random.Random(1)
    for p in (3, 5):
        for _ in range(10):
            g = random_perm(rng, 6)
            for i in range(1, p + 1):
                assert lambda_tuple(g, i, p) == iterate_delta(GroupTuple.first(g, p), i - 1)


def test_delta_on_tuples_matches_permutation_commutator():
    rng = random.Random(2)
    for _ in range(20):
        t = GroupTuple(tuple(random_perm(rng, 4) for _ in range(3)))
        x = tuple_to_permutation(t)
        assert tuple_to_permutation(delta_map(t)) == tuple_commutator_with_sigma_perm(x, 3)
        assert permutation_to_tuple(x, 3) == t


def test_permutation_to_tuple_rejects_block_movers():
    with pytest.raises(ValueError):
        permutation_to_tuple(block_rotation(3, 2), 3)


def test_iterated_delta_closed_form():
    assert iterated_delta_p_minus_2((0, 0, 1)) == (1, 0, 2)
    assert iterated_delta_p_minus_2((1, 1, 1, 1, 1)) == (0,) * 5


@settings(max_examples=100)
@given(st.sampled_from([3, 5, 7]).flatmap(vectors))
def test_iterated_delta_closed_form_matches_iteration(v):
    assert iterated_delta_p_minus_2(v) == iterate_delta(v, len(v) - 2)


def g2_setup():
    q = congruence_quotient(classify_vector(3, (1, 0)), 2)
    series = q.series
    return q, series


def test_membership_examples():
    q, series = g2_setup()
    g2 = series.chains[1]
    one = q.gen_a**0
    outside = q.gen_b
    # (g, 1, 1) with g outside gamma_2 fails at k = 2
    assert not wreath_membership(GroupTuple.first(outside, 3), 1, 2, g2.contains)
    # (g, g^-1, 1) has trivial entry product
    t = GroupTuple((outside, outside**-1, one))
    assert wreath_membership(t, 1, 2, g2.contains)
    # k = 3 additionally needs g_0 g_1^2 in gamma_2: here that is g^-1
    assert not wreath_membership(t, 1, 3, g2.contains)
    assert word_value(t, (1, 2, 0)) == outside**-1
    with pytest.raises(ValueError):
        wreath_membership(t, 1, 5, g2.contains)
    with pytest.raises(ValueError):
        wreath_membership(t, 2, 2, series.chains[2].contains, entry_oracle=g2.contains)


def test_membership_matches_permutation_groups():
    q, series = g2_setup()
    p = 3
    w_series = lower_central_series(wreath_perm_group(q, p))
    rng = random.Random(3)
    for j in (1, 2):
        top = series.chains[j - 1].strong_generators
        below = series.chains[j].contains
        for _ in range(30):
            t = GroupTuple(tuple(_random_word(rng, top) for _ in range(p)))
            x = tuple_to_permutation(t)
            for k in range(1, p + 2):
                i = (j - 1) * p + k
                expected = w_series.term(i).contains(x) if i >= 2 else True
                assert wreath_membership(t, j, k, below) == expected


def _random_word(rng, gens):
    x = gens[0] ** 0
    for _ in range(6):
        x = x * rng.choice(gens) ** rng.randrange(3)
    return x


def test_reduce_to_first_component():
    q, series = g2_setup()
    one = q.gen_a**0
    g, h = q.gen_a, q.gen_b
    assert reduce_to_first_component(GroupTuple.first(g, 3)) == GroupTuple.first(g, 3)
    assert reduce_to_first_component(GroupTuple((g, h, one))) == GroupTuple.first(g * h, 3)


def test_reduction_is_a_congruence_in_derived_subgroup():
    q, series = g2_setup()
    derived = series.chains[1]
    rng = random.Random(4)
    gens = derived.strong_generators
    for _ in range(50):
        t = GroupTuple(tuple(_random_word(rng, gens) for _ in range(3)))
        quotient = t.inverse() * reduce_to_first_component(t)
        assert wreath_membership(quotient, 2, 2, series.chains[2].contains, entry_oracle=derived.contains)


def test_wreath_perm_group_orders():
    c3 = [Permutation([2, 3, 1])]
    assert build_chain(wreath_perm_group(c3, 3)).order == 3**4
    q, _ = g2_setup()
    gens = wreath_perm_group(q, 3)
    assert gens[0].degree == 27
    assert build_chain(gens).valuation(3) == 13


def test_wreath_generators_preserve_blocks():
    q, _ = g2_setup()
    for g in wreath_perm_group(q, 3):
        block_of_first = [(g(9 * r + 1) - 1) // 9 for r in range(3)]
        for k in range(1, 28):
            assert (g(k) - 1) // 9 == block_of_first[(k - 1) // 9]


def test_wreath_of_cyclic_group_brute_force():
    gens = wreath_perm_group([Permutation([2, 3, 1])], 3)
    raw = [tuple(v - 1 for v in g.images) for g in gens]
    orders = brute.lower_central_orders(raw, 9)
    assert [brute.valuation(o, 3) for o in orders] == [4, 2, 1, 0]


def closed_form_matches(gens, p):
    series = lower_central_series(gens)
    predicted = wreath_lcs_closed_form(series)
    w_gens = wreath_perm_group(gens, p)
    actual = lower_central_series(w_gens)
    assert actual.nilpotency_class == predicted.nilpotency_class
    assert actual.index_exponents[0] == predicted.index_exponents[0] + 1
    assert actual.index_exponents[1:] == predicted.index_exponents[1:]
    degree = w_gens[0].degree
    for i in range(2, predicted.nilpotency_class + 2):
        tuples = predicted.terms[i - 1][0]
        assert chain_of_tuples(tuples, degree).same_group(actual.term(i))
    return predicted


def test_closed_form_for_small_groups():
    for p in (3, 5):
        for name, gens in small_test_groups(p).items():
            if p == 5 and name != "C_p":
                continue
            closed_form_matches(list(gens), p)


def test_closed_form_for_c3_wreath_c3():
    c3c3 = small_test_groups(3)["C_p wr C_p"]
    predicted = closed_form_matches(list(c3c3), 3)
    assert predicted.nilpotency_class == 9
    assert predicted.index_exponents == (2, 2, 2, 1, 1, 1, 1, 1, 1)


def test_closed_form_for_cyclic_group():
    predicted = wreath_lcs_closed_form(lower_central_series([Permutation([2, 3, 4, 5, 1])]))
    assert predicted.nilpotency_class == 5
    assert predicted.index_exponents == (1,) * 5


def test_closed_form_rejects_large_exponent():
    c9 = lower_central_series([Permutation([2, 3, 4, 5, 6, 7, 8, 9, 1])])
    with pytest.raises(ValueError):
        check_exponent_p_factors(c9)
    with pytest.raises(ValueError):
        wreath_lcs_closed_form(c9)


def test_normal_closure_of_sigma_commutator_is_gamma_two():
    gens = wreath_perm_group([Permutation([2, 3, 1])], 3)
    comm = tuple_commutator_with_sigma_perm(gens[0], 3)
    assert normal_closure(gens, [comm]).same_group(lower_central_series(gens).term(2))
