import pytest
from hypothesis import given, strategies as st

from ggs_lcs.perm_core import Permutation, commutator, compose, identity, inverse, left_normed

import brute


def perms(degree):
    return st.permutations(list(range(1, degree + 1))).map(Permutation)


def test_compose_identity():
    x = Permutation([2, 3, 1])
    assert compose(x, identity(3)).images == (2, 3, 1)


def test_compose_cycle_squared():
    x = Permutation([2, 3, 1])
    assert compose(x, x).images == (3, 1, 2)


def test_compose_applies_left_factor_first():
    # 1 -> 2 -> 3, 2 -> 1 -> 1, 3 -> 3 -> 2
    assert compose(Permutation([2, 1, 3]), Permutation([1, 3, 2])).images == (3, 1, 2)


def test_commutator_of_two_transpositions():
    # both factors are involutions, so [x, y] = (xy)^2 and xy = [3, 1, 2]
    x, y = Permutation([2, 1, 3]), Permutation([1, 3, 2])
    assert commutator(x, y).images == (2, 3, 1)


def test_commutator_trivial_cases():
    s = Permutation([2, 3, 1])
    assert commutator(s, s).is_identity()
    assert commutator(identity(3), s).is_identity()


def test_degree_mismatch_raises():
    with pytest.raises(ValueError):
        compose(Permutation([2, 1]), Permutation([1, 2, 3]))
    with pytest.raises(ValueError):
        commutator(Permutation([2, 1]), Permutation([1, 2, 3]))


def test_rejects_non_bijection():
    with pytest.raises(ValueError):
        Permutation([1, 1, 2])
    with pytest.raises(ValueError):
        Permutation([])


def test_from_cycles_and_order():
    x = Permutation.from_cycles(6, (1, 2, 3), (4, 5))
    assert x.images == (2, 3, 1, 5, 4, 6)
    assert x.order() == 6
    assert x.cycles() == [(1, 2, 3), (4, 5)]


def test_left_normed_matches_nesting():
    a = Permutation.from_cycles(4, (1, 2, 3, 4))
    b = Permutation.from_cycles(4, (1, 2))
    assert left_normed(b, a, a) == commutator(commutator(b, a), a)


@given(perms(6), perms(6), perms(6))
def test_group_axioms(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * inverse(x) == identity(6)
    assert x ** -2 == inverse(x * x)


@given(perms(7), perms(7))
def test_matches_pointwise_oracle(x, y):
    raw_x = tuple(v - 1 for v in x.images)
    raw_y = tuple(v - 1 for v in y.images)
    assert tuple(v - 1 for v in (x * y).images) == brute.compose(raw_x, raw_y)
    assert tuple(v - 1 for v in commutator(x, y).images) == brute.comm(raw_x, raw_y)
    for k in range(1, 8):
        assert (x * y)(k) == y(x(k))


def test_degree_one():
    x = Permutation([1])
    assert (x * x).is_identity()
    assert x.order() == 1
