import random

import pytest
from hypothesis import given, settings, strategies as st

from ggs_lcs.perm_core import compose
from ggs_lcs.tree_autos import (
    Portrait,
    SectionTuple,
    commutator,
    commutator_with_a_sections,
    from_permutation,
    generator_a,
    generator_b,
    inverse,
    multiply,
    psi_decompose,
    random_portrait,
    reassemble,
    to_permutation,
)


def portraits(p, depth, stabilize=0):
    return st.randoms(use_true_random=False).map(lambda r: random_portrait(p, depth, r, stabilize))


def test_generator_a_is_sigma():
    assert to_permutation(generator_a(3, 1)).images == (2, 3, 1)
    assert to_permutation(generator_a(3, 2)).images == (4, 5, 6, 7, 8, 9, 1, 2, 3)
    assert to_permutation(generator_a(5, 2)).order() == 5


def test_generator_b_unfolds_once():
    assert to_permutation(generator_b((1, 0), 2)).images == (2, 3, 1, 4, 5, 6, 7, 8, 9)


def test_generator_b_fixes_first_level():
    for p, e in [(3, (1, 0)), (3, (2, 2)), (5, (1, 2, 0, 3))]:
        for n in (1, 2, 3):
            assert generator_b(e, n).root_label == 0


def test_generator_orders():
    assert to_permutation(generator_b((1, 0), 3)).order() == 3
    for p, e in [(3, (0, 1)), (5, (1, 0, 0, 0)), (7, (1, 2, 3, 4, 5, 6))]:
        for n in (2, 3):
            assert to_permutation(generator_a(p, n)).order() == p
            assert to_permutation(generator_b(e, n)).order() == p


def test_generator_b_labels_on_the_spine():
    b = generator_b((1, 2), 3)
    assert b.label((1,)) == 1 and b.label((2,)) == 2
    assert b.label((3, 1)) == 1 and b.label((3, 2)) == 2
    assert b.label((1, 1)) == 0 and b.label((3,)) == 0


def test_multiply_identity_and_inverse():
    x = generator_b((1, 0), 3) * generator_a(3, 3)
    one = Portrait.identity(3, 3)
    assert multiply(x, one) == x
    assert multiply(x, inverse(x)) == one


def test_a_squared_has_root_label_two():
    a = generator_a(3, 2)
    assert multiply(a, a).root_label == 2


def test_shape_mismatch():
    with pytest.raises(ValueError):
        multiply(generator_a(3, 2), generator_a(3, 3))


def test_identity_portrait_gives_identity():
    assert to_permutation(Portrait.identity(3, 2)).is_identity()


@settings(max_examples=50)
@given(portraits(3, 3), portraits(3, 3))
def test_to_permutation_is_a_homomorphism(x, y):
    assert to_permutation(multiply(x, y)) == compose(to_permutation(x), to_permutation(y))
    assert to_permutation(inverse(x)) == to_permutation(x).inverse()
    assert to_permutation(commutator(x, y)) == to_permutation(x).inverse() * to_permutation(y).inverse() * to_permutation(x) * to_permutation(y)


@settings(max_examples=50)
@given(portraits(5, 2))
def test_to_permutation_is_injective(x):
    assert from_permutation(to_permutation(x), 5) == x


def test_commutator_of_b_and_a_via_portraits():
    a, b = generator_a(3, 2), generator_b((1, 0), 2)
    pa, pb = to_permutation(a), to_permutation(b)
    assert to_permutation(commutator(b, a)) == pb.inverse() * pa.inverse() * pb * pa


def test_psi_of_b():
    st_b = psi_decompose(generator_b((1, 0), 3))
    assert st_b.root_label == 0
    assert st_b.entries == (generator_a(3, 2), Portrait.identity(3, 2), generator_b((1, 0), 2))


def test_psi_of_a():
    st_a = psi_decompose(generator_a(3, 3))
    assert st_a.root_label == 1
    assert all(s.is_identity() for s in st_a.entries)


@settings(max_examples=30)
@given(portraits(3, 3, stabilize=1))
def test_conjugation_by_a_shifts_sections(f):
    a = generator_a(3, 3)
    conj = multiply(multiply(inverse(a), f), a)
    s = psi_decompose(f).entries
    assert psi_decompose(conj).entries == (s[2], s[0], s[1])


@settings(max_examples=30)
@given(portraits(5, 3))
def test_reassemble_inverts_psi(x):
    assert reassemble(psi_decompose(x)) == x


@settings(max_examples=30)
@given(portraits(3, 3), portraits(3, 3))
def test_psi_respects_the_wreath_product(x, y):
    p = 3
    sx, sy, sxy = psi_decompose(x), psi_decompose(y), psi_decompose(multiply(x, y))
    assert sxy.root_label == (sx.root_label + sy.root_label) % p
    for v in range(p):
        moved = (v + sx.root_label) % p
        assert sxy.entries[v] == multiply(sx.entries[v], sy.entries[moved])


def test_commutator_with_a_identity():
    assert commutator_with_a_sections(Portrait.identity(3, 3)).is_identity()


def test_commutator_with_a_for_b():
    a2, b2 = generator_a(3, 2), generator_b((1, 0), 2)
    b3 = generator_b((1, 0), 3)
    got = commutator_with_a_sections(b3)
    # the entries f|_1^-1 f|_3, f|_2^-1 f|_1, f|_3^-1 f|_2 with sections (a, 1, b)
    assert got.entries == (multiply(inverse(a2), b2), a2, inverse(b2))
    assert got == psi_decompose(commutator(b3, generator_a(3, 3)))


def test_commutator_with_a_matches_direct_computation():
    rng = random.Random(7)
    for p in (3, 5):
        a = generator_a(p, 3)
        for _ in range(50):
            f = random_portrait(p, 3, rng, stabilize=1)
            assert commutator_with_a_sections(f) == psi_decompose(commutator(f, a))


def test_commutator_with_a_requires_first_level_stabiliser():
    with pytest.raises(ValueError):
        commutator_with_a_sections(generator_a(3, 2))


def test_section_tuple_shape_is_checked():
    with pytest.raises(ValueError):
        reassemble(SectionTuple((Portrait.identity(3, 1), Portrait.identity(3, 2), Portrait.identity(3, 1)), 0))
