import pytest
from hypothesis import given, strategies as st

from abcover import (Character, GroupElement, StructuralError, Subgroup,
                     all_characters, all_elements, annihilator, coset_image,
                     pair, perp, perp_basis, span)


def chi(*bits):
    return Character(tuple(bits))


def sig(*bits):
    return GroupElement(tuple(bits))


def test_pair_examples():
    assert pair(chi(1, 0, 0), sig(1, 0, 0)) == -1
    assert pair(chi(0, 0, 0), sig(1, 1, 1)) == 1
    assert pair(chi(1, 1, 0), sig(1, 1, 0)) == 1
    assert pair(chi(1, 0, 1), sig(0, 1, 1)) == -1


def test_pair_rank_mismatch():
    with pytest.raises(StructuralError):
        pair(chi(1, 0), sig(1, 0, 0))


def test_bad_bits_rejected():
    with pytest.raises(StructuralError):
        GroupElement((0, 2, 1))
    with pytest.raises(StructuralError):
        Character(())


def test_perp_of_cyclic_subgroup():
    gamma = span([sig(0, 0, 1)])
    assert perp(gamma) == (chi(0, 0, 0), chi(0, 1, 0), chi(1, 0, 0), chi(1, 1, 0))
    assert perp_basis(gamma) == (chi(1, 0, 0), chi(0, 1, 0))


def test_perp_of_trivial_subgroup():
    assert perp(Subgroup.trivial(3)) == all_characters(3)


def test_annihilator_example():
    ann = annihilator([chi(1, 0, 0), chi(1, 1, 0)])
    assert ann.elements() == (sig(0, 0, 0), sig(0, 0, 1))
    assert ann == span([sig(0, 0, 1)])


def test_annihilator_of_empty_set():
    assert annihilator([], rank=3) == Subgroup.full(3)
    with pytest.raises(StructuralError):
        annihilator([])


def test_span_normalizes_to_canonical_basis():
    a = span([sig(1, 1, 0), sig(0, 1, 1), sig(1, 0, 1)])
    b = span([sig(1, 1, 0), sig(0, 1, 1)])
    assert a == b
    assert a.order == 4


def test_subgroup_membership_and_enumeration():
    gamma = span([sig(1, 1, 0), sig(0, 0, 1)])
    assert gamma.contains(sig(1, 1, 1))
    assert not gamma.contains(sig(1, 0, 0))
    assert len(gamma.elements()) == gamma.order == 4
    assert gamma.elements() == tuple(sorted(gamma.elements()))


def test_coset_image():
    gamma = span([sig(0, 0, 1)])
    assert coset_image(gamma, sig(1, 0, 1)) == (1, 0)
    assert coset_image(gamma, sig(0, 1, 1)) == (0, 1)
    assert coset_image(gamma, sig(0, 0, 1)) == (0, 0)
    full = Subgroup.full(3)
    assert coset_image(full, sig(1, 1, 0)) == ()


def _random_subgroup(data, rank):
    count = data.draw(st.integers(min_value=0, max_value=rank))
    gens = [GroupElement(tuple(data.draw(st.integers(0, 1)) for _ in range(rank)))
            for _ in range(count)]
    gens = [g for g in gens if not g.is_zero]
    return span(gens, rank=rank)


@given(st.data())
def test_order_times_perp_order(data):
    rank = data.draw(st.integers(min_value=1, max_value=5))
    gamma = _random_subgroup(data, rank)
    assert gamma.order * len(perp(gamma)) == 2 ** rank


@given(st.data())
def test_double_duality(data):
    rank = data.draw(st.integers(min_value=1, max_value=5))
    gamma = _random_subgroup(data, rank)
    characters = perp(gamma)
    assert perp(annihilator(characters, rank=rank)) == characters


@given(st.data())
def test_pair_is_bilinear(data):
    rank = data.draw(st.integers(min_value=1, max_value=5))
    bit = st.integers(0, 1)
    character = Character(tuple(data.draw(bit) for _ in range(rank)))
    s = GroupElement(tuple(data.draw(bit) for _ in range(rank)))
    t = GroupElement(tuple(data.draw(bit) for _ in range(rank)))
    assert pair(character, s + t) == pair(character, s) * pair(character, t)


@given(st.data())
def test_perp_characters_kill_all_elements(data):
    rank = data.draw(st.integers(min_value=1, max_value=4))
    gamma = _random_subgroup(data, rank)
    for character in perp(gamma):
        assert all(pair(character, elt) == 1 for elt in gamma.elements())


def test_enumeration_is_lexicographic():
    assert [e.bits for e in all_elements(2)] == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert [c.bits for c in all_characters(2)] == [(0, 0), (0, 1), (1, 0), (1, 1)]
