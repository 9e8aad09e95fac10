"""Canonical forms, relabeling, stabilizers, and enumeration counts."""

import itertools
import random
from math import factorial

import pytest

from operad_forge import (
    Hypertree,
    MSet,
    PlanarTree,
    PointedSet,
    RootedTree,
    Surjection,
    Word,
    orbit_canonical,
    perm_maps,
    stabilizer_order,
    standardize,
)
from operad_forge.elements import (
    enumerate_hypertrees,
    enumerate_trees,
    is_hypertree,
    tree_aut_order,
)


def t(label, *children):
    return RootedTree(label, tuple(children))


# -- canonical forms --------------------------------------------------------


def test_tree_children_sorted_at_construction():
    assert t(1, t(3), t(2)) == t(1, t(2), t(3))
    # canonical child order is degree-first, then label
    assert t(1, t(2, t(4)), t(3)).to_text() == "1(3,2(4))"


def test_canonicalization_is_idempotent():
    e = t(1, t(3), t(2, t(5), t(4)))
    again = RootedTree(e.label, e.children)
    assert again == e


def test_hypertree_edges_sorted():
    h = Hypertree(1, ((3, 1, 2), (4, 1)))
    assert h.edges == ((1, 4), (1, 2, 3))
    assert h.vertices() == (1, 2, 3, 4)


def test_hypertree_rejects_cycles_and_disconnection():
    with pytest.raises(AssertionError):
        Hypertree(1, ((1, 2), (1, 2, 3)))
    with pytest.raises(AssertionError):
        Hypertree(4, ((1, 2),))
    with pytest.raises(AssertionError):
        Hypertree(1, ((1, 1),))
    assert is_hypertree(1, ((1, 2), (2, 3)))
    assert not is_hypertree(1, ((1, 2), (3, 4)))


def test_pointed_set_and_mset_normalize():
    assert PointedSet(1, (3, 2)).rest == (2, 3)
    assert MSet((2, 1, 2)).members == (1, 2, 2)


# -- relabel -----------------------------------------------------------------


def test_relabel_tree_swap():
    assert t(1, t(2)).relabel({1: 2, 2: 1}) == t(2, t(1))


def test_relabel_corolla_fixed_by_child_swap():
    c = t(1, t(2), t(3))
    assert c.relabel({2: 3, 3: 2}) == c


def test_relabel_word_cycle():
    w = Word((1, 2, 3))
    assert w.relabel({1: 2, 2: 3, 3: 1}) == Word((2, 3, 1))


def test_relabel_respects_canonical_form():
    e = t(1, t(2, t(4)), t(3))
    for m in perm_maps((1, 2, 3, 4)):
        out = e.relabel(m)
        assert RootedTree(out.label, out.children) == out


# -- stabilizers --------------------------------------------------------------


@pytest.mark.parametrize(
    "e,order",
    [
        (t(1, t(2, t(3))), 1),
        (t(1, t(2), t(3)), 2),
        (t(1, t(2), t(3), t(4)), 6),
        (t(1, t(2, t(3)), t(4, t(5))), 2),
        (PointedSet(1, (2, 3)), 2),
        (PointedSet(1, (2, 3, 4)), 6),
        (Word((1, 2, 3)), 1),
        (Surjection((1, 1, 2)), 2),
        (Surjection((1, 2, 1, 2)), 4),
        (Hypertree(1, ((1, 2, 3),)), 2),
    ],
)
def test_stabilizer_orders(e, order):
    assert stabilizer_order(e) == order


def brute_stabilizer(e):
    return sum(1 for m in perm_maps(e.labels()) if e.relabel(m) == e)


def test_tree_stabilizer_formula_vs_brute_force():
    for n in range(1, 6):
        for e in enumerate_trees(range(1, n + 1)):
            assert tree_aut_order(e) == brute_stabilizer(e), e


def test_tree_stabilizer_seeded_samples_degree_6_and_7():
    rng = random.Random(20240817)
    for n in (6, 7):
        trees = enumerate_trees(range(1, n + 1))
        for e in rng.sample(trees, 12):
            assert tree_aut_order(e) == brute_stabilizer(e), e


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_orbit_stabilizer_product(n):
    labels = tuple(range(1, n + 1))
    for e in enumerate_trees(labels):
        orbit = {e.relabel(m) for m in perm_maps(labels)}
        assert len(orbit) * stabilizer_order(e) == factorial(n)


def test_orbit_canonical_constant_on_orbits():
    e = t(2, t(1, t(3)))
    reps = {orbit_canonical(e.relabel(m)) for m in perm_maps((1, 2, 3))}
    assert len(reps) == 1
    rep = reps.pop()
    assert rep == orbit_canonical(rep)


# -- enumeration ---------------------------------------------------------------


def test_enumerate_trees_matches_cayley():
    for n in range(1, 6):
        assert len(enumerate_trees(range(1, n + 1))) == n ** (n - 1)


def test_enumerate_trees_degree_2_explicit():
    assert enumerate_trees((1, 2)) == [t(1, t(2)), t(2, t(1))]


def test_enumerate_hypertrees_counts():
    # rooted hypertrees on n labeled vertices: 1, 2, 12, 116
    for n, count in [(1, 1), (2, 2), (3, 12), (4, 116)]:
        assert len(enumerate_hypertrees(range(1, n + 1))) == count


def test_enumeration_is_deterministic_and_duplicate_free():
    a = enumerate_hypertrees((1, 2, 3))
    b = enumerate_hypertrees((1, 2, 3))
    assert a == b
    assert len(set(a)) == len(a)


# -- surjections ---------------------------------------------------------------


def test_standardize_examples():
    assert standardize((3, 5, 3)) == Surjection((1, 2, 1))
    assert standardize((1, 2)) == Surjection((1, 2))
    assert standardize((7,)) == Surjection((1,))


def test_surjection_requires_initial_segment():
    with pytest.raises(AssertionError):
        Surjection((1, 3))
    with pytest.raises(AssertionError):
        Surjection(())


def test_label_validation():
    with pytest.raises(TypeError):
        RootedTree(1.5)
