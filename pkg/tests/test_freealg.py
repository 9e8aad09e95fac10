"""Free algebras on named generators: products under a degree bound, the
basis-dual coproduct and its n-ary refinement, the crochet pairing, and the
cofiltration degree.

Core claims:
 * decorated bases enumerate generator-labeled shapes, so PreLie on two
   generators grows 2, 4, 14, 52 per degree;
 * free_coproduct inverts the product on the nose (coefficient 1/lambda per
   matching split), so repeated generators produce integer multiplicities;
 * nary_dual_coproduct on a same-degree argument counts matchings, and on a
   larger argument returns the full mixed-degree expansion;
 * crochet_pairing(delta, mu) tabulates <delta, sigma . mu> over permutations.
"""

from fractions import Fraction

import pytest

from operad_forge import (
    DegreeBoundError,
    FreeAlgebra,
    LinComb,
    Tensor,
    crochet_pairing,
    get_operad,
    nary_dual_coproduct,
    parse,
    tensor2,
)


@pytest.fixture
def prelie2():
    return FreeAlgebra(get_operad("prelie"), ("g", "h"), 4)


def tree(text):
    return parse(text, "tree")


def test_dims_two_generator_prelie(prelie2):
    assert [prelie2.dim(n) for n in (1, 2, 3, 4)] == [2, 4, 14, 52]


def test_dims_scale_with_generators():
    one = FreeAlgebra(get_operad("prelie"), ("g",), 4)
    # one-generator prelie counts unlabeled rooted trees
    assert [one.dim(n) for n in (1, 2, 3, 4)] == [1, 1, 2, 4]
    pan = FreeAlgebra(get_operad("pan"), ("g", "h"), 4)
    # pointed multisets over two colors: point color x multiset of the rest
    assert [pan.dim(n) for n in (1, 2, 3, 4)] == [2, 4, 6, 8]


def test_basis_elements_are_deduplicated(prelie2):
    b3 = prelie2.basis(3)
    assert len(b3) == len(set(b3)) == 14
    assert tree("g(h,h)") in b3
    assert tree("g(g(h))") in b3


def test_product_and_bound(prelie2):
    g, h = prelie2.gen("g"), prelie2.gen("h")
    gh = prelie2.product("graft", g, h)
    assert gh.to_text() == "g(h)"
    ghh = prelie2.product("graft", gh, h)
    assert ghh.to_text() == "g(h,h) + g(h(h))"
    with pytest.raises(DegreeBoundError):
        prelie2.product("graft", ghh, ghh)


def test_unknown_generator_rejected(prelie2):
    with pytest.raises(AssertionError, match="unknown generator"):
        prelie2.gen("q")


def test_free_element_arithmetic(prelie2):
    g, h = prelie2.gen("g"), prelie2.gen("h")
    s = g + h
    assert s.to_text() == "g + h"
    assert (s - g).to_text() == "h"
    assert s.degrees() == (1,)
    assert (g + prelie2.product("graft", g, h)).degrees() == (1, 2)
    assert s.homogeneous_part(2).is_zero()
    assert s.max_degree() == 1


def test_evaluate_composes_positionally(prelie2):
    g, h = prelie2.gen("g"), prelie2.gen("h")
    got = prelie2.evaluate(tree("1(2,3)"), [g, h, h])
    assert got.to_text() == "g(h,h)"
    chain = prelie2.evaluate(tree("1(2(3))"), [g, h, g])
    assert chain.to_text() == "g(h(g))"
    # linear in each argument
    two_h = h + h
    assert prelie2.evaluate(tree("1(2)"), [g, two_h]).to_text() == "2*g(h)"


def test_free_coproduct_golden_cases(prelie2):
    g, h = prelie2.gen("g"), prelie2.gen("h")
    assert prelie2.free_coproduct("cograft", g).is_zero()
    gh = prelie2.product("graft", g, h)
    assert prelie2.free_coproduct("cograft", gh) == LinComb.single(
        tensor2(tree("g"), tree("h"))
    )
    ghh = prelie2.element(LinComb.single(tree("g(h,h)")))
    assert prelie2.free_coproduct("cograft", ghh) == LinComb.single(
        tensor2(tree("g(h)"), tree("h")), 2
    )


def test_free_coproduct_on_words():
    alg = FreeAlgebra(get_operad("as"), ("a", "b"), 4)
    w = alg.element(LinComb.single(parse("[a,b,a]", "word")))
    got = alg.free_coproduct("deconcat", w)
    assert got == LinComb(
        [
            (tensor2(parse("[a]", "word"), parse("[b,a]", "word")), 1),
            (tensor2(parse("[a,b]", "word"), parse("[a]", "word")), 1),
        ]
    )


def test_cofiltration_degree_matches_grading(prelie2):
    g, h = prelie2.gen("g"), prelie2.gen("h")
    assert prelie2.cofiltration_degree(g) == 1
    gh = prelie2.product("graft", g, h)
    assert prelie2.cofiltration_degree(gh) == 2
    ghh = prelie2.product("graft", gh, h)
    assert prelie2.cofiltration_degree(ghh) == 3
    assert prelie2.cofiltration_degree(g - g) == 0


# -- n-ary dual coproduct ----------------------------------------------------------


def test_nary_dual_same_degree_counts_matchings():
    op = get_operad("prelie")
    got = nary_dual_coproduct(op, tree("1(2,3)"), tree("g(h,h)"))
    assert got == LinComb.single(
        Tensor((tree("g"), tree("h"), tree("h"))), 2
    )
    # chain shape matches the corolla argument in no way
    assert nary_dual_coproduct(op, tree("1(2(3))"), tree("g(h,h)")).is_zero()


def test_nary_dual_mixed_degree_eight_terms():
    op = get_operad("prelie")
    big = tree("4(2(1,3),5)")
    got = nary_dual_coproduct(op, tree("2(1,3)"), big)
    expected = LinComb(
        [
            (Tensor((tree("1"), tree("4(2,5)"), tree("3"))), 1),
            (Tensor((tree("1"), tree("4(2(3))"), tree("5"))), 1),
            (Tensor((tree("3"), tree("4(2,5)"), tree("1"))), 1),
            (Tensor((tree("3"), tree("4(2(1))"), tree("5"))), 1),
            (Tensor((tree("5"), tree("4"), tree("2(1,3)"))), 1),
            (Tensor((tree("5"), tree("4(2(1))"), tree("3"))), 1),
            (Tensor((tree("5"), tree("4(2(3))"), tree("1"))), 1),
            (Tensor((tree("2(1,3)"), tree("4"), tree("5"))), 1),
        ]
    )
    assert got == expected
    assert len(got.terms()) == 8


def test_nary_dual_binary_agrees_with_dual_table():
    from operad_forge import dual_coproduct_table

    op = get_operad("nap")
    labels = range(1, 4)
    table = dual_coproduct_table(op, "cograft", labels)
    mu = tree("1(2)")
    for x in op.basis(labels):
        assert nary_dual_coproduct(op, mu, x) == table.get(x, LinComb())


# -- crochet pairing ---------------------------------------------------------------


def test_crochet_chain_against_chain():
    op = get_operad("prelie")
    t = tree("1(2)")
    assert crochet_pairing(op, t, t) == {
        (1, 2): Fraction(1),
        (2, 1): Fraction(0),
    }


def test_crochet_corolla_against_corolla():
    op = get_operad("prelie")
    c = tree("1(2,3)")
    table = crochet_pairing(op, c, c)
    nonzero = {sigma: v for sigma, v in table.items() if v}
    assert nonzero == {(1, 2, 3): Fraction(1), (1, 3, 2): Fraction(1)}


def test_crochet_chain_against_corolla_vanishes():
    op = get_operad("prelie")
    table = crochet_pairing(op, tree("1(2(3))"), tree("1(2,3)"))
    assert set(table) == {s for s in table}
    assert all(v == 0 for v in table.values())
