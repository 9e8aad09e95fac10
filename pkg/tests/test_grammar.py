"""Text grammar: parse/render round trips and located parse errors."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from operad_forge import (
    Hypertree,
    MSet,
    ParseError,
    PointedSet,
    RootedTree,
    Surjection,
    Word,
    parse,
    render,
)
from operad_forge.elements import enumerate_hypertrees, enumerate_trees


@pytest.mark.parametrize(
    "kind,text",
    [
        ("tree", "g"),
        ("tree", "1(2,3(4))"),
        ("pointed", "{*1,2,3}"),
        ("pointed", "{a,*b}"),
        ("set", "{g,h}"),
        ("word", "[a,b,a]"),
        ("word", "[1,2,3]"),
        ("surjection", "(1,1,2)"),
        ("planar", "star(a,dot(b,c))"),
        ("planar", "prec(a,b,c)"),
        ("hypertree", "ht(root=1; {1,2}; {1,3,4})"),
    ],
)
def test_roundtrip_from_text(kind, text):
    e = parse(text, kind)
    assert parse(render(e), kind) == e


def test_parse_canonicalizes_child_order():
    assert parse("1(3,2)", "tree") == parse("1(2,3)", "tree")
    assert render(parse("1(3,2)", "tree")) == "1(2,3)"


def test_whitespace_is_insignificant():
    assert parse("ht( root = 1 ; { 1 , 2 } )", "hypertree") == Hypertree(1, ((1, 2),))
    assert parse(" [ a , b ] ", "word") == Word(("a", "b"))


labels = st.one_of(st.integers(min_value=1, max_value=9), st.sampled_from(["g", "h", "k"]))
trees = st.recursive(
    labels.map(RootedTree),
    lambda sub: st.tuples(labels, st.lists(sub, min_size=1, max_size=3)).map(
        lambda p: RootedTree(p[0], tuple(p[1]))
    ),
    max_leaves=6,
)


@given(trees)
def test_tree_roundtrip(e):
    assert parse(render(e), "tree") == e


@given(st.lists(labels, min_size=1, max_size=5).map(lambda ls: Word(tuple(ls))))
def test_word_roundtrip(e):
    assert parse(render(e), "word") == e


@given(st.tuples(labels, st.lists(labels, max_size=4)).map(lambda p: PointedSet(p[0], tuple(p[1]))))
def test_pointed_roundtrip(e):
    assert parse(render(e), "pointed") == e


def test_enumerated_families_roundtrip():
    for e in enumerate_trees((1, 2, 3, 4)):
        assert parse(render(e), "tree") == e
    for e in enumerate_hypertrees((1, 2, 3)):
        assert parse(render(e), "hypertree") == e


def test_mset_and_surjection_render():
    assert render(MSet(("b", "a"))) == "{a,b}"
    assert render(Surjection((2, 1, 2))) == "(2,1,2)"


# -- errors -------------------------------------------------------------------


def test_unknown_kind():
    with pytest.raises(ParseError):
        parse("g", "nosuchkind")


def test_bad_character_reports_position():
    with pytest.raises(ParseError, match=r"position 2"):
        parse("1(%)", "tree")


def test_unexpected_end_reports_position():
    with pytest.raises(ParseError, match=r"unexpected end of input"):
        parse("1(2", "tree")


def test_expected_token_reports_position():
    with pytest.raises(ParseError, match=r"expected.*position 0"):
        parse("[a]", "pointed")


def test_trailing_input_reports_position():
    with pytest.raises(ParseError, match=r"trailing input"):
        parse("1(2)3", "tree")


def test_hypertree_needs_root_keyword():
    with pytest.raises(ParseError):
        parse("ht(1;{1,2})", "hypertree")
