"""Textual grammar for basis elements.

One fixed, bit-stable rendering per element (the ``to_text`` methods), and a
parser keyed by element kind:

* rooted tree       ``1(2,3(4))``          label, children in parentheses
* pointed set       ``{*1,2,3}``           star marks the point
* multiset          ``{1,2,3}``
* word              ``[1,2,3]`` / ``[a,b,a]``
* surjection        ``(1,1,2)``
* hypertree         ``ht(root=1; {1,2}; {1,3,4})``
* planar tree       ``star(a,dot(b,c))``   tags: star, dot, prec

Labels are positive integers or identifiers; the tags ``star``, ``dot``,
``prec`` are reserved words in the planar grammar.  Whitespace between tokens
is accepted on input and never produced on output (except the "; " separator
inside hypertrees).  Scalars use the Fraction grammar "p/q" with the
denominator omitted when it is 1.
"""

from __future__ import annotations

import re

from .elements import (
    Hypertree,
    MSet,
    PlanarTree,
    PointedSet,
    RootedTree,
    Surjection,
    Word,
    leaf,
)

PLANAR_OPS = ("star", "dot", "prec")

_TOKEN = re.compile(r"\s*([A-Za-z_][A-Za-z0-9_]*|\d+|[()\[\]{}*,;=])")


class ParseError(ValueError):
    pass


class _Scanner:
    def __init__(self, text):
        self.text = text
        self.pos = 0
        self.tokens = []
        self.starts = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m:
                if text[pos:].strip():
                    raise ParseError(
                        "bad character at position %d in %r" % (pos, text)
                    )
                break
            self.tokens.append(m.group(1))
            self.starts.append(m.start(1))
            pos = m.end()

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self):
        tok = self.peek()
        if tok is None:
            raise ParseError(
                "unexpected end of input at position %d in %r"
                % (len(self.text), self.text)
            )
        self.pos += 1
        return tok

    def expect(self, tok):
        got = self.next()
        if got != tok:
            raise ParseError(
                "expected %r, got %r at position %d in %r"
                % (tok, got, self.starts[self.pos - 1], self.text)
            )

    def done(self):
        if self.pos != len(self.tokens):
            raise ParseError(
                "trailing input at position %d in %r"
                % (self.starts[self.pos], self.text)
            )


def _label(tok):
    if tok is None or not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*|\d+", tok):
        raise ParseError("expected a label, got %r" % (tok,))
    return int(tok) if tok.isdigit() else tok


def _parse_tree(sc: _Scanner) -> RootedTree:
    lab = _label(sc.next())
    kids = []
    if sc.peek() == "(":
        sc.next()
        kids.append(_parse_tree(sc))
        while sc.peek() == ",":
            sc.next()
            kids.append(_parse_tree(sc))
        sc.expect(")")
    return RootedTree(lab, tuple(kids))


def _parse_pointed(sc: _Scanner) -> PointedSet:
    sc.expect("{")
    point, rest = None, []
    while True:
        starred = sc.peek() == "*"
        if starred:
            sc.next()
        lab = _label(sc.next())
        if starred:
            if point is not None:
                raise ParseError("two points in pointed set")
            point = lab
        else:
            rest.append(lab)
        if sc.peek() == ",":
            sc.next()
            continue
        sc.expect("}")
        break
    if point is None:
        raise ParseError("pointed set needs a *point")
    return PointedSet(point, tuple(rest))


def _parse_set(sc: _Scanner) -> MSet:
    sc.expect("{")
    members = [_label(sc.next())]
    while sc.peek() == ",":
        sc.next()
        members.append(_label(sc.next()))
    sc.expect("}")
    return MSet(tuple(members))


def _parse_word(sc: _Scanner) -> Word:
    sc.expect("[")
    letters = [_label(sc.next())]
    while sc.peek() == ",":
        sc.next()
        letters.append(_label(sc.next()))
    sc.expect("]")
    return Word(tuple(letters))


def _parse_surjection(sc: _Scanner) -> Surjection:
    sc.expect("(")
    values = [int(sc.next())]
    while sc.peek() == ",":
        sc.next()
        values.append(int(sc.next()))
    sc.expect(")")
    return Surjection(tuple(values))


def _parse_planar(sc: _Scanner) -> PlanarTree:
    tok = sc.next()
    if tok in PLANAR_OPS and sc.peek() == "(":
        sc.next()
        kids = [_parse_planar(sc)]
        while sc.peek() == ",":
            sc.next()
            kids.append(_parse_planar(sc))
        sc.expect(")")
        return PlanarTree(tok, None, tuple(kids))
    return leaf(_label(tok))


def _parse_hypertree(sc: _Scanner) -> Hypertree:
    if sc.next() != "ht":
        raise ParseError("hypertrees start with ht(...)")
    sc.expect("(")
    sc.expect("root")
    sc.expect("=")
    root = _label(sc.next())
    edges = []
    while sc.peek() == ";":
        sc.next()
        sc.expect("{")
        edge = [_label(sc.next())]
        while sc.peek() == ",":
            sc.next()
            edge.append(_label(sc.next()))
        sc.expect("}")
        edges.append(tuple(edge))
    sc.expect(")")
    return Hypertree(root, tuple(edges))


_PARSERS = {
    "tree": _parse_tree,
    "pointed": _parse_pointed,
    "set": _parse_set,
    "word": _parse_word,
    "surjection": _parse_surjection,
    "planar": _parse_planar,
    "hypertree": _parse_hypertree,
}


def parse(text: str, kind: str):
    """Parse one basis element of the given kind from text."""
    if kind not in _PARSERS:
        raise ParseError("unknown element kind %r (kinds: %s)" % (kind, sorted(_PARSERS)))
    sc = _Scanner(text)
    out = _PARSERS[kind](sc)
    sc.done()
    return out


def render(e) -> str:
    return e.to_text()
