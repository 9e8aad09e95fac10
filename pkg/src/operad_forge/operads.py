"""The structure registry: products, coproducts, and composition for every
catalogued operad / algebra model.

Products are functions on basis elements returning a :class:`LinComb` of basis
elements; coproducts return a LinComb of :class:`Tensor` words.  Conventions:

* coproducts are *reduced*: no primitive ever appears alone on both sides, and
  a coproduct applied to a degree-1 element is zero;
* for all the "cut" coproducts the factor carrying the root / the point / the
  first letter is the **left** factor;
* every coproduct listed in ``dual`` inverts the named product in the
  basis-dual sense (checked exhaustively by the duality test suite);
* ``compose`` implements the n-ary operation attached to a basis element of
  the same family, taking a dict ``label -> basis element``.  Only genuine
  operads have one; the hypertree entries are algebra *models* (``operadic``
  is False there).

Everything is exact; no floats anywhere.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .elements import (
    Hypertree,
    MSet,
    PlanarTree,
    PointedSet,
    RootedTree,
    Word,
    enumerate_alt_trees,
    enumerate_hypertrees,
    enumerate_pointed,
    enumerate_prec_trees,
    enumerate_sets,
    enumerate_tree_words,
    enumerate_trees,
    enumerate_words,
    hypertree_component,
    label_key,
)
from .linear import LinComb, ONE, Tensor, bilinear, tensor2


def _lc(items):
    """LinComb from (coeff, element) pairs."""
    return LinComb.from_terms(items)


def _subsets(indices):
    indices = tuple(indices)
    for r in range(len(indices) + 1):
        for combo in itertools.combinations(indices, r):
            yield combo


def shuffles(a, b):
    """All interleavings of two tuples, preserving each one's order."""
    if not a:
        yield tuple(b)
        return
    if not b:
        yield tuple(a)
        return
    for s in shuffles(a[1:], b):
        yield (a[0],) + s
    for s in shuffles(a, b[1:]):
        yield (b[0],) + s


# ---------------------------------------------------------------------------
# rooted trees: graft products and edge-deletion coproducts
# ---------------------------------------------------------------------------


def tree_graft_all(t: RootedTree, s: RootedTree):
    """``s`` attached below each vertex of ``t``, in preorder vertex order."""
    out = [t.add_child(s)]
    for i, c in enumerate(t.children):
        for g in tree_graft_all(c, s):
            out.append(t.replace_child(i, g))
    return out


def graft_at_vertices(t: RootedTree, assignment):
    """Attach subtrees below specific preorder vertices of ``t`` in one pass.

    ``assignment`` is a list of (preorder_index, subtree); indices refer to
    ``t``'s own vertices (root = 0).
    """
    extra = {}
    for i, s in assignment:
        extra.setdefault(i, []).append(s)
    counter = itertools.count()

    def rebuild(node):
        idx = next(counter)
        kids = tuple(rebuild(c) for c in node.children) + tuple(extra.get(idx, ()))
        return RootedTree(node.label, kids)

    return rebuild(t)


def prelie_graft(t, s) -> LinComb:
    return _lc((ONE, g) for g in tree_graft_all(t, s))


def nap_graft(t, s) -> LinComb:
    return LinComb.single(t.add_child(s))


def tree_prunings(t: RootedTree):
    """(remainder, branch) for each edge of ``t`` deleted."""
    out = []
    for i, c in enumerate(t.children):
        out.append((t.drop_child(i), c))
        for rem, branch in tree_prunings(c):
            out.append((t.replace_child(i, rem), branch))
    return out


def prelie_cograft(t) -> LinComb:
    return _lc((ONE, tensor2(rem, br)) for rem, br in tree_prunings(t))


def nap_cograft(t) -> LinComb:
    return _lc((ONE, tensor2(t.drop_child(i), c)) for i, c in enumerate(t.children))


def prelie_compose(t: RootedTree, args) -> LinComb:
    """Substitute ``args[label]`` at each vertex; each edge of ``t`` re-attaches
    the child's composite root below *any* vertex of the parent's image."""
    base = args[t.label]
    subs = [prelie_compose(c, args) for c in t.children]
    acc = LinComb()
    for picks in itertools.product(*(s.terms() for s in subs)):
        coeff = ONE
        for c, _ in picks:
            coeff *= c
        trees = [b for _, b in picks]
        for spots in itertools.product(range(base.degree()), repeat=len(trees)):
            acc = acc + LinComb.single(graft_at_vertices(base, list(zip(spots, trees))), coeff)
    return acc


def nap_compose(t: RootedTree, args) -> LinComb:
    base = args[t.label]
    subs = [nap_compose(c, args) for c in t.children]
    acc = LinComb.single(base)
    for s in subs:
        acc = bilinear(lambda a, b: LinComb.single(a.add_child(b)))(acc, s)
    return acc


# ---------------------------------------------------------------------------
# pointed sets
# ---------------------------------------------------------------------------


def perm_mul(u: PointedSet, v: PointedSet) -> LinComb:
    """Union pointed at the point of the left factor."""
    return LinComb.single(PointedSet(u.point, u.rest + v.labels()))


def perm_comul(u: PointedSet) -> LinComb:
    out = []
    rest = u.rest
    idx = range(len(rest))
    for keep in _subsets(idx):
        move = tuple(i for i in idx if i not in keep)
        if not move:
            continue
        left = PointedSet(u.point, tuple(rest[i] for i in keep))
        for j in move:
            right = PointedSet(rest[j], tuple(rest[i] for i in move if i != j))
            out.append((ONE, tensor2(left, right)))
    return _lc(out)


def pan_mul(u: PointedSet, v: PointedSet) -> LinComb:
    if v.degree() != 1:
        return LinComb()
    return LinComb.single(PointedSet(u.point, u.rest + v.labels()))


def pan_comul(u: PointedSet) -> LinComb:
    rest = u.rest
    return _lc(
        (ONE, tensor2(PointedSet(u.point, rest[:i] + rest[i + 1 :]), PointedSet(rest[i])))
        for i in range(len(rest))
    )


def perm_compose(s: PointedSet, args) -> LinComb:
    head = args[s.point]
    rest = list(head.rest)
    for l in s.rest:
        rest.extend(args[l].labels())
    return LinComb.single(PointedSet(head.point, tuple(rest)))


def pan_compose(s: PointedSet, args) -> LinComb:
    if any(args[l].degree() != 1 for l in s.rest):
        return LinComb()
    return perm_compose(s, args)


# ---------------------------------------------------------------------------
# words: associative / commutative / Zinbiel / Leibniz / Poisson
# ---------------------------------------------------------------------------


def concat(u: Word, v: Word) -> LinComb:
    return LinComb.single(u + v)


def deconcat(w: Word) -> LinComb:
    n = w.degree()
    return _lc((ONE, tensor2(Word(w.letters[:i]), Word(w.letters[i:]))) for i in range(1, n))


def shuffle_mul(u: Word, v: Word) -> LinComb:
    return _lc((ONE, Word(s)) for s in shuffles(u.letters, v.letters))


def coshuffle(w: Word) -> LinComb:
    n = w.degree()
    out = []
    for keep in _subsets(range(n)):
        if not keep or len(keep) == n:
            continue
        rest = tuple(i for i in range(n) if i not in keep)
        out.append((ONE, tensor2(w.slice(keep), w.slice(rest))))
    return _lc(out)


def halfshuffle(u: Word, v: Word) -> LinComb:
    """Zinbiel product: first letter of ``u`` stays first, the rest shuffles."""
    return _lc((ONE, Word((u.letters[0],) + s)) for s in shuffles(u.letters[1:], v.letters))


def cohalfshuffle(w: Word) -> LinComb:
    n = w.degree()
    out = []
    for keep in _subsets(range(1, n)):
        rest = tuple(i for i in range(1, n) if i not in keep)
        if not rest:
            continue
        out.append((ONE, tensor2(w.slice((0,) + keep), w.slice(rest))))
    return _lc(out)


def leibniz_bracket(u: Word, v: Word) -> LinComb:
    """[u, v] in the word basis of the free Leibniz algebra.

    With v = y_1 ... y_q:  sum over splittings {2..q} = I ⊔ J of
    (-1)^|J| * u . y_J-reversed . y_1 . y_I .
    """
    tail = v.letters[1:]
    idx = range(len(tail))
    out = []
    for J in _subsets(idx):
        Jset = set(J)
        I = tuple(i for i in idx if i not in Jset)
        word = (
            u.letters
            + tuple(tail[j] for j in reversed(J))
            + (v.letters[0],)
            + tuple(tail[i] for i in I)
        )
        out.append(((-1) ** len(J), Word(word)))
    return _lc(out)


def coleibniz(w: Word) -> LinComb:
    """Dual of the Leibniz bracket: for each cut w = a.m and each position t
    of the right part, (-1)^t  a (x) m_t.sh(m_{t+1..}, reverse(m_{..t-1}))."""
    n = w.degree()
    out = []
    for p in range(1, n):
        a = Word(w.letters[:p])
        m = w.letters[p:]
        for t in range(len(m)):
            head = m[t]
            for s in shuffles(m[t + 1 :], tuple(reversed(m[:t]))):
                out.append(((-1) ** t, tensor2(a, Word((head,) + s))))
    return _lc(out)


def poisson_bracket(u: Word, v: Word) -> LinComb:
    return _lc([(ONE, u + v), (-ONE, v + u)])


def cobracket(w: Word) -> LinComb:
    n = w.degree()
    out = []
    for i in range(1, n):
        a, b = Word(w.letters[:i]), Word(w.letters[i:])
        out.append((ONE, tensor2(a, b)))
        out.append((-ONE, tensor2(b, a)))
    return _lc(out)


def word_compose_concat(w: Word, args) -> LinComb:
    letters = []
    for l in w.letters:
        letters.extend(args[l].letters)
    return LinComb.single(Word(tuple(letters)))


def zinbiel_compose(w: Word, args) -> LinComb:
    """Right-nested half-shuffles x_{w_1} < (x_{w_2} < (... < x_{w_n}))."""
    acc = LinComb.single(args[w.letters[-1]])
    half = bilinear(halfshuffle)
    for l in reversed(w.letters[:-1]):
        acc = half(LinComb.single(args[l]), acc)
    return acc


def leibniz_compose(w: Word, args) -> LinComb:
    """Left-nested brackets [[x_{w_1}, x_{w_2}], ...]."""
    acc = LinComb.single(args[w.letters[0]])
    br = bilinear(leibniz_bracket)
    for l in w.letters[1:]:
        acc = br(acc, LinComb.single(args[l]))
    return acc


def _is_lyndon(t):
    return all(t < t[i:] for i in range(1, len(t)))


def _lyndon_tree(letters):
    """Standard factorization bracketing of a word that starts with its
    minimum letter: split off the longest proper Lyndon suffix."""
    if len(letters) == 1:
        return letters[0]
    for i in range(1, len(letters)):
        if _is_lyndon(letters[i:]):
            return (_lyndon_tree(letters[:i]), _lyndon_tree(letters[i:]))
    raise AssertionError("unreachable: every final letter is Lyndon")


def poisson_blocks(letters):
    """Split a word at its left-to-right minima."""
    blocks = []
    for x in letters:
        if blocks and label_key(x) > label_key(blocks[-1][0]):
            blocks[-1].append(x)
        else:
            blocks.append([x])
    return [tuple(b) for b in blocks]


def poisson_compose(w: Word, args) -> LinComb:
    """Decode a word into the bracket/product composite it indexes: Lyndon
    bracketing within blocks cut at left-to-right minima, block results
    multiplied with the shuffle product."""
    sh = bilinear(shuffle_mul)
    br = bilinear(poisson_bracket)

    def eval_tree(node):
        if not isinstance(node, tuple):
            return LinComb.single(args[node])
        return br(eval_tree(node[0]), eval_tree(node[1]))

    acc = None
    for block in poisson_blocks(w.letters):
        val = eval_tree(_lyndon_tree(block))
        acc = val if acc is None else sh(acc, val)
    return acc


# ---------------------------------------------------------------------------
# commutative sets
# ---------------------------------------------------------------------------


def comm_mul(u: MSet, v: MSet) -> LinComb:
    return LinComb.single(MSet(u.members + v.members))


def comm_comul(u: MSet) -> LinComb:
    n = u.degree()
    out = []
    for keep in _subsets(range(n)):
        if not keep or len(keep) == n:
            continue
        rest = tuple(i for i in range(n) if i not in keep)
        out.append(
            (
                ONE,
                tensor2(
                    MSet(tuple(u.members[i] for i in keep)),
                    MSet(tuple(u.members[i] for i in rest)),
                ),
            )
        )
    return _lc(out)


def comm_compose(s: MSet, args) -> LinComb:
    members = []
    for l in s.members:
        members.extend(args[l].members)
    return LinComb.single(MSet(tuple(members)))


# ---------------------------------------------------------------------------
# planar models: binary / n-ary magmatic, alternating two-product, dipterous
# ---------------------------------------------------------------------------


def mag_graft(x, y) -> LinComb:
    return LinComb.single(PlanarTree("prec", None, (x, y)))


def mag_cograft(x) -> LinComb:
    if x.op == "prec" and len(x.children) == 2:
        return LinComb.single(tensor2(x.children[0], x.children[1]))
    return LinComb()


def maginf_graft(k):
    def graft(*args):
        assert len(args) == k
        return LinComb.single(PlanarTree("prec", None, tuple(args)))

    return graft


def maginf_cograft(k):
    def cograft(x):
        if x.op == "prec" and len(x.children) == k:
            return LinComb.single(Tensor(x.children))
        return LinComb()

    return cograft


def _flat_concat(op, x, y) -> PlanarTree:
    xs = x.children if x.op == op else (x,)
    ys = y.children if y.op == op else (y,)
    return PlanarTree(op, None, xs + ys)


def _word_node(op, children) -> PlanarTree:
    return children[0] if len(children) == 1 else PlanarTree(op, None, tuple(children))


def _level_cut(op, x) -> LinComb:
    """Deconcatenation of a top-level ``op`` word; zero off-type."""
    if x.op != op:
        return LinComb()
    cs = x.children
    return _lc(
        (ONE, tensor2(_word_node(op, cs[:i]), _word_node(op, cs[i:])))
        for i in range(1, len(cs))
    )


def twoas_star(x, y) -> LinComb:
    return LinComb.single(_flat_concat("star", x, y))


def twoas_dot(x, y) -> LinComb:
    return LinComb.single(_flat_concat("dot", x, y))


def twoas_costar(x) -> LinComb:
    return _level_cut("star", x)


def twoas_codot(x) -> LinComb:
    return _level_cut("dot", x)


def dipt_star(x, y) -> LinComb:
    return LinComb.single(_flat_concat("star", x, y))


def dipt_costar(x) -> LinComb:
    return _level_cut("star", x)


def dipt_prec(x, y) -> LinComb:
    """Left-comb grafting: hang the trees of ``y`` one by one, the first one
    joining all trees of ``x`` under a fresh node."""
    xs = x.children if x.op == "star" else (x,)
    ys = y.children if y.op == "star" else (y,)
    t = PlanarTree("prec", None, xs + (ys[0],))
    for s in ys[1:]:
        t = PlanarTree("prec", None, (t, s))
    return LinComb.single(t)


def dipt_coprec(x) -> LinComb:
    """Inverse of :func:`dipt_prec` on single trees.

    For T = prec(c_1..c_m) the base split is (c_1..c_{m-1}) (x) (c_m); the
    left comb is peeled further only through binary nodes whose first child
    is internal.  Words and leaves are sent to zero.
    """
    if x.op != "prec":
        return LinComb()
    out = []

    def peel(tree, tail):
        cs = tree.children
        out.append((ONE, tensor2(_word_node("star", cs[:-1]), _word_node("star", (cs[-1],) + tail))))
        if len(cs) == 2 and cs[0].op == "prec":
            peel(cs[0], (cs[1],) + tail)

    peel(x, ())
    return _lc(out)


# ---------------------------------------------------------------------------
# rooted hypertrees: graft along a fresh binary edge
# ---------------------------------------------------------------------------


def ht_graft_prelie(h: Hypertree, g: Hypertree) -> LinComb:
    return _lc(
        (ONE, Hypertree(h.root, h.edges + g.edges + ((v, g.root),)))
        for v in h.vertices()
    )


def ht_graft_nap(h: Hypertree, g: Hypertree) -> LinComb:
    return LinComb.single(Hypertree(h.root, h.edges + g.edges + ((h.root, g.root),)))


def _ht_split(h: Hypertree, edge):
    rest = tuple(e for e in h.edges if e != edge)
    a, b = edge
    root_side = hypertree_component(h.root, rest)
    far = b if a in root_side else a
    far_side = hypertree_component(far, rest)
    rem = Hypertree(h.root, tuple(e for e in rest if set(e) <= root_side))
    branch = Hypertree(far, tuple(e for e in rest if set(e) <= far_side))
    return rem, branch


def ht_cograft_prelie(h: Hypertree) -> LinComb:
    out = []
    for e in h.binary_edges():
        rem, branch = _ht_split(h, e)
        out.append((ONE, tensor2(rem, branch)))
    return _lc(out)


def ht_cograft_nap(h: Hypertree) -> LinComb:
    out = []
    for e in h.binary_edges():
        if h.root not in e:
            continue
        rem, branch = _ht_split(h, e)
        out.append((ONE, tensor2(rem, branch)))
    return _lc(out)


# ---------------------------------------------------------------------------
# the registry
# ---------------------------------------------------------------------------


@dataclass
class Operad:
    """One catalogued structure: an element family with products, coproducts,
    and (for genuine operads) n-ary composition of basis operations."""

    name: str
    kind: str
    symmetric: bool
    operadic: bool
    products: dict  # symbol -> (arity, fn(*elems) -> LinComb)
    coproducts: dict  # symbol -> (factors, fn(elem) -> LinComb of Tensor)
    dual: dict  # coproduct symbol -> product symbol it inverts
    enumerate: object
    compose: object = None  # (elem, {label: elem}) -> LinComb
    generator_pair: tuple = None  # (product, coproduct) driving D_n
    unit_compose: bool = True  # compose on singleton tuples is a relabeling

    def basis(self, labels) -> list:
        return self.enumerate(tuple(labels))

    def product(self, symbol, *args) -> LinComb:
        arity, fn = self.products[symbol]
        assert len(args) == arity, "%s expects %d arguments" % (symbol, arity)
        return fn(*args)

    def coproduct(self, symbol, elem) -> LinComb:
        _, fn = self.coproducts[symbol]
        return fn(elem)

    def compose_basis(self, elem, args) -> LinComb:
        assert self.compose is not None, "%s has no operadic composition" % self.name
        return self.compose(elem, args)


def _b(fn):
    return (2, fn)


def _c(fn):
    return (2, fn)


OPERADS = {}


def _register(op: Operad):
    OPERADS[op.name] = op
    return op


_register(
    Operad(
        name="prelie",
        kind="tree",
        symmetric=True,
        operadic=True,
        products={"graft": _b(prelie_graft)},
        coproducts={"cograft": _c(prelie_cograft)},
        dual={"cograft": "graft"},
        enumerate=enumerate_trees,
        compose=prelie_compose,
        generator_pair=("graft", "cograft"),
    )
)

_register(
    Operad(
        name="nap",
        kind="tree",
        symmetric=True,
        operadic=True,
        products={"graft": _b(nap_graft)},
        coproducts={"cograft": _c(nap_cograft)},
        dual={"cograft": "graft"},
        enumerate=enumerate_trees,
        compose=nap_compose,
        generator_pair=("graft", "cograft"),
    )
)

_register(
    Operad(
        name="perm",
        kind="pointed",
        symmetric=True,
        operadic=True,
        products={"mul": _b(perm_mul)},
        coproducts={"comul": _c(perm_comul)},
        dual={"comul": "mul"},
        enumerate=enumerate_pointed,
        compose=perm_compose,
        generator_pair=("mul", "comul"),
    )
)

_register(
    Operad(
        name="pan",
        kind="pointed",
        symmetric=True,
        operadic=True,
        products={"mul": _b(pan_mul)},
        coproducts={"comul": _c(pan_comul)},
        dual={"comul": "mul"},
        enumerate=enumerate_pointed,
        compose=pan_compose,
        generator_pair=("mul", "comul"),
    )
)

_register(
    Operad(
        name="as",
        kind="word",
        symmetric=True,
        operadic=True,
        products={"concat": _b(concat)},
        coproducts={"deconcat": _c(deconcat)},
        dual={"deconcat": "concat"},
        enumerate=enumerate_words,
        compose=word_compose_concat,
        generator_pair=("concat", "deconcat"),
    )
)

_register(
    Operad(
        name="comm",
        kind="set",
        symmetric=True,
        operadic=True,
        products={"mul": _b(comm_mul)},
        coproducts={"comul": _c(comm_comul)},
        dual={"comul": "mul"},
        enumerate=enumerate_sets,
        compose=comm_compose,
        generator_pair=("mul", "comul"),
    )
)

_register(
    Operad(
        name="zinbiel",
        kind="word",
        symmetric=True,
        operadic=True,
        products={"halfshuffle": _b(halfshuffle)},
        coproducts={"cohalfshuffle": _c(cohalfshuffle)},
        dual={"cohalfshuffle": "halfshuffle"},
        enumerate=enumerate_words,
        compose=zinbiel_compose,
        generator_pair=("halfshuffle", "cohalfshuffle"),
    )
)

_register(
    Operad(
        name="leibniz",
        kind="word",
        symmetric=True,
        operadic=True,
        products={"bracket": _b(leibniz_bracket)},
        coproducts={"cobracket": _c(coleibniz)},
        dual={"cobracket": "bracket"},
        enumerate=enumerate_words,
        compose=leibniz_compose,
        generator_pair=("bracket", "cobracket"),
    )
)

_register(
    Operad(
        name="poisson",
        kind="word",
        symmetric=True,
        operadic=True,
        products={"shuffle": _b(shuffle_mul), "bracket": _b(poisson_bracket)},
        coproducts={"coshuffle": _c(coshuffle), "cobracket": _c(cobracket)},
        dual={"coshuffle": "shuffle", "cobracket": "bracket"},
        enumerate=enumerate_words,
        compose=poisson_compose,
        generator_pair=("shuffle", "coshuffle"),
        unit_compose=False,
    )
)

_register(
    Operad(
        name="mag",
        kind="planar",
        symmetric=False,
        operadic=True,
        products={"graft": _b(mag_graft)},
        coproducts={"cograft": _c(mag_cograft)},
        dual={"cograft": "graft"},
        enumerate=lambda labels: [
            t
            for t in enumerate_prec_trees(labels)
            if all(len(n.children) in (0, 2) for n in _planar_nodes(t))
        ],
        generator_pair=("graft", "cograft"),
    )
)


def _planar_nodes(t):
    yield t
    for c in t.children:
        yield from _planar_nodes(c)


MAGINF_MAX_ARITY = 6

_register(
    Operad(
        name="maginf",
        kind="planar",
        symmetric=False,
        operadic=True,
        products={"graft%d" % k: (k, maginf_graft(k)) for k in range(2, MAGINF_MAX_ARITY + 1)},
        coproducts={"cograft%d" % k: (k, maginf_cograft(k)) for k in range(2, MAGINF_MAX_ARITY + 1)},
        dual={"cograft%d" % k: "graft%d" % k for k in range(2, MAGINF_MAX_ARITY + 1)},
        enumerate=enumerate_prec_trees,
        generator_pair=("graft2", "cograft2"),
    )
)

_register(
    Operad(
        name="twoas",
        kind="planar",
        symmetric=False,
        operadic=True,
        products={"star": _b(twoas_star), "dot": _b(twoas_dot)},
        coproducts={"costar": _c(twoas_costar), "codot": _c(twoas_codot)},
        dual={"costar": "star", "codot": "dot"},
        enumerate=enumerate_alt_trees,
        generator_pair=("star", "costar"),
    )
)

_register(
    Operad(
        name="dipt",
        kind="planar",
        symmetric=False,
        operadic=True,
        products={"star": _b(dipt_star), "prec": _b(dipt_prec)},
        coproducts={"costar": _c(dipt_costar), "coprec": _c(dipt_coprec)},
        dual={"costar": "star", "coprec": "prec"},
        enumerate=enumerate_tree_words,
        generator_pair=("star", "costar"),
    )
)

_register(
    Operad(
        name="hypertree-prelie",
        kind="hypertree",
        symmetric=True,
        operadic=False,
        products={"graft": _b(ht_graft_prelie)},
        coproducts={"cograft": _c(ht_cograft_prelie)},
        dual={"cograft": "graft"},
        enumerate=enumerate_hypertrees,
        generator_pair=("graft", "cograft"),
    )
)

_register(
    Operad(
        name="hypertree-nap",
        kind="hypertree",
        symmetric=True,
        operadic=False,
        products={"graft": _b(ht_graft_nap)},
        coproducts={"cograft": _c(ht_cograft_nap)},
        dual={"cograft": "graft"},
        enumerate=enumerate_hypertrees,
        generator_pair=("graft", "cograft"),
    )
)


def get_operad(name: str) -> Operad:
    if name not in OPERADS:
        raise KeyError("unknown operad %r (known: %s)" % (name, ", ".join(sorted(OPERADS))))
    return OPERADS[name]


def dims(name: str, max_arity: int) -> list:
    op = get_operad(name)
    return [len(op.basis(range(1, n + 1))) for n in range(1, max_arity + 1)]


# ---------------------------------------------------------------------------
# spec'd family-level entry points
# ---------------------------------------------------------------------------

_TREE_OPS = {"prelie": "graft", "nap": "graft"}
_POINTED_OPS = {"perm": "mul", "pan": "mul"}
_WORD_PRODUCTS = {
    "concat": ("as", "concat"),
    "shuffle": ("poisson", "shuffle"),
    "halfshuffle": ("zinbiel", "halfshuffle"),
    "leibniz": ("leibniz", "bracket"),
    "poisson_bracket": ("poisson", "bracket"),
}
_WORD_COPRODUCTS = {
    "deconcat": ("as", "deconcat"),
    "coshuffle": ("poisson", "coshuffle"),
    "cohalfshuffle": ("zinbiel", "cohalfshuffle"),
    "coleibniz": ("leibniz", "cobracket"),
    "cobracket": ("poisson", "cobracket"),
}
_PLANAR_PRODUCTS = {
    "twoas_star": ("twoas", "star"),
    "twoas_dot": ("twoas", "dot"),
    "dipt_star": ("dipt", "star"),
    "dipt_prec": ("dipt", "prec"),
    "mag_graft": ("mag", "graft"),
}
_PLANAR_COPRODUCTS = {
    "twoas_costar": ("twoas", "costar"),
    "twoas_codot": ("twoas", "codot"),
    "dipt_costar": ("dipt", "costar"),
    "dipt_coprec": ("dipt", "coprec"),
    "mag_cograft": ("mag", "cograft"),
}


def tree_product(op, t, s) -> LinComb:
    return get_operad(op).product(_TREE_OPS[op], t, s)


def tree_coproduct(op, t) -> LinComb:
    return get_operad(op).coproduct("cograft", t)


def pointed_product(op, u, v) -> LinComb:
    return get_operad(op).product(_POINTED_OPS[op], u, v)


def pointed_coproduct(op, u) -> LinComb:
    return get_operad(op).coproduct("comul", u)


def word_product(op, u, v) -> LinComb:
    name, sym = _WORD_PRODUCTS[op]
    return get_operad(name).product(sym, u, v)


def word_coproduct(op, w) -> LinComb:
    name, sym = _WORD_COPRODUCTS[op]
    return get_operad(name).coproduct(sym, w)


def planar_product(op, x, y) -> LinComb:
    name, sym = _PLANAR_PRODUCTS[op]
    return get_operad(name).product(sym, x, y)


def planar_coproduct(op, x) -> LinComb:
    name, sym = _PLANAR_COPRODUCTS[op]
    return get_operad(name).coproduct(sym, x)


def hypertree_product(op, h, g) -> LinComb:
    return get_operad("hypertree-" + op).product("graft", h, g)


def hypertree_coproduct(op, h) -> LinComb:
    return get_operad("hypertree-" + op).coproduct("cograft", h)
