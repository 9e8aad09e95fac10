"""Free algebras over a catalogued operad, with two independent coproduct
routes.

* the *combinatorial* coproducts come straight from the registry (edge
  deletion, deconcatenation, ...) and act on decorated elements directly;
* the *basis-dual* coproducts invert the products: the coefficient of a basis
  element x in mu(x_1, ..., x_n) contributes (1/coeff) x_1 (x) ... (x) x_n to
  the dual cooperation of mu at x.  At the level of distinct labels every such
  coefficient is +-1 (asserted at runtime); repeated-generator elements are
  handled by lifting to distinct position labels and pushing the result
  forward along the decoration, which is what makes multiplicities like
  Delta(g(h,h)) = 2 g(h) (x) h come out right.

Agreement of the two routes over every operad is an acceptance-level check.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .elements import (
    Hypertree,
    MSet,
    PlanarTree,
    PointedSet,
    RootedTree,
    Word,
    label_key,
    leaf,
    perm_maps,
)
from .linear import LinComb, ONE, Tensor, tensor2
from .operads import Operad, get_operad


class DegreeBoundError(Exception):
    """An operation would exceed the algebra's degree bound."""


_SINGLETON = {
    "tree": RootedTree,
    "pointed": PointedSet,
    "word": lambda l: Word((l,)),
    "set": lambda l: MSet((l,)),
    "planar": leaf,
    "hypertree": Hypertree,
}


def singleton(operad: Operad, label):
    """The degree-1 basis element carrying one label."""
    return _SINGLETON[operad.kind](label)


def lift(x):
    """Replace labels by distinct positions 1..n; return (lifted, decoration).

    The decoration maps each position back to the original label, so
    ``lifted.relabel(dec) == x``.  Elements whose labels are already distinct
    are returned unchanged with the identity decoration.
    """
    labels = x.labels()
    if len(set(labels)) == len(labels):
        return x, {l: l for l in labels}
    lifted, dec = _positional(x, itertools.count(1))
    assert lifted.relabel(dec) == x
    return lifted, dec


def _positional(x, counter):
    if isinstance(x, RootedTree):
        i = next(counter)
        dec = {i: x.label}
        kids = []
        for c in x.children:
            ck, cd = _positional(c, counter)
            kids.append(ck)
            dec.update(cd)
        return RootedTree(i, tuple(kids)), dec
    if isinstance(x, PointedSet):
        i = next(counter)
        dec = {i: x.point}
        rest = []
        for l in x.rest:
            j = next(counter)
            dec[j] = l
            rest.append(j)
        return PointedSet(i, tuple(rest)), dec
    if isinstance(x, Word):
        dec = {}
        letters = []
        for l in x.letters:
            j = next(counter)
            dec[j] = l
            letters.append(j)
        return Word(tuple(letters)), dec
    if isinstance(x, MSet):
        dec = {}
        members = []
        for l in x.members:
            j = next(counter)
            dec[j] = l
            members.append(j)
        return MSet(tuple(members)), dec
    if isinstance(x, PlanarTree):
        if x.is_leaf():
            i = next(counter)
            return leaf(i), {i: x.label}
        dec = {}
        kids = []
        for c in x.children:
            ck, cd = _positional(c, counter)
            kids.append(ck)
            dec.update(cd)
        return PlanarTree(x.op, None, tuple(kids)), dec
    raise TypeError("cannot lift %r" % (x,))


def _ordered_label_splits(labels, parts):
    """Ordered partitions of a label tuple into ``parts`` nonempty blocks,
    each block sorted; deterministic order."""
    labels = tuple(sorted(labels, key=label_key))

    def rec(remaining, k):
        if k == 1:
            yield (remaining,)
            return
        n = len(remaining)
        for r in range(1, n - k + 2):
            for block in itertools.combinations(remaining, r):
                rest = tuple(x for x in remaining if x not in block)
                for tail in rec(rest, k - 1):
                    yield (block,) + tail

    return rec(labels, parts)


def dual_coproduct_terms(operad: Operad, cop_symbol: str, x) -> LinComb:
    """Basis-dual cooperation of the product dual to ``cop_symbol`` at ``x``,
    computed by inverting the product.  Handles repeated labels by lift and
    pushforward."""
    factors, _ = operad.coproducts[cop_symbol]
    psym = operad.dual[cop_symbol]
    xl, dec = lift(x)
    acc = LinComb()
    for blocks in _ordered_label_splits(xl.labels(), factors):
        basis_opts = [operad.basis(b) for b in blocks]
        for combo in itertools.product(*basis_opts):
            prod = operad.product(psym, *combo)
            c = prod.coeff(xl)
            if c:
                assert c in (1, -1), "non-unit structure coefficient %s at %s" % (c, xl)
                acc = acc + LinComb.single(Tensor(combo).map(lambda e: e.relabel(dec)), ONE / c)
    return acc


def dual_coproduct_table(operad: Operad, cop_symbol: str, labels) -> dict:
    """Batch version of :func:`dual_coproduct_terms` over distinct labels:
    one pass over all products, scattered into a map element -> LinComb."""
    factors, _ = operad.coproducts[cop_symbol]
    psym = operad.dual[cop_symbol]
    table = {}
    for blocks in _ordered_label_splits(tuple(labels), factors):
        basis_opts = [operad.basis(b) for b in blocks]
        for combo in itertools.product(*basis_opts):
            prod = operad.product(psym, *combo)
            for c, target in prod.terms():
                assert c in (1, -1), "non-unit structure coefficient %s at %s" % (c, target)
                table[target] = table.get(target, LinComb()) + LinComb.single(Tensor(combo), ONE / c)
    return table


def nary_dual_coproduct(operad: Operad, op_elem, x) -> LinComb:
    """The cooperation dual to the basis operation ``op_elem``, applied to
    ``x``: the sum of 1/lambda times each tuple whose composite contains
    ``x`` with coefficient lambda.  Legs may have any positive degrees; when
    ``x`` has the same degree as ``op_elem`` every leg is a singleton and
    the sum is the stabilizer-style matching count.
    """
    n = op_elem.degree()
    if operad.compose is None:
        raise ValueError("no operadic composition on %s" % operad.name)
    xl, dec = lift(x)
    # tensor leg j pairs with composition slot j, so factors go in label order
    slots = sorted(op_elem.labels())
    assert slots == list(range(1, n + 1)), "basis operations live on labels 1..n"
    acc = LinComb()
    if x.degree() == n and operad.unit_compose:
        for m in perm_maps_between(slots, xl.labels()):
            if op_elem.relabel(m) == xl:
                acc = acc + LinComb.single(
                    Tensor(tuple(singleton(operad, dec[m[i]]) for i in slots))
                )
        return acc
    for blocks in _ordered_label_splits(xl.labels(), n):
        for combo in itertools.product(*(operad.basis(b) for b in blocks)):
            composite = operad.compose_basis(op_elem, dict(zip(slots, combo)))
            c = composite.coeff(xl)
            if c:
                acc = acc + LinComb.single(
                    Tensor(tuple(e.relabel(dec) for e in combo)), ONE / c
                )
    return acc


def perm_maps_between(src, dst):
    """All bijections from the labels ``src`` onto the labels ``dst``."""
    src = tuple(src)
    for image in itertools.permutations(tuple(dst)):
        yield dict(zip(src, image))


def crochet_pairing(operad: Operad, delta_elem, mu_elem) -> dict:
    """The identity-on-basis dual pairing <delta^sigma, mu> for every sigma,
    keyed by the one-line tuple (sigma(1), ..., sigma(n)).

    Nonzero exactly when the relabeled cooperation index matches mu; when the
    two lie in the same orbit the number of hits is the stabilizer order.
    """
    n = delta_elem.degree()
    assert mu_elem.degree() == n
    out = {}
    for image in itertools.permutations(range(1, n + 1)):
        m = dict(zip(range(1, n + 1), image))
        out[image] = ONE if delta_elem.relabel(m) == mu_elem else Fraction(0)
    return out


# ---------------------------------------------------------------------------
# free algebras on named generators
# ---------------------------------------------------------------------------


@dataclass
class FreeAlgebra:
    """The free algebra of an operad on named generators, truncated at a
    degree bound.  Operations that would land above the bound raise
    :class:`DegreeBoundError` -- never a silent truncation."""

    operad: Operad
    generators: tuple
    degree_bound: int
    _basis_cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self.generators = tuple(self.generators)
        assert len(set(self.generators)) == len(self.generators)
        for g in self.generators:
            assert isinstance(g, str) and g, "generators are nonempty names"

    def gen(self, name) -> "FreeElement":
        assert name in self.generators, "unknown generator %r" % (name,)
        return FreeElement(self, LinComb.single(singleton(self.operad, name)))

    def element(self, comb: LinComb) -> "FreeElement":
        return FreeElement(self, comb)

    def basis(self, degree: int) -> list:
        """All decorated basis elements of one degree."""
        assert 1 <= degree <= self.degree_bound
        key = degree
        if key not in self._basis_cache:
            out = set()
            for b in self.operad.basis(range(1, degree + 1)):
                for dec in itertools.product(self.generators, repeat=degree):
                    out.add(b.relabel(dict(zip(range(1, degree + 1), dec))))
            self._basis_cache[key] = sorted(out, key=lambda e: e.sort_key())
        return self._basis_cache[key]

    def dim(self, degree: int) -> int:
        return len(self.basis(degree))

    def _check_degree(self, d: int):
        if d > self.degree_bound:
            raise DegreeBoundError(
                "degree %d exceeds bound %d on %s" % (d, self.degree_bound, self.operad.name)
            )

    def product(self, symbol: str, *elems: "FreeElement") -> "FreeElement":
        arity, _ = self.operad.products[symbol]
        assert len(elems) == arity
        acc = LinComb()
        for picks in itertools.product(*(e.comb.terms() for e in elems)):
            coeff = ONE
            for c, _ in picks:
                coeff *= c
            parts = [b for _, b in picks]
            self._check_degree(sum(p.degree() for p in parts))
            acc = acc + self.operad.product(symbol, *parts).scale(coeff)
        return FreeElement(self, acc)

    def coproduct(self, symbol: str, elem: "FreeElement") -> LinComb:
        """Combinatorial coproduct, extended linearly; LinComb of Tensor."""
        return elem.comb.apply(lambda b: self.operad.coproduct(symbol, b))

    def free_coproduct(self, symbol: str, elem: "FreeElement") -> LinComb:
        """Basis-dual coproduct (product inversion + pushforward)."""
        return elem.comb.apply(lambda b: dual_coproduct_terms(self.operad, symbol, b))

    def evaluate(self, op_elem, args) -> "FreeElement":
        """Apply the basis operation ``op_elem`` (labels 1..n) to n elements."""
        n = op_elem.degree()
        args = list(args)
        assert len(args) == n
        combs = [a.comb if isinstance(a, FreeElement) else LinComb.single(a) for a in args]
        acc = LinComb()
        for picks in itertools.product(*(c.terms() for c in combs)):
            coeff = ONE
            for c, _ in picks:
                coeff *= c
            parts = [b for _, b in picks]
            self._check_degree(sum(p.degree() for p in parts))
            acc = acc + self.operad.compose_basis(
                op_elem, {i + 1: parts[i] for i in range(n)}
            ).scale(coeff)
        return FreeElement(self, acc)

    def cofiltration_degree(self, elem: "FreeElement") -> int:
        """Least n such that every length-n word of reduced coproducts kills
        the element (equivalently: the element lies in the n-th cofiltration
        stage).  Degree-homogeneous inputs on a free algebra give their own
        degree back; that equality is a test invariant, not assumed here."""
        if elem.comb.is_zero():
            return 0
        symbols = list(self.operad.coproducts)
        current = [Tensor((b,)) for b in elem.comb.support()]
        stage = 1
        while True:
            nxt = set()
            alive = False
            for t in current:
                for pos in range(len(t.factors)):
                    for sym in symbols:
                        res = self.operad.coproduct(sym, t.factors[pos])
                        for _, split in res.terms():
                            alive = True
                            nxt.add(
                                Tensor(t.factors[:pos] + split.factors + t.factors[pos + 1 :])
                            )
            if not alive:
                return stage
            stage += 1
            current = sorted(nxt, key=lambda t: t.sort_key())
            assert stage <= self.degree_bound + 1, "cofiltration did not stabilize"


@dataclass(frozen=True)
class FreeElement:
    """An element of a FreeAlgebra: an exact linear combination of decorated
    basis elements."""

    algebra: FreeAlgebra
    comb: LinComb

    def __add__(self, other: "FreeElement") -> "FreeElement":
        assert other.algebra is self.algebra
        return FreeElement(self.algebra, self.comb + other.comb)

    def __sub__(self, other: "FreeElement") -> "FreeElement":
        assert other.algebra is self.algebra
        return FreeElement(self.algebra, self.comb - other.comb)

    def __neg__(self) -> "FreeElement":
        return FreeElement(self.algebra, -self.comb)

    def scale(self, c) -> "FreeElement":
        return FreeElement(self.algebra, self.comb.scale(c))

    def __mul__(self, c):
        return self.scale(c)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.comb.is_zero()

    def degrees(self) -> tuple:
        return tuple(sorted({b.degree() for _, b in self.comb.terms()}))

    def homogeneous_part(self, degree: int) -> "FreeElement":
        return FreeElement(
            self.algebra,
            LinComb((b, c) for c, b in self.comb.terms() if b.degree() == degree),
        )

    def max_degree(self) -> int:
        return max((b.degree() for _, b in self.comb.terms()), default=0)

    def to_text(self) -> str:
        return self.comb.to_text()

    __str__ = to_text
