"""Exact linear combinations with a deterministic term order.

Scalars are ``fractions.Fraction`` throughout -- never floats.  ``str()`` of a
Fraction already produces the textual scalar grammar used everywhere in this
package ("3", "-3/2"), and ``Fraction(text)`` parses it back.

Basis objects only need to be hashable, comparable via a ``sort_key()`` method
returning a tuple, and printable via ``to_text()``.  All element families in
:mod:`operad_forge.elements` and the :class:`Tensor` wrapper below satisfy this.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


Scalar = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def scalar(x) -> Fraction:
    """Coerce ints / strings like "-3/2" to an exact scalar.  Floats are refused."""
    if isinstance(x, float):
        raise TypeError("floats are not allowed in exact computations: %r" % (x,))
    return Fraction(x)


class LinComb:
    """A finite linear combination of basis objects with Fraction coefficients.

    Immutable by convention: all operations return fresh instances, and zero
    coefficients are dropped eagerly so that equality is equality of term maps.
    Iteration and printing follow the basis objects' ``sort_key()`` order, which
    makes every textual / JSON rendering deterministic.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        data = {}
        if terms:
            for basis, coeff in (terms.items() if isinstance(terms, dict) else terms):
                c = scalar(coeff)
                if c:
                    acc = data.get(basis, ZERO) + c
                    if acc:
                        data[basis] = acc
                    else:
                        del data[basis]
        self._terms = data

    @staticmethod
    def zero() -> "LinComb":
        return LinComb()

    @staticmethod
    def single(basis, coeff=ONE) -> "LinComb":
        return LinComb([(basis, coeff)])

    @staticmethod
    def from_terms(pairs) -> "LinComb":
        """Build from an iterable of (coeff, basis) pairs, summing repeats."""
        return LinComb((basis, coeff) for coeff, basis in pairs)

    # -- queries ---------------------------------------------------------

    def coeff(self, basis) -> Fraction:
        return self._terms.get(basis, ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def support(self):
        """Basis objects with nonzero coefficient, in canonical order."""
        return sorted(self._terms, key=lambda b: b.sort_key())

    def terms(self):
        """List of (coeff, basis) in canonical order."""
        return [(self._terms[b], b) for b in self.support()]

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self.terms())

    def __eq__(self, other):
        return isinstance(other, LinComb) and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other: "LinComb") -> "LinComb":
        data = dict(self._terms)
        for basis, c in other._terms.items():
            acc = data.get(basis, ZERO) + c
            if acc:
                data[basis] = acc
            else:
                data.pop(basis, None)
        out = LinComb()
        out._terms = data
        return out

    def __sub__(self, other: "LinComb") -> "LinComb":
        return self + (-other)

    def __neg__(self) -> "LinComb":
        out = LinComb()
        out._terms = {b: -c for b, c in self._terms.items()}
        return out

    def scale(self, factor) -> "LinComb":
        f = scalar(factor)
        out = LinComb()
        if f:
            out._terms = {b: c * f for b, c in self._terms.items()}
        return out

    def __mul__(self, factor):
        return self.scale(factor)

    __rmul__ = __mul__

    # -- linear extension ------------------------------------------------

    def apply(self, f) -> "LinComb":
        """Extend ``f : basis -> LinComb`` linearly over this combination."""
        data = {}
        for basis, c in self._terms.items():
            for image, c2 in f(basis)._terms.items():
                acc = data.get(image, ZERO) + c * c2
                if acc:
                    data[image] = acc
                else:
                    data.pop(image, None)
        out = LinComb()
        out._terms = data
        return out

    def map_basis(self, f) -> "LinComb":
        """Apply ``f : basis -> basis`` to every term (coefficients merge)."""
        return LinComb((f(b), c) for b, c in self._terms.items())

    # -- rendering -------------------------------------------------------

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        chunks = []
        for coeff, basis in self.terms():
            body = basis.to_text()
            if coeff == 1:
                chunks.append(body)
            elif coeff == -1:
                chunks.append("-" + body)
            else:
                chunks.append("%s*%s" % (coeff, body))
        return " + ".join(chunks)

    __str__ = to_text

    def __repr__(self):
        return "LinComb(%s)" % self.to_text()

    def to_json(self):
        """JSON-ready list of ``{"coeff", "basis"}`` rows in canonical order."""
        return [{"coeff": str(c), "basis": b.to_text()} for c, b in self.terms()]


@dataclass(frozen=True)
class Tensor:
    """An ordered tensor word of basis elements (all from the same family)."""

    factors: tuple

    def __len__(self):
        return len(self.factors)

    def sort_key(self):
        return (len(self.factors),) + tuple(f.sort_key() for f in self.factors)

    def to_text(self) -> str:
        return " @ ".join(f.to_text() for f in self.factors)

    def map(self, f) -> "Tensor":
        return Tensor(tuple(f(x) for x in self.factors))

    def permute(self, sigma) -> "Tensor":
        """Place factor ``sigma(i)`` in position ``i`` (1-indexed map)."""
        return Tensor(tuple(self.factors[sigma[i + 1] - 1] for i in range(len(self.factors))))


def tensor2(x, y) -> Tensor:
    return Tensor((x, y))


def tensor_product(*combs: LinComb) -> LinComb:
    """Tensor product of linear combinations, as a LinComb of :class:`Tensor`."""
    acc = [(ONE, ())]
    for lc in combs:
        nxt = []
        for c0, fs in acc:
            for c1, b in lc.terms():
                nxt.append((c0 * c1, fs + (b,)))
        acc = nxt
    return LinComb((Tensor(fs), c) for c, fs in acc)


def bilinear(f):
    """Lift ``f : (basis, basis) -> LinComb`` to a map on pairs of LinCombs."""

    def lifted(x: LinComb, y: LinComb) -> LinComb:
        acc = LinComb()
        for cx, bx in x.terms():
            for cy, by in y.terms():
                acc = acc + f(bx, by).scale(cx * cy)
        return acc

    return lifted


def multilinear(f):
    """Lift ``f : tuple(basis) -> LinComb`` to a map on tuples of LinCombs."""

    def lifted(*args: LinComb) -> LinComb:
        acc = LinComb()
        stack = [(ONE, ())]
        for lc in args:
            stack = [(c0 * c1, picked + (b,)) for c0, picked in stack for c1, b in lc.terms()]
        for c, picked in stack:
            acc = acc + f(*picked).scale(c)
        return acc

    return lifted
