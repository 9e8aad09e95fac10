"""The surjection bialgebra: stuffles, block splits, and a generation audit.

``ST_n`` is spanned by surjections ``[n] ->> [r]`` written as value tuples
``(x(1),..,x(n))``.  The stuffle product interleaves two surjections over all
quasi-shuffles of their value ranges; the block coproduct splits the value
range ``{1..r}`` at each cut point and standardizes the two co-restrictions.
Together they form a conilpotent bialgebra satisfying the same Hopf-style
compatibility as the free associative model — and yet the algebra is *not*
generated by its primitives: the surjection ``(1,1,2)`` lies outside the
subalgebra the primitives generate.  :func:`nongeneration_certificate` proves
this with an exact rank computation and a dual witness functional, making the
obstruction checkable rather than anecdotal.

The companion fact is :func:`phi_symmetrization_rank`: the arity-wise map that
would have to be invertible for a freeness argument is full symmetrization,
whose matrix on length-2 words has rank 1 < 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product

from .elements import Surjection, standardize
from .idempotents import GradedModel, extract_primitives
from .linalg import in_span, kernel_basis, rref, solve
from .linear import Fraction, LinComb, ONE, Tensor, tensor2

__all__ = [
    "standardize",
    "surjections",
    "quasi_shuffles",
    "STElement",
    "stuffle_product",
    "co_restriction",
    "block_coproduct",
    "iterated_block_coproduct",
    "surjection_model",
    "primitive_basis",
    "HopfReport",
    "hopf_compatibility_report",
    "ConilpotencyReport",
    "conilpotency_report",
    "NongenerationReport",
    "nongeneration_certificate",
    "phi_symmetrization_rank",
]


def surjections(n: int):
    """All surjections ``[n] ->> [r]`` (any ``r``) in canonical order."""
    out = set()
    for values in product(range(1, n + 1), repeat=n):
        r = max(values)
        if set(values) == set(range(1, r + 1)):
            out.add(Surjection(values))
    return sorted(out, key=lambda s: s.sort_key())


def quasi_shuffles(r: int, s: int):
    """Surjective maps ``{1..r+s} -> {1..t}`` strictly increasing on ``{1..r}``
    and on ``{r+1..r+s}``, as value tuples ``(f(1),..,f(r+s))``.

    Positions that share an image merge a value of the left factor with one of
    the right; ``t = r + s`` recovers the plain shuffles.  There are 3 of them
    for ``r = s = 1`` and, in general, a Delannoy number's worth.
    """
    out = []
    for t in range(max(r, s), r + s + 1):
        for left in combinations(range(1, t + 1), r):
            for right in combinations(range(1, t + 1), s):
                if set(left) | set(right) == set(range(1, t + 1)):
                    out.append(left + right)
    return out


@dataclass(frozen=True)
class STElement:
    """A linear combination of surjections, with stuffle arithmetic."""

    value: LinComb

    @staticmethod
    def of(x: Surjection) -> "STElement":
        return STElement(LinComb.single(x))

    def __add__(self, other: "STElement") -> "STElement":
        return STElement(self.value + other.value)

    def __sub__(self, other: "STElement") -> "STElement":
        return STElement(self.value - other.value)

    def __neg__(self) -> "STElement":
        return STElement(-self.value)

    def scale(self, c) -> "STElement":
        return STElement(self.value.scale(c))

    def is_zero(self) -> bool:
        return self.value.is_zero()

    def star(self, other: "STElement") -> "STElement":
        out = LinComb()
        for c1, x in self.value.terms():
            for c2, y in other.value.terms():
                out = out + stuffle_product(x, y).value.scale(c1 * c2)
        return STElement(out)

    def coproduct(self) -> LinComb:
        return self.value.apply(block_coproduct)

    def to_text(self) -> str:
        return self.value.to_text()


def stuffle_product(x: Surjection, y: Surjection) -> STElement:
    """Sum of ``f(x(1),..,x(n), y(1)+r,..,y(m)+r)`` over quasi-shuffles ``f``."""
    r = x.levels()
    merged = x.values + tuple(v + r for v in y.values)
    out = []
    for f in quasi_shuffles(r, y.levels()):
        out.append((Surjection(tuple(f[v - 1] for v in merged)), ONE))
    return STElement(LinComb(out))


def co_restriction(x: Surjection, values) -> Surjection:
    """Standardized subword of the positions whose value lies in ``values``."""
    keep = set(values)
    return standardize([v for v in x.values if v in keep])


def block_coproduct(x: Surjection) -> LinComb:
    """Split the value range at each cut: Σ_i  x|{1..i} (x) x|{i+1..r}."""
    r = x.levels()
    out = []
    for i in range(1, r):
        left = co_restriction(x, range(1, i + 1))
        right = co_restriction(x, range(i + 1, r + 1))
        out.append((tensor2(left, right), ONE))
    return LinComb(out)


def iterated_block_coproduct(x: Surjection, applications: int) -> LinComb:
    """Apply the reduced block coproduct to the leftmost leg ``applications``
    times; the result lives in ``applications + 1`` tensor legs.

    A surjection onto ``{1..r}`` survives exactly ``r - 1`` applications: each
    one needs a fresh nonempty block of values.
    """
    assert applications >= 1
    out = block_coproduct(x)
    for _ in range(applications - 1):
        def expand(t: Tensor) -> LinComb:
            head = block_coproduct(t.factors[0])
            return LinComb(
                (Tensor(h.factors + t.factors[1:]), c) for c, h in head.terms()
            )
        out = out.apply(expand)
    return out


def surjection_model() -> GradedModel:
    """The surjection coalgebra as a graded model (for primitive extraction)."""
    return GradedModel(
        name="solomon-tits",
        basis_fn=surjections,
        coproduct_fns=(block_coproduct,),
    )


def primitive_basis(n: int):
    """Exact kernel of the block coproduct on ``ST_n``, as combinations."""
    return extract_primitives(surjection_model(), n)[n]


# ---------------------------------------------------------------------------
# compatibility and conilpotency reports
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HopfReport:
    max_total_degree: int
    checked: int
    ok: bool
    counterexample: str | None = None


def _hopf_rhs(x: Surjection, y: Surjection) -> LinComb:
    """Reduced-coproduct form of Δ(x*y) = Δ(x) * Δ(y) for a unital coproduct
    Δ(z) = z(x)1 + 1(x)z + Δred(z), with the unit terms removed again."""
    dx = block_coproduct(x)
    dy = block_coproduct(y)
    ex = STElement.of(x)
    ey = STElement.of(y)

    def pair(a: STElement, b: STElement) -> LinComb:
        out = LinComb()
        for c1, u in a.value.terms():
            for c2, v in b.value.terms():
                out = out + LinComb.single(tensor2(u, v), c1 * c2)
        return out

    rhs = pair(ex, ey) + pair(ey, ex)
    for c, t in dy.terms():
        y1, y2 = (STElement.of(f) for f in t.factors)
        rhs = rhs + pair(ex.star(y1), y2).scale(c)
        rhs = rhs + pair(y1, ex.star(y2)).scale(c)
    for c, t in dx.terms():
        x1, x2 = (STElement.of(f) for f in t.factors)
        rhs = rhs + pair(x1.star(ey), x2).scale(c)
        rhs = rhs + pair(x1, x2.star(ey)).scale(c)
    for c1, tx in dx.terms():
        for c2, ty in dy.terms():
            x1, x2 = (STElement.of(f) for f in tx.factors)
            y1, y2 = (STElement.of(f) for f in ty.factors)
            rhs = rhs + pair(x1.star(y1), x2.star(y2)).scale(c1 * c2)
    return rhs


def hopf_compatibility_report(max_total_degree: int = 4) -> HopfReport:
    """Check Δ(x*y) against the Hopf expansion for all pairs with n+m small."""
    checked = 0
    for n in range(1, max_total_degree):
        for m in range(1, max_total_degree - n + 1):
            for x in surjections(n):
                for y in surjections(m):
                    lhs = stuffle_product(x, y).coproduct()
                    rhs = _hopf_rhs(x, y)
                    checked += 1
                    if lhs != rhs:
                        return HopfReport(
                            max_total_degree=max_total_degree,
                            checked=checked,
                            ok=False,
                            counterexample="%s * %s" % (x.to_text(), y.to_text()),
                        )
    return HopfReport(max_total_degree=max_total_degree, checked=checked, ok=True)


@dataclass(frozen=True)
class ConilpotencyReport:
    max_degree: int
    checked: int
    ok: bool
    indices: dict
    counterexample: str | None = None


def conilpotency_report(max_degree: int = 4) -> ConilpotencyReport:
    """Verify each basis surjection dies after exactly ``r - 1`` splits.

    ``indices`` maps word length ``n`` to the largest number of reduced-
    coproduct applications that some element of ``ST_n`` survives (which is
    ``n - 1``, attained by the permutation words).
    """
    checked = 0
    indices = {}
    for n in range(1, max_degree + 1):
        survived = 0
        for x in surjections(n):
            r = x.levels()
            if r > 1:
                alive = iterated_block_coproduct(x, r - 1)
                if alive.is_zero():
                    return ConilpotencyReport(
                        max_degree, checked, False, indices,
                        "%s died before %d splits" % (x.to_text(), r - 1),
                    )
                survived = max(survived, r - 1)
            if not iterated_block_coproduct(x, r).is_zero():
                return ConilpotencyReport(
                    max_degree, checked, False, indices,
                    "%s survived %d splits" % (x.to_text(), r),
                )
            checked += 1
        indices[n] = survived
    return ConilpotencyReport(max_degree, checked, True, indices)


# ---------------------------------------------------------------------------
# the generation audit
# ---------------------------------------------------------------------------


def _coords(vectors, index):
    return [[v.coeff(b) for b in index] for v in vectors]


def _span_reduce(vectors, index):
    """Independent subset of ``vectors`` (as combinations over ``index``)."""
    if not vectors:
        return []
    rows, pivots = rref(_coords(vectors, index))
    return [
        LinComb((b, c) for b, c in zip(index, row) if c)
        for row in rows[: len(pivots)]
    ]


@dataclass(frozen=True)
class NongenerationReport:
    """Exact certificate for membership of ``target`` in the primitive-generated
    subalgebra.  When ``generated`` is False, ``witness`` is a linear functional
    (coefficients on the degree-``n`` surjection basis) that vanishes on the
    whole generated subspace but pairs to 1 with the target."""

    target: str
    degree_bound: int
    ambient_dims: dict
    primitive_dims: dict
    generated_dims: dict
    generated: bool
    witness: dict | None

    @property
    def ok(self) -> bool:  # the report is "ok" when it is self-consistent
        n = len(self.ambient_dims)
        return all(
            self.primitive_dims[d] <= self.generated_dims[d] <= self.ambient_dims[d]
            for d in range(1, n + 1)
        )

    def to_json(self) -> dict:
        return {
            "target": self.target,
            "degree_bound": self.degree_bound,
            "ambient_dims": {str(k): v for k, v in self.ambient_dims.items()},
            "primitive_dims": {str(k): v for k, v in self.primitive_dims.items()},
            "generated_dims": {str(k): v for k, v in self.generated_dims.items()},
            "generated": self.generated,
            "witness": self.witness,
        }


def nongeneration_certificate(
    target: Surjection, degree_bound: int | None = None
) -> NongenerationReport:
    """Decide whether ``target`` is a combination of stuffle products of
    primitives, with exact ranks as evidence.

    The generated subspace in degree ``n`` is built as
    ``G_n = P_n + Σ_k P_k * G_{n-k}`` (associativity lets every product be
    peeled from the left).  Membership and the dual witness both come from
    reduced row echelon computations over exact rationals.
    """
    n = target.degree()
    bound = degree_bound if degree_bound is not None else n
    assert n <= bound, "target degree exceeds the bound"

    bases = {d: surjections(d) for d in range(1, bound + 1)}
    prims = extract_primitives(surjection_model(), bound)
    generated = {}
    for d in range(1, bound + 1):
        vectors = list(prims[d])
        for k in range(1, d):
            for p in prims[k]:
                for g in generated[d - k]:
                    vectors.append(STElement(p).star(STElement(g)).value)
        generated[d] = _span_reduce(vectors, bases[d])

    index = bases[n]
    span_rows = _coords(generated[n], index)
    target_vec = [LinComb.single(target).coeff(b) for b in index]
    member = in_span(span_rows, target_vec)

    witness = None
    if not member:
        # a functional orthogonal to the generated span with <w, target> != 0,
        # scaled so the pairing is exactly 1
        for w in kernel_basis(span_rows):
            pairing = sum(a * b for a, b in zip(w, target_vec))
            if pairing:
                witness = {
                    index[i].to_text(): str(c / pairing)
                    for i, c in enumerate(w)
                    if c
                }
                break
        assert witness is not None, "membership and kernel computations disagree"

    return NongenerationReport(
        target=target.to_text(),
        degree_bound=bound,
        ambient_dims={d: len(bases[d]) for d in bases},
        primitive_dims={d: len(prims[d]) for d in prims},
        generated_dims={d: len(generated[d]) for d in generated},
        generated=member,
        witness=witness,
    )


def phi_symmetrization_rank(n: int = 2):
    """Rank of full symmetrization on length-``n`` permutation words.

    The map sends any word to the sum of all its value-permuted images; its
    failure to be injective (rank 1 on a 2-dimensional space already at
    ``n = 2``) is the structural reason the generation audit can fail.
    Returns ``(rank, dimension)``.
    """
    words = sorted(permutations(range(1, n + 1)))
    pos = {w: i for i, w in enumerate(words)}
    matrix = []
    for w in words:
        row = [Fraction(0)] * len(words)
        for sigma in permutations(range(1, n + 1)):
            image = tuple(sigma[v - 1] for v in w)
            row[pos[image]] += ONE
        matrix.append(row)
    reduced, pivots = rref(matrix)
    return len(pivots), len(words)
