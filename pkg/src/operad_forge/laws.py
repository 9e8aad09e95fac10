"""The compatibility-law catalogue and its exhaustive checker.

Each catalogue entry couples a product family with a coproduct family on one
free model and states how the coproduct of a product rewrites into tensors of
products of Sweedler components.  Entries are executable: the right-hand side
is a function building the expected tensor LinComb from the same primitives
the free model exposes, and ``check_law`` compares it against the directly
computed coproduct over every tuple of basis arguments within a degree bound.

Two scopes exist.  ``all-args`` entries are identities of the free model and
are quantified over all basis arguments; ``primitive-args`` entries are only
claimed on tuples of degree-1 generators.  Two entries carry the narrow
scope, and not as a formality: the coPAN-Perm rewrite genuinely stops holding
once the right argument has degree 3, and the Perm rewrite once both factors
are composite and the right one has degree 3.  Each entry's ``note`` pins the
exact boundary and ``test_laws`` freezes the minimal counterexamples.

Argument tuples use consecutive label blocks (x on 1..a, y on a+1..a+b, ...);
every ingredient commutes with relabelling, so any violation on arbitrary
distinct labels relabels onto one of the checked tuples.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .elements import (
    Word,
    enumerate_alt_trees,
    enumerate_hypertrees,
    enumerate_pointed,
    enumerate_prec_trees,
    enumerate_sets,
    enumerate_tree_words,
    enumerate_trees,
    enumerate_words,
    perm_maps,
)
from .freealg import FreeElement, nary_dual_coproduct, singleton
from .linalg import rref
from .linear import Fraction, LinComb, ONE, Tensor, bilinear, tensor_product
from .operads import (
    comm_comul,
    comm_mul,
    concat,
    coshuffle,
    cohalfshuffle,
    deconcat,
    dipt_coprec,
    dipt_costar,
    dipt_prec,
    dipt_star,
    get_operad,
    ht_cograft_nap,
    ht_cograft_prelie,
    ht_graft_nap,
    ht_graft_prelie,
    leibniz_bracket,
    mag_cograft,
    mag_graft,
    maginf_cograft,
    maginf_graft,
    MAGINF_MAX_ARITY,
    nap_cograft,
    nap_graft,
    pan_comul,
    pan_mul,
    perm_comul,
    perm_mul,
    poisson_bracket,
    prelie_cograft,
    prelie_graft,
    shuffle_mul,
    twoas_codot,
    twoas_costar,
    twoas_dot,
    twoas_star,
)

_one = LinComb.single


def _sweedler(cop, x):
    """(coeff, left, right) triples of a binary coproduct at a basis element."""
    return [(c, t.factors[0], t.factors[1]) for c, t in cop(x).terms()]


# ---------------------------------------------------------------------------
# word-side auxiliary operators (associative / Leibniz couplings)
# ---------------------------------------------------------------------------


def rv_word(w: Word) -> LinComb:
    """Reverse a word into left-nested brackets: rv(abc) = [[c,b],a],
    expanded in the word basis."""
    if w.degree() == 1:
        return _one(w)
    head, tail = Word(w.letters[:1]), Word(w.letters[1:])
    return bilinear(leibniz_bracket)(rv_word(tail), _one(head))


def bracket_unit_word(w: Word) -> LinComb:
    """The bracket against an absent left argument: the Leibniz expansion of
    [u, w] with u erased, i.e. sum over splits {2..q} = I 'union' J of
    (-1)^|J| w_J-reversed . w_1 . w_I."""
    return leibniz_bracket(Word(()), w)


def rv_operator(x: FreeElement) -> FreeElement:
    return FreeElement(x.algebra, x.comb.apply(rv_word))


def bracket_unit(x: FreeElement) -> FreeElement:
    return FreeElement(x.algebra, x.comb.apply(bracket_unit_word))


# ---------------------------------------------------------------------------
# generic right-hand sides
# ---------------------------------------------------------------------------


def _nui3(mul, cop, x, y) -> LinComb:
    """x(x)y + x1(x)(x2 y) + (x y1)(x)y2 -- the three-term split-or-pass law."""
    acc = tensor_product(_one(x), _one(y))
    for c, x1, x2 in _sweedler(cop, x):
        acc = acc + tensor_product(_one(x1), mul(x2, y)).scale(c)
    for c, y1, y2 in _sweedler(cop, y):
        acc = acc + tensor_product(mul(x, y1), _one(y2)).scale(c)
    return acc


def _hopf7(mul, cop, x, y) -> LinComb:
    """The reduced Hopf expansion: both factors may stay whole or split."""
    acc = tensor_product(_one(x), _one(y)) + tensor_product(_one(y), _one(x))
    dx, dy = _sweedler(cop, x), _sweedler(cop, y)
    for c, x1, x2 in dx:
        acc = acc + (
            tensor_product(_one(x1), mul(x2, y)) + tensor_product(mul(x1, y), _one(x2))
        ).scale(c)
    for c, y1, y2 in dy:
        acc = acc + (
            tensor_product(mul(x, y1), _one(y2)) + tensor_product(_one(y1), mul(x, y2))
        ).scale(c)
    for cx, x1, x2 in dx:
        for cy, y1, y2 in dy:
            acc = acc + tensor_product(mul(x1, y1), mul(x2, y2)).scale(cx * cy)
    return acc


def _nui_rhs(cop_key, mul_key):
    def rhs(ops, x, y):
        return _nui3(ops[mul_key], ops[cop_key], x, y)

    return rhs


def _zero_rhs(ops, *args):
    return LinComb()


def _pair_rhs(ops, x, y):
    return tensor_product(_one(x), _one(y))


# ---------------------------------------------------------------------------
# per-entry right-hand sides
# ---------------------------------------------------------------------------


def _rhs_hopf_comm(ops, x, y):
    return _hopf7(ops["mul"], ops["comul"], x, y)


def _rhs_semihopf(ops, u, v):
    """Five terms: the first letter of the left factor pins the left tensor
    leg, so u splits with the half-shuffle coproduct while v splits with the
    full coshuffle."""
    cat, cop, costar = ops["concat"], ops["cohalfshuffle"], ops["coshuffle"]
    acc = tensor_product(_one(u), _one(v))
    du, dv = _sweedler(cop, u), _sweedler(costar, v)
    for c, u1, u2 in du:
        acc = acc + (
            tensor_product(_one(u1), cat(u2, v)) + tensor_product(cat(u1, v), _one(u2))
        ).scale(c)
    for c, v1, v2 in dv:
        acc = acc + tensor_product(cat(u, v1), _one(v2)).scale(c)
    for cu, u1, u2 in du:
        for cv, v1, v2 in dv:
            acc = acc + tensor_product(cat(u1, v1), cat(u2, v2)).scale(cu * cv)
    return acc


def _maginf_rhs(cop_arity, prod_arity):
    def rhs(ops, *args):
        if cop_arity != prod_arity:
            return LinComb()
        return _one(Tensor(args))

    return rhs


def _rhs_livernet(ops, x, y):
    mul, cop = ops["graft"], ops["cograft"]
    acc = tensor_product(_one(x), _one(y))
    for c, y1, y2 in _sweedler(cop, y):
        acc = acc + tensor_product(mul(x, y1), _one(y2)).scale(c)
    for c, x1, x2 in _sweedler(cop, x):
        acc = acc + tensor_product(mul(x1, y), _one(x2)).scale(c)
    return acc


def _rhs_prelie(ops, x, y):
    mul, cop = ops["graft"], ops["cograft"]
    acc = tensor_product(_one(x), _one(y)).scale(x.degree())
    for c, y1, y2 in _sweedler(cop, y):
        acc = acc + tensor_product(mul(x, y1), _one(y2)).scale(c)
    for c, x1, x2 in _sweedler(cop, x):
        acc = acc + (
            tensor_product(mul(x1, y), _one(x2)) + tensor_product(_one(x1), mul(x2, y))
        ).scale(c)
    return acc


def _rhs_nap(ops, x, y):
    mul, cop = ops["graft"], ops["cograft"]
    acc = tensor_product(_one(x), _one(y))
    for c, x1, x2 in _sweedler(cop, x):
        acc = acc + tensor_product(mul(x1, y), _one(x2)).scale(c)
    return acc


def _rhs_pan(ops, u, v):
    if v.degree() != 1:
        return LinComb()
    mul, cop = ops["mul"], ops["comul"]
    acc = tensor_product(_one(u), _one(v))
    for c, u1, u2 in _sweedler(cop, u):
        acc = acc + tensor_product(mul(u1, v), _one(u2)).scale(c)
    return acc


def _rhs_perm(ops, t, s):
    """Seven summands.  bar(x) divides by the degree (compensating the number
    of pointings a right leg can carry); dot(x) adds back the point-swapped
    products of x's Sweedler halves whose right leg is a single element."""
    mul, cop = ops["mul"], ops["comul"]
    mul_l = bilinear(mul)

    def bar(e) -> LinComb:
        return LinComb.single(e, Fraction(1, e.degree()))

    def dot(e) -> LinComb:
        acc = _one(e)
        for c, e1, e2 in _sweedler(cop, e):
            if e2.degree() == 1:
                acc = acc + mul(e2, e1).scale(c)
        return acc

    dt, ds = _sweedler(cop, t), _sweedler(cop, s)
    acc = tensor_product(_one(t), dot(s))
    for c, t1, t2 in dt:
        acc = acc + tensor_product(_one(t1), mul(t2, s) + mul_l(dot(s), bar(t2))).scale(c)
        acc = acc + tensor_product(mul(t1, s), _one(t2)).scale(c)
    for c, s1, s2 in ds:
        acc = acc + tensor_product(mul(t, s1), _one(s2)).scale(c)
        acc = acc + tensor_product(mul_l(_one(t), bar(s2)), dot(s1)).scale(c)
    for ct, t1, t2 in dt:
        for cs, s1, s2 in ds:
            w = ct * cs
            acc = acc + tensor_product(
                mul(t1, s1), mul_l(_one(t2), bar(s2)) + mul_l(_one(s2), bar(t2))
            ).scale(w)
            acc = acc + tensor_product(
                mul_l(_one(t1), bar(s2)), mul(t2, s1) + mul_l(_one(s1), bar(t2))
            ).scale(w)
    return acc


def _rhs_copan_perm(ops, u, v):
    mul, cop = ops["mul"], ops["pan-comul"]
    acc = LinComb()
    if v.degree() == 1:
        acc = tensor_product(_one(u), _one(v))
    for c, u1, u2 in _sweedler(cop, u):
        acc = acc + tensor_product(mul(u1, v), _one(u2)).scale(c)
    for c, v1, v2 in _sweedler(cop, v):
        acc = acc + tensor_product(mul(u, v1), _one(v2)).scale(c)
        if v1.degree() == 1:
            acc = acc + tensor_product(mul(u, v2), _one(v1)).scale(c)
    return acc


def _rhs_as_leibniz(ops, u, v):
    cop, br = ops["deconcat"], ops["bracket"]
    eps_v = bracket_unit_word(v)
    acc = tensor_product(_one(u), eps_v)
    for c, u1, u2 in _sweedler(cop, u):
        acc = acc + tensor_product(_one(u1), br(u2, v)).scale(c)
    for c, t in eps_v.apply(cop).terms():
        a, b = t.factors
        acc = acc + tensor_product(concat(u, a), _one(b)).scale(c)
    return acc


def _rhs_as_poisson_bracket(ops, u, v):
    cop = ops["deconcat"]
    acc = tensor_product(_one(u), _one(v)) - tensor_product(_one(v), _one(u))
    for c, u1, u2 in _sweedler(cop, u):
        acc = acc + tensor_product(_one(u1), concat(u2, v)).scale(c)
        acc = acc - tensor_product(concat(v, u1), _one(u2)).scale(c)
    for c, v1, v2 in _sweedler(cop, v):
        acc = acc + tensor_product(concat(u, v1), _one(v2)).scale(c)
        acc = acc - tensor_product(_one(v1), concat(v2, u)).scale(c)
    return acc


def _rhs_as_poisson_shuffle(ops, u, v):
    return _hopf7(ops["shuffle"], ops["deconcat"], u, v)


def _rhs_zinbiel_leibniz(ops, u, v):
    """No v-splitting terms: mixed splits cancel in alternating binomial sums."""
    cop, br = ops["cohalfshuffle"], ops["bracket"]
    acc = tensor_product(_one(u), bracket_unit_word(v))
    for c, u1, u2 in _sweedler(cop, u):
        acc = acc + (
            tensor_product(_one(u1), br(u2, v)) + tensor_product(br(u1, v), _one(u2))
        ).scale(c)
    return acc


def _rhs_dipt_prec(ops, u, v):
    """The left comb peels from the top: v sheds star-factors from the right,
    and once only u's grafting node is left, u itself peels."""
    star, prec = ops["star"], ops["prec"]
    coprec, costar = ops["coprec"], ops["costar"]
    acc = tensor_product(_one(u), _one(v))
    for c, u1, u2 in _sweedler(coprec, u):
        acc = acc + tensor_product(_one(u1), star(u2, v)).scale(c)
    for c, v1, v2 in _sweedler(costar, v):
        acc = acc + tensor_product(prec(u, v1), _one(v2)).scale(c)
    return acc


# ---------------------------------------------------------------------------
# the catalogue
# ---------------------------------------------------------------------------

ALL_ARGS = "all-args"
PRIMITIVE_ARGS = "primitive-args"


@dataclass(frozen=True)
class SubLaw:
    """One (coproduct symbol, product symbol) rewrite within a catalogue entry."""

    cop: str
    mul: str
    arity: int
    rhs: object


@dataclass(frozen=True)
class LawEntry:
    """A catalogued compatibility law.

    ``models`` maps a model name to (ops table, acceptance bound); the ops
    table resolves every symbol the sub-laws mention plus ``enum`` for the
    basis.  The first model is the default.
    """

    name: str
    algebra: str
    coalgebra: str
    scope: str
    models: tuple
    sub_laws: tuple
    note: str = ""

    def model_names(self):
        return [name for name, _, _ in self.models]

    def model(self, name=None):
        if name is None:
            name = self.models[0][0]
        for model_name, ops, bound in self.models:
            if model_name == name:
                return model_name, ops, bound
        raise KeyError(
            "law %r has no model %r (have: %s)"
            % (self.name, name, ", ".join(self.model_names()))
        )


def _entry(name, algebra, coalgebra, scope, models, sub_laws, note=""):
    return LawEntry(
        name=name,
        algebra=algebra,
        coalgebra=coalgebra,
        scope=scope,
        models=tuple(models),
        sub_laws=tuple(sub_laws),
        note=note,
    )


_WORD_OPS = {
    "enum": enumerate_words,
    "concat": concat,
    "deconcat": deconcat,
    "shuffle": shuffle_mul,
    "coshuffle": coshuffle,
    "cohalfshuffle": cohalfshuffle,
    "bracket": leibniz_bracket,
}

LAWS = {}


def _register(entry: LawEntry):
    LAWS[entry.name] = entry
    return entry


_register(
    _entry(
        "hopf-comm",
        "comm",
        "comm",
        ALL_ARGS,
        [("set", {"enum": enumerate_sets, "mul": comm_mul, "comul": comm_comul}, 6)],
        [SubLaw("comul", "mul", 2, _rhs_hopf_comm)],
    )
)

_register(
    _entry(
        "nui-as",
        "as",
        "as",
        ALL_ARGS,
        [("word", _WORD_OPS, 6)],
        [SubLaw("deconcat", "concat", 2, _nui_rhs("deconcat", "concat"))],
    )
)

_register(
    _entry(
        "semihopf-as-zinbiel",
        "as",
        "zinbiel",
        ALL_ARGS,
        [("word", _WORD_OPS, 6)],
        [SubLaw("cohalfshuffle", "concat", 2, _rhs_semihopf)],
    )
)

_register(
    _entry(
        "mag",
        "mag",
        "mag",
        ALL_ARGS,
        [("planar", {"enum": get_operad("mag").enumerate, "graft": mag_graft, "cograft": mag_cograft}, 6)],
        [SubLaw("cograft", "graft", 2, _pair_rhs)],
    )
)

_maginf_ops = {"enum": enumerate_prec_trees}
for _k in range(2, MAGINF_MAX_ARITY + 1):
    _maginf_ops["graft%d" % _k] = maginf_graft(_k)
    _maginf_ops["cograft%d" % _k] = maginf_cograft(_k)

_register(
    _entry(
        "maginf",
        "maginf",
        "maginf",
        ALL_ARGS,
        [("planar", _maginf_ops, 6)],
        [
            SubLaw("cograft%d" % m, "graft%d" % k, k, _maginf_rhs(m, k))
            for m in range(2, MAGINF_MAX_ARITY + 1)
            for k in range(2, MAGINF_MAX_ARITY + 1)
        ],
        note="matching arities deconcatenate exactly; mismatched arities vanish",
    )
)

_register(
    _entry(
        "livernet-nap-coprelie",
        "nap",
        "prelie",
        ALL_ARGS,
        [
            ("tree", {"enum": enumerate_trees, "graft": nap_graft, "cograft": prelie_cograft}, 6),
            (
                "hypertree",
                {"enum": enumerate_hypertrees, "graft": ht_graft_nap, "cograft": ht_cograft_prelie},
                5,
            ),
        ],
        [SubLaw("cograft", "graft", 2, _rhs_livernet)],
    )
)

_register(
    _entry(
        "prelie",
        "prelie",
        "prelie",
        ALL_ARGS,
        [
            ("tree", {"enum": enumerate_trees, "graft": prelie_graft, "cograft": prelie_cograft}, 6),
            (
                "hypertree",
                {"enum": enumerate_hypertrees, "graft": ht_graft_prelie, "cograft": ht_cograft_prelie},
                5,
            ),
        ],
        [SubLaw("cograft", "graft", 2, _rhs_prelie)],
    )
)

_register(
    _entry(
        "nap",
        "nap",
        "nap",
        ALL_ARGS,
        [
            ("tree", {"enum": enumerate_trees, "graft": nap_graft, "cograft": nap_cograft}, 6),
            (
                "hypertree",
                {"enum": enumerate_hypertrees, "graft": ht_graft_nap, "cograft": ht_cograft_nap},
                5,
            ),
        ],
        [SubLaw("cograft", "graft", 2, _rhs_nap)],
    )
)

_register(
    _entry(
        "pan",
        "pan",
        "pan",
        ALL_ARGS,
        [("pointed", {"enum": enumerate_pointed, "mul": pan_mul, "comul": pan_comul}, 6)],
        [SubLaw("comul", "mul", 2, _rhs_pan)],
    )
)

_register(
    _entry(
        "perm",
        "perm",
        "perm",
        PRIMITIVE_ARGS,
        [("pointed", {"enum": enumerate_pointed, "mul": perm_mul, "comul": perm_comul}, 6)],
        [SubLaw("comul", "mul", 2, _rhs_perm)],
        note="the printed seven-term rewrite extends to composite arguments "
        "exactly when the left factor is a generator or the right factor has "
        "degree <= 2; the first failure is at bidegree (2,3), where a "
        "repointing of the right factor's point-carrying Sweedler leg is "
        "missing (see test_laws for the frozen counterexample)",
    )
)

_register(
    _entry(
        "copan-perm",
        "perm",
        "pan",
        PRIMITIVE_ARGS,
        [("pointed", {"enum": enumerate_pointed, "mul": perm_mul, "pan-comul": pan_comul}, 6)],
        [SubLaw("pan-comul", "mul", 2, _rhs_copan_perm)],
        note="the rewrite misses the point-removal split once the right "
        "argument has degree 3, so it is only claimed on generators",
    )
)

_register(
    _entry(
        "as-leibniz",
        "leibniz",
        "as",
        ALL_ARGS,
        [("word", _WORD_OPS, 6)],
        [SubLaw("deconcat", "bracket", 2, _rhs_as_leibniz)],
    )
)

_register(
    _entry(
        "as-poisson",
        "poisson",
        "as",
        ALL_ARGS,
        [("word", dict(_WORD_OPS, **{"poisson-bracket": poisson_bracket}), 6)],
        [
            SubLaw("deconcat", "shuffle", 2, _rhs_as_poisson_shuffle),
            SubLaw("deconcat", "poisson-bracket", 2, _rhs_as_poisson_bracket),
        ],
    )
)

_register(
    _entry(
        "zinbiel-leibniz",
        "leibniz",
        "zinbiel",
        ALL_ARGS,
        [("word", _WORD_OPS, 6)],
        [SubLaw("cohalfshuffle", "bracket", 2, _rhs_zinbiel_leibniz)],
    )
)

_register(
    _entry(
        "twoas",
        "twoas",
        "twoas",
        ALL_ARGS,
        [
            (
                "planar",
                {
                    "enum": enumerate_alt_trees,
                    "star": twoas_star,
                    "dot": twoas_dot,
                    "costar": twoas_costar,
                    "codot": twoas_codot,
                },
                5,
            )
        ],
        [
            SubLaw("costar", "star", 2, _nui_rhs("costar", "star")),
            SubLaw("costar", "dot", 2, _zero_rhs),
            SubLaw("codot", "star", 2, _zero_rhs),
            SubLaw("codot", "dot", 2, _nui_rhs("codot", "dot")),
        ],
    )
)

_register(
    _entry(
        "dipt",
        "dipt",
        "dipt",
        ALL_ARGS,
        [
            (
                "planar",
                {
                    "enum": enumerate_tree_words,
                    "star": dipt_star,
                    "prec": dipt_prec,
                    "costar": dipt_costar,
                    "coprec": dipt_coprec,
                },
                5,
            )
        ],
        [
            SubLaw("costar", "star", 2, _nui_rhs("costar", "star")),
            SubLaw("costar", "prec", 2, _zero_rhs),
            SubLaw("coprec", "star", 2, _zero_rhs),
            SubLaw("coprec", "prec", 2, _rhs_dipt_prec),
        ],
    )
)


def law_ids():
    return list(LAWS)


def get_law(name: str) -> LawEntry:
    if name not in LAWS:
        raise KeyError("unknown law %r (known: %s)" % (name, ", ".join(LAWS)))
    return LAWS[name]


def law_rhs(name: str, cop: str, mul: str, args, model=None) -> LinComb:
    """Evaluate one sub-law's right-hand side on basis arguments."""
    entry = get_law(name)
    _, ops, _ = entry.model(model)
    for sub in entry.sub_laws:
        if sub.cop == cop and sub.mul == mul:
            if len(args) != sub.arity:
                raise ValueError("%s/%s expects %d arguments" % (cop, mul, sub.arity))
            if entry.scope == PRIMITIVE_ARGS and any(a.degree() != 1 for a in args):
                raise ValueError("law %r is only stated on degree-1 arguments" % name)
            return sub.rhs(ops, *args)
    raise ValueError("law %r has no sub-law (%s, %s)" % (name, cop, mul))


# ---------------------------------------------------------------------------
# the checker
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LawReport:
    law: str
    model: str
    scope: str
    bound: int
    checked: int
    ok: bool
    counterexample: str = None

    def to_json(self):
        return {
            "law": self.law,
            "model": self.model,
            "scope": self.scope,
            "bound": self.bound,
            "checked": self.checked,
            "ok": self.ok,
            "counterexample": self.counterexample,
        }


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _arg_tuples(enum, arity, total):
    for parts in _compositions(total, arity):
        blocks = []
        start = 1
        for p in parts:
            blocks.append(tuple(range(start, start + p)))
            start += p
        for combo in itertools.product(*(enum(b) for b in blocks)):
            yield combo


def _format_counterexample(sub: SubLaw, args, diff: LinComb) -> str:
    arg_text = ", ".join(a.to_text() for a in args)
    return "%s of %s(%s): lhs - rhs = %s" % (sub.cop, sub.mul, arg_text, diff.to_text())


def _run_chunk(law: str, model: str, sub_index: int, total: int, inject_fault: bool):
    """Check one (sub-law, total degree) slice; returns (count, counterexample)."""
    entry = get_law(law)
    _, ops, _ = entry.model(model)
    sub = entry.sub_laws[sub_index]
    cop, mul = ops[sub.cop], ops[sub.mul]
    checked = 0
    for args in _arg_tuples(ops["enum"], sub.arity, total):
        lhs = mul(*args).apply(cop)
        rhs = sub.rhs(ops, *args)
        if inject_fault:
            rhs = rhs - _one(Tensor(args))
        checked += 1
        if lhs != rhs:
            return checked, _format_counterexample(sub, args, lhs - rhs)
    return checked, None


def check_law(
    name: str, bound: int = None, model: str = None, jobs: int = 1, inject_fault: bool = False
) -> LawReport:
    """Compare the stored right-hand side of every sub-law against the free
    model over all argument tuples within the degree bound (or over tuples of
    generators only, for primitive-scope entries)."""
    entry = get_law(name)
    model_name, _, default_bound = entry.model(model)
    if bound is None:
        bound = default_bound
    tasks = []
    for i, sub in enumerate(entry.sub_laws):
        if entry.scope == PRIMITIVE_ARGS:
            totals = [sub.arity]
        else:
            totals = range(sub.arity, bound + 1)
        for total in totals:
            tasks.append((i, total))
    checked, counterexample = 0, None
    if jobs and jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(
                pool.map(
                    _run_chunk,
                    *zip(*[(name, model_name, i, total, inject_fault) for i, total in tasks]),
                )
            )
        for count, cex in results:
            checked += count
            if cex is not None and counterexample is None:
                counterexample = cex
    else:
        for i, total in tasks:
            count, cex = _run_chunk(name, model_name, i, total, inject_fault)
            checked += count
            if cex is not None:
                counterexample = cex
                break
    return LawReport(
        law=name,
        model=model_name,
        scope=entry.scope,
        bound=bound,
        checked=checked,
        ok=counterexample is None,
        counterexample=counterexample,
    )


def check_all_laws(bound: int = None, jobs: int = 1):
    """Run every catalogue entry on every model; list of reports."""
    reports = []
    for name, entry in LAWS.items():
        for model_name in entry.model_names():
            reports.append(check_law(name, bound=bound, model=model_name, jobs=jobs))
    return reports


# ---------------------------------------------------------------------------
# symmetric-basis compatibility (equivariance of the dual cooperations)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BasisReport:
    operad: str
    max_arity: int
    checked: int
    ok: bool
    counterexample: str = None

    def to_json(self):
        return {
            "operad": self.operad,
            "max_arity": self.max_arity,
            "checked": self.checked,
            "ok": self.ok,
            "counterexample": self.counterexample,
        }


def _apply_operation(operad, a, relabel_map):
    """The basis operation ``a`` evaluated on the generators p_{m(1)},...  For
    unit-compose operads this is a relabelling; otherwise a real composition."""
    if operad.unit_compose:
        return _one(a.relabel(relabel_map))
    args = {i: singleton(operad, relabel_map[i]) for i in a.labels()}
    return operad.compose_basis(a, args)


def check_compatible_basis(operad, max_arity: int) -> BasisReport:
    """Verify that products and dual cooperations commute with the
    symmetric-group action.

    For every cooperation index ``b``, operation ``a``, and permutation
    ``sigma``, the cooperation applied to the sigma-permuted operation must
    equal the sigma-inverse-acted cooperation applied to the unpermuted one,
    where acting on a cooperation relabels its index, permutes its output
    legs, and renames the output generators along sigma.  Both sides travel
    through independent code paths (argument side vs index side), so any
    non-equivariant product, composition, or matching rule breaks the
    equality."""
    if isinstance(operad, str):
        operad = get_operad(operad)
    assert operad.symmetric and operad.operadic, "needs a symmetric operad"
    checked = 0
    for n in range(2, max_arity + 1):
        labels = tuple(range(1, n + 1))
        basis = operad.basis(labels)
        dual = {
            b: {x: nary_dual_coproduct(operad, b, x) for x in basis} for b in basis
        }
        identity = {i: i for i in labels}
        composed = {a: _apply_operation(operad, a, identity) for a in basis}
        applied = {}

        def base_applied(a, nu):
            # the unpermuted side only depends on (operation, index); cache it
            # across the sigma loop
            key = (a, nu)
            if key not in applied:
                applied[key] = composed[a].apply(lambda x: dual[nu][x])
            return applied[key]
        if operad.unit_compose:
            inv = None
        else:
            # When composition genuinely expands (bracket/product composites in
            # the word picture), the permuted index comes back expressed in the
            # carrier basis and must be converted to operation-basis
            # coefficients; invert the change of basis once per arity.
            d = len(basis)
            aug = [
                [composed[b].coeff(x) for b in basis]
                + [ONE if j == i else Fraction(0) for j in range(d)]
                for i, x in enumerate(basis)
            ]
            m, pivots = rref(aug)
            assert list(pivots) == list(range(d)), "operation images are dependent"
            inv = [row[d:] for row in m]
        for sigma in perm_maps(labels):
            inverse = {v: k for k, v in sigma.items()}
            # act on the cooperation index through the module action: a plain
            # carrier relabel would miss sign or mixing in the basis
            index_terms = {}
            for b in basis:
                twisted = _apply_operation(operad, b, inverse)
                if inv is None:
                    index_terms[b] = list(twisted.terms())
                else:
                    vec = [twisted.coeff(x) for x in basis]
                    index_terms[b] = [
                        (c, basis[j])
                        for j, row in enumerate(inv)
                        if (c := sum(row[i] * vec[i] for i in range(len(vec))))
                    ]
            for a in basis:
                image = _apply_operation(operad, a, sigma)
                for b in basis:
                    lhs = image.apply(lambda x, _b=b: dual[_b][x])
                    rhs0 = LinComb()
                    for cv, nu in index_terms[b]:
                        rhs0 = rhs0 + base_applied(a, nu).scale(cv)
                    rhs = rhs0.map_basis(
                        lambda t: t.permute(inverse).map(lambda f: f.relabel(sigma))
                    )
                    checked += 1
                    if lhs != rhs:
                        return BasisReport(
                            operad=operad.name,
                            max_arity=max_arity,
                            checked=checked,
                            ok=False,
                            counterexample="operation %s, cooperation %s, sigma %s"
                            % (a.to_text(), b.to_text(), sigma),
                        )
    return BasisReport(operad=operad.name, max_arity=max_arity, checked=checked, ok=True)
