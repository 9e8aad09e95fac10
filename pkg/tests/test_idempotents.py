"""Idempotent projections onto primitives, two ways, and the rigidity
round-trip they certify.

Core claims:
 * the orbit-stage inductive projection fixes generators and kills decomposables;
 * the convolution-series projection agrees with it wherever both are defined;
 * the NAP partial-sum truncations are NOT the projection (the boundary witness
   survives), so agreement there is a structured discrepancy by design;
 * projecting a free PreLie algebra recovers exactly its generators, and
   generator products regenerate every graded piece.
"""

import pytest

from operad_forge import (
    FreeAlgebra,
    LinComb,
    dn_operator,
    extract_primitives,
    free_graded_model,
    get_operad,
    inductive_idempotent,
    labeled_graded_model,
    nap_partial_sum_report,
    orbit_plan,
    parse,
    rigidity_roundtrip,
    series_idempotent,
    series_report,
)


@pytest.fixture(scope="module")
def prelie_setup():
    op = get_operad("prelie")
    alg = FreeAlgebra(op, ("g", "h"), 4)
    return op, alg, orbit_plan(op, 4)


def test_projection_fixes_generators(prelie_setup):
    op, alg, plan = prelie_setup
    for name in ("g", "h"):
        x = alg.gen(name)
        assert inductive_idempotent(plan, x).to_text() == name


def test_projection_kills_products(prelie_setup):
    op, alg, plan = prelie_setup
    g, h = alg.gen("g"), alg.gen("h")
    gh = alg.product("graft", g, h)
    assert inductive_idempotent(plan, gh).is_zero()
    ghh = alg.product("graft", gh, h)
    assert inductive_idempotent(plan, ghh).is_zero()


def test_projection_is_idempotent_on_degree_3(prelie_setup):
    op, alg, plan = prelie_setup
    for b in alg.basis(3):
        x = alg.element(LinComb.single(b))
        once = inductive_idempotent(plan, x)
        twice = inductive_idempotent(plan, once)
        assert once.comb == twice.comb


def test_projection_output_is_primitive(prelie_setup):
    op, alg, plan = prelie_setup
    for b in alg.basis(3):
        x = alg.element(LinComb.single(b))
        ex = inductive_idempotent(plan, x)
        assert alg.free_coproduct("cograft", ex).is_zero()


def test_associative_words_project_to_zero():
    op = get_operad("as")
    alg = FreeAlgebra(op, ("a", "b"), 4)
    plan = orbit_plan(op, 4)
    ab = alg.product("concat", alg.gen("a"), alg.gen("b"))
    assert inductive_idempotent(plan, ab).is_zero()
    assert inductive_idempotent(plan, alg.gen("a")).to_text() == "[a]"


def test_plan_covers_bound_degrees(prelie_setup):
    op, alg, plan = prelie_setup
    assert plan.degree_bound == 4
    assert sorted(plan.stages) == [2, 3, 4]


# -- D_n operators -------------------------------------------------------------


def test_d1_is_identity():
    op = get_operad("pan")
    alg = FreeAlgebra(op, ("g", "h", "k"), 4)
    x = alg.element(LinComb.single(parse("{*g,h,k}", "pointed")))
    assert dn_operator(op, 1, x).comb == x.comb


def test_d2_golden_values():
    perm = get_operad("perm")
    algp = FreeAlgebra(perm, ("g", "h"), 4)
    s = algp.element(LinComb.single(parse("{*g,h}", "pointed")))
    assert dn_operator(perm, 2, s).to_text() == "{*g,h}"
    pan = get_operad("pan")
    algn = FreeAlgebra(pan, ("g", "h", "k"), 4)
    u = algn.element(LinComb.single(parse("{*g,h,k}", "pointed")))
    assert dn_operator(pan, 2, u).to_text() == "2*{*g,h,k}"


# -- series form ----------------------------------------------------------------


def test_series_kills_decomposables():
    nap = get_operad("nap")
    alg = FreeAlgebra(nap, ("g", "h"), 4)
    gh = alg.product("graft", alg.gen("g"), alg.gen("h"))
    assert series_idempotent("nap", gh).is_zero()
    perm = get_operad("perm")
    algp = FreeAlgebra(perm, ("g", "h"), 4)
    s = algp.element(LinComb.single(parse("{*g,h}", "pointed")))
    assert series_idempotent("perm", s).is_zero()
    assert series_idempotent("perm", algp.gen("g")).to_text() == "{*g}"


@pytest.mark.parametrize("kind", ["perm", "nap", "pan"])
def test_series_agrees_with_inductive(kind):
    report = series_report(kind, degree_bound=4)
    assert report.agree, report.counterexample
    assert report.checked > 0


def test_series_report_rejects_unknown_kind():
    with pytest.raises((KeyError, ValueError, AssertionError)):
        series_report("prelie", degree_bound=3)


# -- NAP partial sums --------------------------------------------------------------


def test_nap_partial_sums_converge_with_boundary_witness():
    report = nap_partial_sum_report(degree_bound=4)
    assert report.ok
    assert report.checked > 0
    # the 2-term truncation is not yet the projection
    assert "survives" in report.boundary


# -- rigidity round-trip -------------------------------------------------------------


def test_prelie_roundtrip_dims_and_generators():
    report = rigidity_roundtrip(get_operad("prelie"), ("g", "h"), 4)
    assert report.ok
    assert report.dims == (2, 4, 14, 52)
    assert report.generated_ranks == (2, 4, 14, 52)
    assert report.primitive_counts == (2, 0, 0, 0)
    assert report.projection_ok
    assert report.failure is None


def test_perm_roundtrip_single_generator():
    report = rigidity_roundtrip(get_operad("perm"), ("g",), 5)
    assert report.ok
    assert report.primitive_counts[0] == 1
    assert all(c == 0 for c in report.primitive_counts[1:])


# -- primitive extraction -----------------------------------------------------------


def test_hypertree_primitive_dims_small():
    model = labeled_graded_model(get_operad("hypertree-prelie"))
    prims = extract_primitives(model, 3)
    assert {n: len(v) for n, v in prims.items()} == {1: 1, 2: 0, 3: 3}
    # degree 3: exactly the single-3-edge hypertrees, one per root choice
    degree3 = sorted(c.to_text() for c in prims[3])
    assert degree3 == [
        "ht(root=1; {1,2,3})",
        "ht(root=2; {1,2,3})",
        "ht(root=3; {1,2,3})",
    ]


def test_free_model_primitives_match_roundtrip():
    model = free_graded_model(get_operad("prelie"), ("g", "h"), 3)
    prims = extract_primitives(model, 3)
    assert {n: len(v) for n, v in prims.items()} == {1: 2, 2: 0, 3: 0}
    assert sorted(c.to_text() for c in prims[1]) == ["g", "h"]
