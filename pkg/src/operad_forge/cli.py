"""Batch command-line surface.

Verbs cover the whole library: ``eval`` and ``coprod`` run single products and
coproducts on parsed basis elements, ``idem`` applies the inductive projection,
``check-law`` / ``check-basis`` run the verification suites, ``dims`` prints
free-algebra dimensions, ``primitives`` extracts coproduct kernels,
``roundtrip`` runs the freeness audit, and ``st-demo`` emits the surjection
non-generation certificate.

Exit codes: 0 on success (including demos whose verdict is negative), 1 when a
verification verb finds a violation, 2 on parse or usage errors.  All output is
deterministic — reports carry no timestamps and JSON keys are sorted; the JSON
layout is versioned by the top-level ``schema`` field.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .freealg import DegreeBoundError, FreeAlgebra
from .grammar import ParseError, parse
from .idempotents import (
    extract_primitives,
    inductive_idempotent,
    labeled_graded_model,
    orbit_plan,
    rigidity_roundtrip,
)
from .laws import LAWS, check_compatible_basis, check_law
from .operads import OPERADS, get_operad
from .solomon_tits import (
    nongeneration_certificate,
    phi_symmetrization_rank,
    surjection_model,
    surjections,
)

SCHEMA = "operad-forge/report@1"

_GENERATOR_NAMES = ("g", "h", "k", "m", "p", "q", "u", "v")


class ValidationError(ValueError):
    """The text parsed but the element is structurally invalid."""


def parse_element(kind: str, text: str):
    """Parse one basis element, converting invariant failures into a
    :class:`ValidationError` that names the reason."""
    try:
        return parse(text, kind)
    except ParseError:
        raise
    except AssertionError as exc:
        raise ValidationError("invalid %s %r: %s" % (kind, text, exc)) from exc


def _emit(args, payload: dict, text_lines) -> None:
    if args.format == "json":
        print(json.dumps(dict(payload, schema=SCHEMA), sort_keys=True, indent=2))
    else:
        for line in text_lines:
            print(line)


# ---------------------------------------------------------------------------
# verb handlers (each returns the exit code)
# ---------------------------------------------------------------------------


def _cmd_eval(args) -> int:
    operad = get_operad(args.operad)
    sym = args.product or operad.generator_pair[0]
    if sym not in operad.products:
        raise ValidationError(
            "operad %s has no product %r (has: %s)"
            % (operad.name, sym, ", ".join(operad.products))
        )
    arity, fn = operad.products[sym]
    if len(args.elements) != arity:
        raise ValidationError(
            "product %s takes %d arguments, got %d" % (sym, arity, len(args.elements))
        )
    elems = [parse_element(operad.kind, t) for t in args.elements]
    result = fn(*elems)
    _emit(
        args,
        {
            "verb": "eval",
            "operad": operad.name,
            "product": sym,
            "arguments": [e.to_text() for e in elems],
            "result": result.to_text(),
        },
        [result.to_text()],
    )
    return 0


def _cmd_coprod(args) -> int:
    operad = get_operad(args.operad)
    sym = args.cooperation or operad.generator_pair[1]
    if sym not in operad.coproducts:
        raise ValidationError(
            "operad %s has no coproduct %r (has: %s)"
            % (operad.name, sym, ", ".join(operad.coproducts))
        )
    _, fn = operad.coproducts[sym]
    elem = parse_element(operad.kind, args.element)
    result = fn(elem)
    _emit(
        args,
        {
            "verb": "coprod",
            "operad": operad.name,
            "cooperation": sym,
            "argument": elem.to_text(),
            "result": result.to_text(),
        },
        [result.to_text()],
    )
    return 0


def _cmd_idem(args) -> int:
    operad = get_operad(args.operad)
    elem = parse_element(operad.kind, args.element)
    labels = sorted(elem.labels())
    names = tuple(str(l) for l in labels)
    bound = args.degree or len(labels)
    algebra = FreeAlgebra(operad, names, bound)
    x = algebra.evaluate(elem, [algebra.gen(n) for n in names])
    plan = orbit_plan(operad, bound)
    image = inductive_idempotent(plan, x)
    _emit(
        args,
        {
            "verb": "idem",
            "operad": operad.name,
            "argument": elem.to_text(),
            "result": image.to_text(),
        },
        [image.to_text()],
    )
    return 0


def _cmd_check_law(args) -> int:
    if args.law:
        names = [args.law]
    else:
        names = list(LAWS)
    reports = []
    for name in names:
        entry = LAWS.get(name)
        if entry is None:
            raise ValidationError(
                "unknown law %r (known: %s)" % (name, ", ".join(LAWS))
            )
        for model in entry.model_names():
            reports.append(
                check_law(
                    name,
                    bound=args.bound,
                    model=model,
                    jobs=args.jobs,
                    inject_fault=args.inject_fault,
                )
            )
    lines = []
    for r in reports:
        status = "PASS" if r.ok else "FAIL"
        line = "%s  law=%s model=%s scope=%s bound=%d checked=%d" % (
            status, r.law, r.model, r.scope, r.bound, r.checked,
        )
        if not r.ok:
            line += "  counterexample: %s" % r.counterexample
        lines.append(line)
    _emit(args, {"verb": "check-law", "reports": [r.to_json() for r in reports]}, lines)
    return 0 if all(r.ok for r in reports) else 1


def _cmd_check_basis(args) -> int:
    if args.operad:
        names = [args.operad]
    else:
        names = [n for n, op in OPERADS.items() if op.symmetric and op.operadic]
    reports = [check_compatible_basis(get_operad(n), args.bound) for n in names]
    lines = []
    for r in reports:
        status = "PASS" if r.ok else "FAIL"
        line = "%s  operad=%s max_arity=%d checked=%d" % (
            status, r.operad, r.max_arity, r.checked,
        )
        if not r.ok:
            line += "  counterexample: %s" % r.counterexample
        lines.append(line)
    _emit(
        args, {"verb": "check-basis", "reports": [r.to_json() for r in reports]}, lines
    )
    return 0 if all(r.ok for r in reports) else 1


def _cmd_dims(args) -> int:
    if args.operad in ("st", "solomon-tits"):
        name = "solomon-tits"
        dims = [len(surjections(d)) for d in range(1, args.max + 1)]
    else:
        operad = get_operad(args.operad)
        name = operad.name
        dims = [
            len(list(operad.basis(range(1, d + 1)))) for d in range(1, args.max + 1)
        ]
    _emit(
        args,
        {"verb": "dims", "operad": name, "max_degree": args.max, "dims": dims},
        [" ".join(str(d) for d in dims)],
    )
    return 0


def _cmd_primitives(args) -> int:
    if args.operad in ("st", "solomon-tits"):
        model = surjection_model()
    else:
        model = labeled_graded_model(get_operad(args.operad))
    prims = extract_primitives(model, args.degree)
    lines = []
    rendered = {}
    for d in range(1, args.degree + 1):
        vectors = prims[d]
        lines.append("degree %d: dim %d" % (d, len(vectors)))
        rendered[str(d)] = [v.to_text() for v in vectors]
        for v in vectors:
            lines.append("  " + v.to_text())
    _emit(
        args,
        {
            "verb": "primitives",
            "model": model.name,
            "degree": args.degree,
            "primitive_dims": {str(d): len(prims[d]) for d in prims},
            "primitives": rendered,
        },
        lines,
    )
    return 0


def _cmd_roundtrip(args) -> int:
    if args.gens > len(_GENERATOR_NAMES):
        raise ValidationError("at most %d generators" % len(_GENERATOR_NAMES))
    names = _GENERATOR_NAMES[: args.gens]
    report = rigidity_roundtrip(args.operad, names, args.degree)
    lines = [
        "%s  operad=%s generators=%d degree=%d"
        % ("PASS" if report.ok else "FAIL", report.operad, args.gens, args.degree),
        "dims:             %s" % (list(report.dims),),
        "generated ranks:  %s" % (list(report.generated_ranks),),
        "primitive counts: %s" % (list(report.primitive_counts),),
        "projection ok:    %s" % report.projection_ok,
    ]
    if not report.ok:
        lines.append("failure: %s" % report.failure)
    _emit(args, {"verb": "roundtrip", "report": report.to_json()}, lines)
    return 0 if report.ok else 1


def _cmd_st_demo(args) -> int:
    target = parse_element("surjection", args.target)
    bound = args.bound or target.degree()
    report = nongeneration_certificate(target, bound)
    rank, dim = phi_symmetrization_rank(2)
    verdict = "GENERATED" if report.generated else "NOT-GENERATED"
    lines = [
        "target %s: %s" % (report.target, verdict),
        "ambient dims:   %s" % report.ambient_dims,
        "primitive dims: %s" % report.primitive_dims,
        "generated dims: %s" % report.generated_dims,
        "phi rank on length-2 words: %d of %d" % (rank, dim),
    ]
    if report.witness is not None:
        lines.append(
            "witness functional: "
            + "  ".join("%s:%s" % (k, v) for k, v in sorted(report.witness.items()))
        )
    _emit(
        args,
        {
            "verb": "st-demo",
            "verdict": verdict,
            "certificate": report.to_json(),
            "bases": {
                str(d): [s.to_text() for s in surjections(d)]
                for d in range(1, bound + 1)
            },
            "phi_rank": {"rank": rank, "dim": dim},
        },
        lines,
    )
    return 0 if report.ok else 1


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _default_jobs() -> int:
    raw = os.environ.get("OPERAD_FORGE_JOBS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )
    common.add_argument(
        "--seed", type=int, default=0,
        help="seed for sampled checks (reports are exhaustive and ignore it)",
    )
    common.add_argument(
        "--jobs", type=int, default=_default_jobs(),
        help="worker processes for the verification verbs "
        "(default: env OPERAD_FORGE_JOBS or 1)",
    )

    parser = argparse.ArgumentParser(
        prog="operad-forge",
        description="exact computations in operadic bialgebras",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("eval", parents=[common], help="apply a product")
    p.add_argument("--operad", required=True, choices=sorted(OPERADS))
    p.add_argument("--product", help="product symbol (default: the generator product)")
    p.add_argument("elements", nargs="+", help="basis elements in the text grammar")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("coprod", parents=[common], help="apply a coproduct")
    p.add_argument("--operad", required=True, choices=sorted(OPERADS))
    p.add_argument("--cooperation", help="coproduct symbol (default: generator pair)")
    p.add_argument("element")
    p.set_defaults(func=_cmd_coprod)

    p = sub.add_parser(
        "idem", parents=[common], help="apply the inductive idempotent projection"
    )
    p.add_argument("--operad", required=True, choices=sorted(OPERADS))
    p.add_argument("--degree", type=int, help="plan bound (default: element degree)")
    p.add_argument("element")
    p.set_defaults(func=_cmd_idem)

    p = sub.add_parser("check-law", parents=[common], help="verify catalogued laws")
    p.add_argument("--law", help="law id (default: the whole catalogue)")
    p.add_argument("--bound", type=int, help="max total arity (default: per entry)")
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=_cmd_check_law)

    p = sub.add_parser(
        "check-basis", parents=[common],
        help="verify products/cooperations against the symmetric action",
    )
    p.add_argument("--operad", help="operad id (default: all symmetric operads)")
    p.add_argument("--bound", type=int, default=3, help="max arity (default 3)")
    p.set_defaults(func=_cmd_check_basis)

    p = sub.add_parser(
        "dims", parents=[common], help="labeled basis dimensions per arity"
    )
    p.add_argument(
        "--operad", required=True,
        choices=sorted(OPERADS) + ["solomon-tits", "st"],
    )
    p.add_argument("--max", type=int, required=True, help="max arity")
    p.set_defaults(func=_cmd_dims)

    p = sub.add_parser(
        "primitives", parents=[common], help="exact coproduct kernels per degree"
    )
    p.add_argument(
        "--operad", required=True,
        choices=sorted(OPERADS) + ["solomon-tits", "st"],
    )
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(func=_cmd_primitives)

    p = sub.add_parser(
        "roundtrip", parents=[common], help="freeness audit for a free algebra"
    )
    p.add_argument("--operad", required=True, choices=sorted(OPERADS))
    p.add_argument("--gens", type=int, default=2, help="number of generators")
    p.add_argument("--degree", type=int, default=4, help="degree bound")
    p.set_defaults(func=_cmd_roundtrip)

    p = sub.add_parser(
        "st-demo", parents=[common],
        help="surjection-algebra generation certificate",
    )
    p.add_argument("--target", default="(1,1,2)", help="surjection to test")
    p.add_argument("--bound", type=int, help="degree bound (default: target degree)")
    p.set_defaults(func=_cmd_st_demo)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse uses 2 for usage errors, 0 for --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ParseError, ValidationError, DegreeBoundError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except (KeyError, AssertionError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
