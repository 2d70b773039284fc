"""Batch command-line interface.

Exit codes: 0 = all checks clean, 1 = a mathematical check failed,
2 = usage or file-format error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Dict, List, Optional

from .algebras import (
    LeibnizAlgebra,
    Representation,
    dual_representation,
    regular_representation,
    semidirect_sum,
)
from .catalog import catalog_names, load_catalog, load_entry
from .checks import CHECK_NAMES, run_check
from .dgla import dual_kn_from_mc, mc_from_dual_kn, theta_twist
from .errors import LeibnizKitError, ParseError
from .fields import FieldSpec, prime_field
from .io import (
    SCHEMA,
    SpecFile,
    algebra_doc,
    kn_doc,
    load_spec,
    matrix_doc,
    operator_doc,
    parse_field,
    representation_doc,
    serialize_spec,
)
from .linalg import Matrix
from .operators import (
    LinearOperator,
    as_operator,
    deformed_bracket,
    lifted_algebra,
    subadjacent_algebra,
)
from .pairs import KNStructure, dual_kn_from_compatible
from .forms import Tensor2, sharp_map
from .search import (
    DEFAULT_BUDGET,
    SearchSpec,
    enumerate_bn_pairs,
    enumerate_operators,
    mc_solutions_from_linear_layer,
    solve_mc_linear_layer,
)
from .suites import SUITES, run_suites, suite_expected_verdicts
from .twilled import TwilledContext

USAGE_ERROR = 2
CHECK_FAILED = 1


def _fail_usage(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return USAGE_ERROR


def _report_payload(report) -> dict:
    return {
        "ok": report.ok,
        "violations": [
            {
                "identity": v.identity,
                "index": list(v.index),
                "lhs": [str(x) for x in v.lhs],
                "rhs": [str(x) for x in v.rhs],
            }
            for v in report.violations
        ],
        "notes": report.notes,
    }


def cmd_check(args) -> int:
    try:
        spec = load_spec(args.file)
    except (OSError, ParseError) as exc:
        return _fail_usage(str(exc))
    extra: Dict[str, str] = {}
    for key in ("rep", "algebra", "other", "K", "N", "S", "R", "ctx"):
        val = getattr(args, key, None)
        if val:
            extra[key] = val
    try:
        report = run_check(spec, args.object, args.check, extra,
                           consequences=not args.no_consequences)
    except ParseError as exc:
        return _fail_usage(str(exc))
    except LeibnizKitError as exc:
        print(f"precondition failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return CHECK_FAILED
    if args.format == "json":
        print(json.dumps(_report_payload(report), sort_keys=True, indent=2))
    else:
        if report.ok:
            print(f"{args.object}: {args.check}: ok")
        else:
            print(f"{args.object}: {args.check}: {report.summary()}")
        for key, val in report.notes.items():
            print(f"  note {key}: {val}")
    return 0 if report.ok else CHECK_FAILED


def _resolve_rep(spec: SpecFile, name: Optional[str], op: Optional[LinearOperator]):
    if name:
        return spec.rep_for(name)
    if op is not None:
        tag = op.domain
        if tag.startswith("module:"):
            return spec.rep_for(tag.split(":", 1)[1])
        if tag.startswith("dual:"):
            return dual_representation(regular_representation(spec.build(tag.split(":", 1)[1])))
        for t in (op.codomain, op.domain):
            if t.startswith("algebra:"):
                return regular_representation(spec.build(t.split(":", 1)[1]))
    names = spec.names_of("representation")
    if len(names) == 1:
        return spec.rep_for(names[0])
    raise ParseError("ambiguous representation; pass --rep")


CONSTRUCTIONS = (
    "dual-rep", "semidirect", "subadjacent", "lifted", "deformed",
    "theta-twist", "dual-kn-from-mc", "mc-from-dual-kn", "sharp",
    "dual-kn-from-compatible",
)


def cmd_construct(args) -> int:
    try:
        spec = load_spec(args.file)
    except (OSError, ParseError) as exc:
        return _fail_usage(str(exc))
    f = spec.fieldspec
    out_objects: Dict[str, dict] = {}

    def need(flag: str) -> str:
        val = getattr(args, flag.replace("-", "_"), None)
        if not val:
            raise ParseError(f"construction {args.construction!r} needs --{flag}")
        return val

    try:
        cons = args.construction
        if cons == "dual-rep":
            rep = spec.rep_for(need("rep"))
            dual = dual_representation(rep)
            alg_name = spec.raw[args.rep]["algebra"]
            out_objects[alg_name] = algebra_doc(f, rep.algebra)
            out_objects["dual_rep"] = representation_doc(f, dual, alg_name)
        elif cons == "semidirect":
            rep = spec.rep_for(need("rep"))
            out_objects["semidirect"] = algebra_doc(f, semidirect_sum(rep))
        elif cons == "subadjacent":
            K = spec.build(need("K"))
            rep = _resolve_rep(spec, args.rep, K)
            pair, alg = subadjacent_algebra(K, rep)
            out_objects["subadjacent"] = algebra_doc(f, alg)
        elif cons == "lifted":
            K = spec.build(need("K"))
            rep = _resolve_rep(spec, args.rep, K)
            out_objects["lifted"] = algebra_doc(f, lifted_algebra(K, rep))
            out_objects["tw_lifted"] = {
                "type": "twilled", "algebra": "lifted",
                "n1": rep.algebra.dim, "n2": rep.mdim,
            }
        elif cons == "deformed":
            N = spec.build(need("N"))
            alg_names = spec.names_of("algebra")
            alg = spec.build(args.algebra) if args.algebra else None
            if alg is None:
                for tag in (N.codomain, N.domain):
                    if tag.startswith("algebra:"):
                        alg = spec.build(tag.split(":", 1)[1])
                        break
            if alg is None and len(alg_names) == 1:
                alg = spec.build(alg_names[0])
            if alg is None:
                raise ParseError("pass --algebra")
            out_objects["deformed"] = algebra_doc(
                f, deformed_bracket(N, alg), verified=deformed_bracket(N, alg).is_leibniz
            )
        elif cons == "theta-twist":
            K = spec.build(need("K"))
            rep = _resolve_rep(spec, args.rep, K)
            theta = spec.build(need("theta")).matrix
            g_theta, rho_theta, total = theta_twist(K, rep, theta)
            out_objects["twisted"] = algebra_doc(f, g_theta)
            out_objects["twisted_action"] = representation_doc(f, rho_theta, "twisted")
            out_objects["twisted_total"] = algebra_doc(f, total)
        elif cons == "dual-kn-from-mc":
            K = spec.build(need("K"))
            rep = _resolve_rep(spec, args.rep, K)
            theta = spec.build(need("theta")).matrix
            kn = dual_kn_from_mc(K, rep, theta)
            out_objects["kn"] = kn_doc(f, kn, "alg", args.rep or "")
        elif cons == "mc-from-dual-kn":
            kn = spec.build(need("kn"))
            if not isinstance(kn, KNStructure):
                raise ParseError(f"{args.kn!r} is not a KN structure")
            rep_name = args.rep or spec.raw[args.kn].get("rep")
            rep = spec.rep_for(rep_name)
            theta = mc_from_dual_kn(kn, rep)
            out_objects["theta"] = matrix_doc(f, theta, "algebra", "module")
        elif cons == "sharp":
            pi = spec.build(need("pi"))
            if not isinstance(pi, Tensor2):
                raise ParseError(f"{args.pi!r} is not a 2-tensor")
            out_objects["sharp"] = operator_doc(f, sharp_map(pi))
        elif cons == "dual-kn-from-compatible":
            K1 = spec.build(need("K1"))
            K2 = spec.build(need("K2"))
            rep = _resolve_rep(spec, args.rep, K1)
            kn1, kn2 = dual_kn_from_compatible(K1, K2, rep)
            out_objects["kn_first"] = kn_doc(f, kn1, "alg", args.rep or "")
            out_objects["kn_second"] = kn_doc(f, kn2, "alg", args.rep or "")
        else:
            return _fail_usage(f"unknown construction {cons!r} "
                               f"(known: {', '.join(CONSTRUCTIONS)})")
    except ParseError as exc:
        return _fail_usage(str(exc))
    except LeibnizKitError as exc:
        print(f"construction failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return CHECK_FAILED
    out = SpecFile(f, out_objects)
    sys.stdout.write(serialize_spec(out))
    return 0


def _transport_algebra(alg: LeibnizAlgebra, f: FieldSpec) -> LeibnizAlgebra:
    return LeibnizAlgebra(
        f, [[[f.of(v) for v in vec] for vec in row] for row in alg.c]
    )


def _transport_rep(rep: Representation, alg: LeibnizAlgebra, f: FieldSpec) -> Representation:
    conv = lambda m: Matrix(f, [[f.of(v) for v in row] for row in m.entries])
    return Representation(alg, [conv(m) for m in rep.rhoL], [conv(m) for m in rep.rhoR])


def cmd_search(args) -> int:
    try:
        spec = load_spec(args.file)
    except (OSError, ParseError) as exc:
        return _fail_usage(str(exc))
    try:
        fieldspec = parse_field(args.field) if args.field else spec.fieldspec
    except ParseError as exc:
        return _fail_usage(str(exc))
    predicate = args.predicate.replace("-", "_")
    try:
        alg_name = args.algebra
        if alg_name is None:
            names = spec.names_of("algebra")
            alg_name = names[0] if len(names) == 1 else "alg"
        algebra = None
        if alg_name in spec.raw:
            algebra = _transport_algebra(spec.build(alg_name), fieldspec)
        rep = None
        if args.rep:
            base = spec.rep_for(args.rep)
            rep = _transport_rep(base, _transport_algebra(base.algebra, fieldspec), fieldspec)
        ctx = None
        if args.ctx:
            built = spec.build(args.ctx)
            if not isinstance(built, TwilledContext):
                return _fail_usage(f"{args.ctx!r} is not a twilled context")
            ctx = TwilledContext(_transport_algebra(built.total, fieldspec),
                                 built.n1, built.n2)
        if predicate == "mc_strong" and ctx is not None:
            shape = (ctx.n2, ctx.n1)
        elif rep is not None:
            shape = (rep.algebra.dim, rep.mdim)
        elif algebra is not None:
            shape = (algebra.dim, algebra.dim)
        else:
            return _fail_usage("no search target (need an algebra, rep or context)")
        if args.shape:
            rows, _, cols = args.shape.partition("x")
            shape = (int(rows), int(cols))
        sspec = SearchSpec(fieldspec, shape, predicate, algebra=algebra, rep=rep,
                           ctx=ctx, budget=args.budget)
        if predicate == "bn_pair":
            pairs = enumerate_bn_pairs(sspec, workers=args.workers)
            payload = {
                "predicate": predicate,
                "field": str(fieldspec),
                "count": len(pairs),
                "results": [
                    {"form": [[fieldspec.format(v) for v in row] for row in b.entries],
                     "operator": [[fieldspec.format(v) for v in row] for row in n.entries]}
                    for b, n in pairs
                ],
            }
        else:
            mats = enumerate_operators(sspec, workers=args.workers)
            payload = {
                "predicate": predicate,
                "field": str(fieldspec),
                "count": len(mats),
                "results": [
                    [[fieldspec.format(v) for v in row] for row in m.entries] for m in mats
                ],
            }
    except ParseError as exc:
        return _fail_usage(str(exc))
    except LeibnizKitError as exc:
        print(f"search failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return CHECK_FAILED
    print(json.dumps(payload, sort_keys=True, indent=2))
    return 0


def cmd_suite(args) -> int:
    try:
        catalog = load_catalog()
    except (OSError, ParseError) as exc:
        return _fail_usage(str(exc))
    names: Optional[List[str]] = None
    if not args.all:
        if not args.names:
            return _fail_usage("pass suite/catalog names or --all")
        names = []
        for name in args.names:
            if name in SUITES:
                names.append(name)
            elif name in catalog:
                pass  # handled below as an entry-restricted verdict run
            else:
                return _fail_usage(
                    f"unknown suite or catalog entry {name!r} "
                    f"(suites: {', '.join(sorted(SUITES))}; entries: {', '.join(catalog_names())})"
                )
    results = []
    if args.all:
        results = run_suites(catalog)
    else:
        suite_names = [n for n in args.names if n in SUITES]
        entry_names = [n for n in args.names if n in catalog and n not in SUITES]
        if suite_names:
            results += run_suites(catalog, suite_names)
        for entry in entry_names:
            results.append(suite_expected_verdicts({entry: catalog[entry]}))
            results[-1].name = f"expected-verdicts[{entry}]"
    ok = all(r.ok for r in results)
    if args.format == "json":
        payload = {
            "ok": ok,
            "suites": {
                r.name: {"passed": r.passed, "failed": len(r.failures),
                         "failures": r.failures}
                for r in results
            },
        }
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        width = max(len(r.name) for r in results) if results else 0
        for r in results:
            status = "PASS" if r.ok else "FAIL"
            print(f"{status}  {r.name:<{width}}  {r.passed} checks"
                  + (f", {len(r.failures)} failures" if r.failures else ""))
            for failure in r.failures[:10]:
                print(f"      - {failure}")
        print(("all suites passed" if ok else "SUITE FAILURES PRESENT"))
    return 0 if ok else CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="leibnizkit",
        description="Exact verification and search for operators on Leibniz algebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="run a named check on a file object")
    p_check.add_argument("file")
    p_check.add_argument("object")
    p_check.add_argument("check", choices=CHECK_NAMES)
    for flag in ("rep", "algebra", "other", "K", "N", "S", "R", "ctx"):
        p_check.add_argument(f"--{flag}")
    p_check.add_argument("--format", choices=("text", "json"), default="text")
    p_check.add_argument("--no-consequences", action="store_true")
    p_check.set_defaults(fn=cmd_check)

    p_cons = sub.add_parser("construct", help="build derived objects and print them")
    p_cons.add_argument("file")
    p_cons.add_argument("construction", choices=CONSTRUCTIONS)
    for flag in ("rep", "algebra", "K", "N", "S", "theta", "kn", "pi", "K1", "K2"):
        p_cons.add_argument(f"--{flag}")
    p_cons.set_defaults(fn=cmd_construct)

    p_search = sub.add_parser("search", help="exhaustively enumerate operators over F_p")
    p_search.add_argument("file")
    p_search.add_argument("--predicate", required=True,
                          choices=("kupershmidt", "nijenhuis", "rota-baxter",
                                   "rota_baxter", "mc-strong", "mc_strong", "bn-pair",
                                   "bn_pair"))
    p_search.add_argument("--field")
    p_search.add_argument("--algebra")
    p_search.add_argument("--rep")
    p_search.add_argument("--ctx")
    p_search.add_argument("--shape")
    p_search.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p_search.add_argument("--workers", type=int, default=1)
    p_search.add_argument("--seed", type=int, default=0)
    p_search.add_argument("--format", choices=("text", "json"), default="json")
    p_search.set_defaults(fn=cmd_search)

    p_suite = sub.add_parser("suite", help="run theorem suites over the bundled catalog")
    p_suite.add_argument("names", nargs="*")
    p_suite.add_argument("--all", action="store_true")
    p_suite.add_argument("--format", choices=("text", "json"), default="text")
    p_suite.add_argument("--no-consequences", action="store_true")
    p_suite.set_defaults(fn=cmd_suite)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors already
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
