"""Name-based check dispatch: resolves objects from a SpecFile and runs the
corresponding verifier.  Used by the CLI and the expected-verdict runner."""

from __future__ import annotations

from typing import Dict, Optional

from .algebras import (
    LeibnizAlgebra,
    Representation,
    check_leibniz,
    check_representation,
    dual_representation,
    regular_representation,
)
from .dgla import check_maurer_cartan
from .errors import ParseError
from .forms import (
    BilinearForm,
    Tensor2,
    check_bn_structure,
    check_quadratic,
    check_rbn_structure,
    check_rn_structure,
    check_ybe,
    rbn_rn_transfer,
)
from .io import SpecFile
from .operators import (
    LinearOperator,
    check_compatible,
    check_kupershmidt,
    check_nijenhuis,
    check_nk_condition,
    check_rota_baxter,
)
from .pairs import (
    KNStructure,
    OperatorPair,
    check_dual_nijenhuis_pair,
    check_kn_structure,
    check_nijenhuis_pair,
    check_perfect_pair,
)
from .reports import CheckReport
from .twilled import TwilledContext

CHECK_NAMES = (
    "leibniz", "representation", "kupershmidt", "nijenhuis", "rota-baxter",
    "compatible", "nk-condition", "nijenhuis-pair", "dual-nijenhuis-pair",
    "perfect-pair", "kn-structure", "maurer-cartan", "maurer-cartan-strong",
    "ybe", "rn-structure", "rbn-structure", "quadratic", "bn-structure",
    "transfer",
)


def _operator(spec: SpecFile, name: str) -> LinearOperator:
    obj = spec.build(name)
    if not isinstance(obj, LinearOperator):
        raise ParseError(f"{name!r} is not an operator")
    return obj


def _resolve_algebra(spec: SpecFile, op: LinearOperator, args: Dict) -> LeibnizAlgebra:
    if "algebra" in args:
        return spec.build(args["algebra"])
    for tag in (op.codomain, op.domain):
        if tag.startswith("algebra:"):
            return spec.build(tag.split(":", 1)[1])
    names = spec.names_of("algebra")
    if len(names) == 1:
        return spec.build(names[0])
    raise ParseError("ambiguous algebra; pass --algebra")


def _resolve_rep(spec: SpecFile, op: Optional[LinearOperator], args: Dict) -> Representation:
    if "rep" in args:
        return spec.rep_for(args["rep"])
    if op is not None:
        tag = op.domain
        if tag.startswith("module:"):
            return spec.rep_for(tag.split(":", 1)[1])
        if tag.startswith("dual:"):
            alg = spec.build(tag.split(":", 1)[1])
            return dual_representation(regular_representation(alg))
    names = spec.names_of("representation")
    if len(names) == 1:
        return spec.rep_for(names[0])
    raise ParseError("ambiguous representation; pass --rep")


def run_check(spec: SpecFile, object_name: str, check: str, args: Optional[Dict] = None,
              consequences: bool = True) -> CheckReport:
    args = dict(args or {})
    if check not in CHECK_NAMES:
        raise ParseError(f"unknown check {check!r} (known: {', '.join(CHECK_NAMES)})")
    obj = spec.build(object_name)

    if check == "leibniz":
        if not isinstance(obj, LeibnizAlgebra):
            raise ParseError(f"{object_name!r} is not an algebra")
        return check_leibniz(obj)
    if check == "representation":
        if not isinstance(obj, Representation):
            raise ParseError(f"{object_name!r} is not a representation")
        return check_representation(obj)
    if check == "kupershmidt":
        op = _operator(spec, object_name)
        return check_kupershmidt(op, _resolve_rep(spec, op, args))
    if check == "nijenhuis":
        op = _operator(spec, object_name)
        return check_nijenhuis(op, _resolve_algebra(spec, op, args))
    if check == "rota-baxter":
        op = _operator(spec, object_name)
        return check_rota_baxter(op, _resolve_algebra(spec, op, args))
    if check == "compatible":
        op = _operator(spec, object_name)
        other = _operator(spec, args["other"])
        return check_compatible(op, other, _resolve_rep(spec, op, args))
    if check == "nk-condition":
        N = _operator(spec, object_name)
        K = _operator(spec, args["K"])
        return check_nk_condition(N, K, _resolve_rep(spec, K, args))
    if check in ("nijenhuis-pair", "dual-nijenhuis-pair", "perfect-pair"):
        N = _operator(spec, object_name)
        S = _operator(spec, args["S"])
        rep = _resolve_rep(spec, None, args)
        pair = OperatorPair(N, S)
        fn = {
            "nijenhuis-pair": check_nijenhuis_pair,
            "dual-nijenhuis-pair": check_dual_nijenhuis_pair,
            "perfect-pair": check_perfect_pair,
        }[check]
        return fn(pair, rep)
    if check == "kn-structure":
        if not isinstance(obj, KNStructure):
            raise ParseError(f"{object_name!r} is not a KN structure")
        rep_name = args.get("rep") or spec.raw[object_name].get("rep")
        if rep_name is None:
            raise ParseError("kn-structure check needs a representation")
        return check_kn_structure(obj, spec.rep_for(rep_name), consequences=consequences)
    if check in ("maurer-cartan", "maurer-cartan-strong"):
        op = _operator(spec, object_name)
        ctx = spec.build(args["ctx"])
        if not isinstance(ctx, TwilledContext):
            raise ParseError(f"{args['ctx']!r} is not a twilled context")
        return check_maurer_cartan(ctx, op.matrix, strong=check.endswith("strong"))
    if check == "ybe":
        if not isinstance(obj, Tensor2):
            raise ParseError(f"{object_name!r} is not a 2-tensor")
        return check_ybe(obj.algebra, obj)
    if check == "rn-structure":
        if not isinstance(obj, Tensor2):
            raise ParseError(f"{object_name!r} is not a 2-tensor")
        N = _operator(spec, args["N"])
        return check_rn_structure(obj.algebra, obj, N, consequences=consequences)
    if check == "rbn-structure":
        R = _operator(spec, object_name)
        N = _operator(spec, args["N"])
        return check_rbn_structure(_resolve_algebra(spec, R, args), R, N)
    if check == "quadratic":
        if not isinstance(obj, BilinearForm):
            raise ParseError(f"{object_name!r} is not a form")
        return check_quadratic(obj.algebra, obj, consequences=consequences)
    if check == "bn-structure":
        if not isinstance(obj, BilinearForm):
            raise ParseError(f"{object_name!r} is not a form")
        N = _operator(spec, args["N"])
        return check_bn_structure(obj.algebra, obj, N, consequences=consequences)
    if check == "transfer":
        if not isinstance(obj, BilinearForm):
            raise ParseError(f"{object_name!r} is not a form")
        R = _operator(spec, args["R"])
        N = _operator(spec, args["N"])
        return rbn_rn_transfer(obj.algebra, obj, R, N)
    raise ParseError(f"unhandled check {check!r}")
