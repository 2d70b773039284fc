"""Leibniz r-matrices (classical Yang-Baxter solutions), sharp maps from
2-tensors and bilinear forms, quadratic algebras, and the coupled structures
tying a Nijenhuis operator to an r-matrix, a Rota-Baxter operator, or a closed
symmetric form.

Dual-side brackets are always formed over the contragredient of the regular
representation; the sharp map of a symmetric 2-tensor has the tensor's own
matrix in dual bases, and the inverse sharp of a form is the matrix of
x -> form(x, .), i.e. the transpose of the form's matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from .algebras import (
    LeibnizAlgebra,
    Representation,
    dual_representation,
    regular_representation,
)
from .errors import (
    Degenerate,
    HypothesisFailed,
    NotNijenhuis,
    NotRMatrix,
    NotRotaBaxter,
    NotSkew,
    NotSymmetric,
    ShapeMismatch,
)
from .linalg import Matrix, is_invertible, mat_inverse, vec_add
from .operators import (
    LinearOperator,
    as_operator,
    check_compatible,
    check_kupershmidt,
    check_nijenhuis,
    check_rota_baxter,
    module_bracket_tensor,
    twisted_tensor,
)
from .pairs import KNStructure, OperatorPair, check_kn_structure
from .reports import CheckReport, Violation


@dataclass(frozen=True)
class Tensor2:
    """An element of algebra (x) algebra: matrix[i][j] is the coefficient of
    e_i (x) e_j."""

    algebra: LeibnizAlgebra
    matrix: Matrix

    def __post_init__(self):
        n = self.algebra.dim
        if self.matrix.rows != n or self.matrix.cols != n:
            raise ShapeMismatch("tensor matrix must be dim x dim")

    @property
    def symmetric(self) -> bool:
        return self.matrix == self.matrix.transpose()


@dataclass(frozen=True)
class BilinearForm:
    """matrix[i][j] = form(e_i, e_j); symmetry is 'symmetric' or 'skew'."""

    algebra: LeibnizAlgebra
    matrix: Matrix
    symmetry: str = "symmetric"

    def __post_init__(self):
        n = self.algebra.dim
        if self.matrix.rows != n or self.matrix.cols != n:
            raise ShapeMismatch("form matrix must be dim x dim")
        if self.symmetry not in ("symmetric", "skew"):
            raise ShapeMismatch(f"unknown symmetry tag {self.symmetry!r}")

    def matches_symmetry(self) -> bool:
        t = self.matrix.transpose()
        return t == self.matrix if self.symmetry == "symmetric" else t == -self.matrix

    @property
    def nondegenerate(self) -> bool:
        return is_invertible(self.matrix)


def sum_pairing(form: BilinearForm, x, y):
    f = form.matrix.field
    acc = 0
    for i, xi in enumerate(x):
        if f.is_zero(xi):
            continue
        row = form.matrix.entries[i]
        for j, yj in enumerate(y):
            acc += xi * row[j] * yj
    return f.normalize(acc)


def check_ybe(alg: LeibnizAlgebra, pi: Tensor2) -> CheckReport:
    """Classical Yang-Baxter equation in the triple tensor power.

    For pi = sum a_u (x) b_u the checked tensor is

        sum_{u,v}  b_u (x) b_v (x) [a_u, a_v]
                 + b_u (x) [a_u, a_v] (x) b_v
                 - ([a_u, a_v] + [a_v, a_u]) (x) b_u (x) b_v  = 0.

    The slot-1 bracket is symmetrized: a left Leibniz bracket is not
    antisymmetric, and this is the component expansion under which symmetric
    solutions are exactly the 2-tensors whose sharp map satisfies the
    module-to-algebra intertwining identity for the contragredient of the
    regular representation (pinned against the quadratic-algebra transfer
    suite; a plain one-order-per-slot reading breaks it).
    """
    alg.require_leibniz()
    if pi.algebra != alg:
        raise ShapeMismatch("tensor belongs to a different algebra")
    f = alg.field
    n = alg.dim
    P = pi.matrix.entries
    c = alg.c
    total = {}
    for p in range(n):
        for r in range(n):
            br = c[p][r]
            if any(not f.is_zero(v) for v in br):
                for i in range(n):
                    a = P[p][i]
                    if f.is_zero(a):
                        continue
                    # bracket in slot 3: legs pass to slots 1 and 2
                    for j in range(n):
                        b = P[r][j]
                        if f.is_zero(b):
                            continue
                        coef = a * b
                        for k in range(n):
                            v = br[k]
                            if not f.is_zero(v):
                                key = (i, j, k)
                                total[key] = total.get(key, 0) + coef * v
                    # bracket in slot 2
                    for k in range(n):
                        b = P[r][k]
                        if f.is_zero(b):
                            continue
                        coef = a * b
                        for j in range(n):
                            v = br[j]
                            if not f.is_zero(v):
                                key = (i, j, k)
                                total[key] = total.get(key, 0) + coef * v
            # bracket in slot 1, both argument orders, negative
            sym = [f.add(br[t], c[r][p][t]) for t in range(n)]
            if all(f.is_zero(v) for v in sym):
                continue
            for j in range(n):
                a = P[p][j]
                if f.is_zero(a):
                    continue
                for k in range(n):
                    b = P[r][k]
                    if f.is_zero(b):
                        continue
                    coef = a * b
                    for i in range(n):
                        v = sym[i]
                        if not f.is_zero(v):
                            key = (i, j, k)
                            total[key] = total.get(key, 0) - coef * v
    violations = []
    for key in sorted(total):
        val = f.normalize(total[key])
        if not f.is_zero(val):
            violations.append(Violation("yang-baxter", key, (val,), (f.zero(),)))
    return CheckReport.build(violations)


def sharp_map(pi: Tensor2) -> LinearOperator:
    """The induced map dual -> algebra of a symmetric 2-tensor; its matrix in
    dual bases is the tensor's matrix.  When the tensor solves the YBE the
    result is verified to be Kupershmidt for the contragredient of the regular
    representation."""
    if not pi.symmetric:
        raise NotSymmetric("sharp map needs a symmetric tensor")
    op = LinearOperator(pi.matrix, "dual", "algebra")
    if check_ybe(pi.algebra, pi).ok:
        dual_reg = dual_representation(regular_representation(pi.algebra))
        rpt = check_kupershmidt(op, dual_reg)
        if not rpt.ok:
            raise NotRMatrix(
                f"symmetric YBE solution failed the induced-operator check: {rpt.summary()}"
            )
    return op


def dual_regular(alg: LeibnizAlgebra) -> Representation:
    return dual_representation(regular_representation(alg))


def check_rn_structure(
    alg: LeibnizAlgebra, pi: Tensor2, N: LinearOperator, consequences: bool = True
) -> CheckReport:
    """Couple an r-matrix with a Nijenhuis operator: N pi# = pi# N^T, and the
    bracket induced by N pi# on the dual equals the N^T-deformation of the
    bracket induced by pi#."""
    N = as_operator(N)
    ybe = check_ybe(alg, pi)
    if not ybe.ok:
        raise NotRMatrix(ybe.summary())
    nij = check_nijenhuis(N, alg)
    if not nij.ok:
        raise NotNijenhuis(nij.summary())
    if not pi.symmetric:
        raise NotSymmetric("r-n structure needs a symmetric r-matrix")
    f = alg.field
    n = alg.dim
    P = pi.matrix
    Nt = N.matrix.transpose()
    violations = []
    lhs_m = N.matrix * P
    rhs_m = P * Nt
    if lhs_m != rhs_m:
        violations.append(
            Violation("rn-commute", (), _flat(lhs_m), _flat(rhs_m))
        )
    dual_reg = dual_regular(alg)
    base = module_bracket_tensor(P, dual_reg)
    lhs_t = module_bracket_tensor(N.matrix * P, dual_reg)
    rhs_t = twisted_tensor(base, Nt, f)
    for i in range(n):
        for j in range(n):
            if lhs_t[i][j] != rhs_t[i][j]:
                violations.append(Violation("rn-bracket", (i, j), lhs_t[i][j], rhs_t[i][j]))
    report = CheckReport.build(violations)
    if report.ok and consequences:
        kn = KNStructure(
            LinearOperator(P, "dual", "algebra"),
            OperatorPair(N, as_operator(Nt)),
            "dual-kn",
        )
        report = report.merged(
            check_kn_structure(kn, dual_reg).prefixed("dual-kn-transfer")
        )
    return report


def check_rbn_structure(
    alg: LeibnizAlgebra, R: LinearOperator, N: LinearOperator
) -> CheckReport:
    """Couple a Rota-Baxter operator with a Nijenhuis operator: NR = RN and
    the bracket induced by NR equals the N-deformation of the one induced by R."""
    R, N = as_operator(R), as_operator(N)
    rb = check_rota_baxter(R, alg)
    if not rb.ok:
        raise NotRotaBaxter(rb.summary())
    nij = check_nijenhuis(N, alg)
    if not nij.ok:
        raise NotNijenhuis(nij.summary())
    f = alg.field
    n = alg.dim
    violations = []
    NR = N.matrix * R.matrix
    RN = R.matrix * N.matrix
    if NR != RN:
        violations.append(Violation("rbn-commute", (), _flat(NR), _flat(RN)))
    reg = regular_representation(alg)
    base = module_bracket_tensor(R.matrix, reg)
    lhs_t = module_bracket_tensor(NR, reg)
    rhs_t = twisted_tensor(base, N.matrix, f)
    for i in range(n):
        for j in range(n):
            if lhs_t[i][j] != rhs_t[i][j]:
                violations.append(Violation("rbn-bracket", (i, j), lhs_t[i][j], rhs_t[i][j]))
    return CheckReport.build(violations)


def form_sharp_matrix(form: BilinearForm) -> Matrix:
    """The sharp map of a nondegenerate form: the inverse of the matrix of
    x -> form(x, .), which is the transpose of the form's matrix."""
    if not form.nondegenerate:
        raise Degenerate("form is degenerate")
    return mat_inverse(form.matrix.transpose())


def check_quadratic(
    alg: LeibnizAlgebra, q: BilinearForm, consequences: bool = True
) -> CheckReport:
    """Invariance of a nondegenerate skew form:
    q(x0, [x1,x2]) = q([x0,x2] + [x2,x0], x1) on all basis triples.

    On success the inverse sharp map is verified to intertwine the regular
    representation with its contragredient."""
    alg.require_leibniz()
    if q.symmetry != "skew" or not q.matches_symmetry():
        raise NotSkew("quadratic algebras need a skew-symmetric form")
    if not q.nondegenerate:
        raise Degenerate("form is degenerate")
    f = alg.field
    n = alg.dim
    violations = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = sum_pairing(q, _basis(f, n, i), alg.bracket_basis(j, k))
                sym = vec_add(f, alg.bracket_basis(i, k), alg.bracket_basis(k, i))
                rhs = sum_pairing(q, sym, _basis(f, n, j))
                if lhs != rhs:
                    violations.append(
                        Violation("quadratic-invariance", (i, j, k), (lhs,), (rhs,))
                    )
    report = CheckReport.build(violations)
    if not report.ok or not consequences:
        return report
    reg = regular_representation(alg)
    dual = dual_representation(reg)
    inv_sharp = q.matrix.transpose()
    extra = []
    for t in range(n):
        lhsL = inv_sharp * reg.rhoL[t]
        rhsL = dual.rhoL[t] * inv_sharp
        if lhsL != rhsL:
            extra.append(Violation("sharp-intertwine-left", (t,), _flat(lhsL), _flat(rhsL)))
        lhsR = inv_sharp * reg.rhoR[t]
        rhsR = dual.rhoR[t] * inv_sharp
        if lhsR != rhsR:
            extra.append(Violation("sharp-intertwine-right", (t,), _flat(lhsR), _flat(rhsR)))
    return report.merged(CheckReport.build(extra))


def rbn_rn_transfer(
    alg: LeibnizAlgebra, q: BilinearForm, R: LinearOperator, N: LinearOperator
) -> CheckReport:
    """On a quadratic algebra, with pi# = R q# and q# N^T = N q#, the
    Rota-Baxter/Nijenhuis coupling for (R, N) holds exactly when the
    r-matrix/Nijenhuis coupling holds for (pi, N).  The report records both
    verdicts and flags any disagreement."""
    R, N = as_operator(R), as_operator(N)
    quad = check_quadratic(alg, q, consequences=False)
    if not quad.ok:
        raise HypothesisFailed(f"form is not invariant: {quad.summary()}")
    nij = check_nijenhuis(N, alg)
    if not nij.ok:
        raise NotNijenhuis(nij.summary())
    qs = form_sharp_matrix(q)
    if qs * N.matrix.transpose() != N.matrix * qs:
        raise HypothesisFailed("sharp map does not intertwine N with its transpose")
    P = R.matrix * qs
    if P != P.transpose():
        raise HypothesisFailed("induced 2-tensor is not symmetric")
    pi = Tensor2(alg, P)

    rbn_ok = check_rota_baxter(R, alg).ok
    if rbn_ok:
        rbn_ok = check_rbn_structure(alg, R, N).ok
    rn_ok = check_ybe(alg, pi).ok
    if rn_ok:
        rn_ok = check_rn_structure(alg, pi, N, consequences=False).ok
    notes = {
        "rota-baxter-side": "ok" if rbn_ok else "fail",
        "r-matrix-side": "ok" if rn_ok else "fail",
    }
    violations = []
    if rbn_ok != rn_ok:
        violations.append(
            Violation("transfer-agreement", (), (1 if rbn_ok else 0,), (1 if rn_ok else 0,))
        )
    return CheckReport.build(violations, notes)


def check_bn_structure(
    alg: LeibnizAlgebra, B: BilinearForm, N: LinearOperator, consequences: bool = True
) -> CheckReport:
    """A closed symmetric nondegenerate form coupled to a Nijenhuis operator:
    the form is closed, B(N.,.) = B(.,N.), and the twisted form B(N.,.) is
    closed again.  Consequences: the sharp map with (N, N^T) is a dual
    KN-structure on the contragredient of the regular representation, and the
    sharp map is compatible with its N-composite."""
    alg.require_leibniz()
    N = as_operator(N)
    if B.symmetry != "symmetric" or not B.matches_symmetry():
        raise NotSymmetric("BN-structure needs a symmetric form")
    if not B.nondegenerate:
        raise Degenerate("form is degenerate")
    nij = check_nijenhuis(N, alg)
    if not nij.ok:
        raise NotNijenhuis(nij.summary())
    f = alg.field
    n = alg.dim
    violations = []
    violations += _closedness_violations(alg, B.matrix, "bn-closed")
    NtB = N.matrix.transpose() * B.matrix
    BN = B.matrix * N.matrix
    for i in range(n):
        for j in range(n):
            if NtB[i, j] != BN[i, j]:
                violations.append(Violation("bn-compat", (i, j), (NtB[i, j],), (BN[i, j],)))
    violations += _closedness_violations(alg, NtB, "bn-n-closed")
    report = CheckReport.build(violations)
    if not report.ok or not consequences:
        return report
    dual_reg = dual_regular(alg)
    sharp = form_sharp_matrix(B)
    kn = KNStructure(
        LinearOperator(sharp, "dual", "algebra"),
        OperatorPair(N, as_operator(N.matrix.transpose())),
        "dual-kn",
    )
    report = report.merged(check_kn_structure(kn, dual_reg).prefixed("dual-kn-transfer"))
    report = report.merged(
        check_compatible(
            LinearOperator(sharp, "dual", "algebra"),
            LinearOperator(N.matrix * sharp, "dual", "algebra"),
            dual_reg,
        ).prefixed("sharp-compatible")
    )
    return report


def _closedness_violations(alg: LeibnizAlgebra, bmat: Matrix, name: str):
    """form(x2, [x0,x1]) = -form(x1, [x0,x2]) + form(x0, [x1,x2]) + form(x0, [x2,x1])."""
    f = alg.field
    n = alg.dim
    out = []

    def pair(x, y):
        acc = 0
        for a, xa in enumerate(x):
            if f.is_zero(xa):
                continue
            row = bmat.entries[a]
            for b, yb in enumerate(y):
                acc += xa * row[b] * yb
        return f.normalize(acc)

    for i in range(n):
        ei = _basis(f, n, i)
        for j in range(n):
            ej = _basis(f, n, j)
            for k in range(n):
                ek = _basis(f, n, k)
                lhs = pair(ek, alg.bracket_basis(i, j))
                rhs = f.add(
                    f.sub(pair(ei, alg.bracket_basis(j, k)), pair(ej, alg.bracket_basis(i, k))),
                    pair(ei, alg.bracket_basis(k, j)),
                )
                if lhs != rhs:
                    out.append(Violation(name, (i, j, k), (lhs,), (rhs,)))
    return out


def _basis(f, n, i):
    return tuple(f.one() if t == i else f.zero() for t in range(n))


def _flat(m: Matrix) -> Tuple:
    return tuple(v for row in m.entries for v in row)
