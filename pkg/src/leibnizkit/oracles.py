"""Independent brute-force evaluators for every checked identity.

These are deliberately naive second implementations: direct nested index
loops over raw structure constants and matrix entries, with their own local
vector/matrix helpers and no code shared with the main checkers.  They exist
to cross-validate the main path; both paths must produce identical verdicts
and violation tuples on any input.
"""

from __future__ import annotations

from .errors import (
    NotKupershmidt,
    NotNijenhuis,
    NotNijenhuisPair,
    NotRMatrix,
    NotRotaBaxter,
    UnknownIdentity,
)
from .reports import CheckReport, Violation


def _ent(m):
    """Raw entries of a Matrix/LinearOperator/list-of-rows."""
    if hasattr(m, "matrix"):
        m = m.matrix
    if hasattr(m, "entries"):
        return m.entries
    return tuple(tuple(row) for row in m)


def _mmul(f, a, b):
    n, mid, m = len(a), len(b), len(b[0]) if b else 0
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            s = 0
            for t in range(mid):
                s += a[i][t] * b[t][j]
            row.append(f.normalize(s))
        out.append(tuple(row))
    return tuple(out)


def _mvec(f, a, v):
    return tuple(f.normalize(sum(a[i][t] * v[t] for t in range(len(v)))) for i in range(len(a)))


def _madd(f, a, b, sign=1):
    return tuple(
        tuple(f.normalize(a[i][j] + sign * b[i][j]) for j in range(len(a[0])))
        for i in range(len(a))
    )


def _mneg(f, a):
    return tuple(tuple(f.neg(v) for v in row) for row in a)


def _flat(a):
    return tuple(v for row in a for v in row)


def _col(a, j):
    return tuple(row[j] for row in a)


def _vadd(f, *vs):
    return tuple(f.normalize(sum(t)) for t in zip(*vs))


def _bracket(f, c, x, y):
    n = len(c)
    out = [0] * n
    for i in range(n):
        if f.is_zero(x[i]):
            continue
        for j in range(n):
            if f.is_zero(y[j]):
                continue
            co = x[i] * y[j]
            for k in range(n):
                out[k] += co * c[i][j][k]
    return tuple(f.normalize(v) for v in out)


def _act(f, mats, x):
    """Sum_i x_i * mats[i], returned as raw rows."""
    m = len(mats[0])
    out = [[0] * m for _ in range(m)]
    for i, xi in enumerate(x):
        if f.is_zero(xi):
            continue
        ent = mats[i]
        for a in range(m):
            for b in range(m):
                out[a][b] += xi * ent[a][b]
    return tuple(tuple(f.normalize(v) for v in row) for row in out)


def eval_leibniz(alg) -> CheckReport:
    f, n, c = alg.field, alg.dim, alg.c
    violations = []
    for a in range(n):
        for b in range(n):
            for d in range(n):
                lhs = [0] * n
                for m in range(n):
                    co = c[b][d][m]
                    if not f.is_zero(co):
                        for k in range(n):
                            lhs[k] += co * c[a][m][k]
                rhs = [0] * n
                for m in range(n):
                    co = c[a][b][m]
                    if not f.is_zero(co):
                        for k in range(n):
                            rhs[k] += co * c[m][d][k]
                    co2 = c[a][d][m]
                    if not f.is_zero(co2):
                        for k in range(n):
                            rhs[k] += co2 * c[b][m][k]
                lt = tuple(f.normalize(v) for v in lhs)
                rt = tuple(f.normalize(v) for v in rhs)
                if lt != rt:
                    violations.append(Violation("leibniz", (a, b, d), lt, rt))
    return CheckReport.build(violations)


def eval_representation(rep) -> CheckReport:
    f = rep.algebra.field
    n = rep.algebra.dim
    c = rep.algebra.c
    L = [_ent(m) for m in rep.rhoL]
    R = [_ent(m) for m in rep.rhoR]
    violations = []
    for i in range(n):
        for j in range(n):
            lhs1 = _act(f, L, c[i][j])
            rhs1 = _madd(f, _mmul(f, L[i], L[j]), _mmul(f, L[j], L[i]), -1)
            if lhs1 != rhs1:
                violations.append(Violation("rep-left", (i, j), _flat(lhs1), _flat(rhs1)))
            lhs2 = _act(f, R, c[i][j])
            rhs2 = _madd(f, _mmul(f, L[i], R[j]), _mmul(f, R[j], L[i]), -1)
            if lhs2 != rhs2:
                violations.append(Violation("rep-right", (i, j), _flat(lhs2), _flat(rhs2)))
            lhs3 = _mmul(f, R[j], L[i])
            rhs3 = _mneg(f, _mmul(f, R[j], R[i]))
            if lhs3 != rhs3:
                violations.append(Violation("rep-swap", (i, j), _flat(lhs3), _flat(rhs3)))
    return CheckReport.build(violations)


def _kup_violations(f, c, L, R, K, name="kupershmidt"):
    m = len(K[0])
    violations = []
    for i in range(m):
        Ki = _col(K, i)
        for j in range(m):
            Kj = _col(K, j)
            lhs = _bracket(f, c, Ki, Kj)
            inner = _vadd(
                f, _mvec(f, _act(f, L, Ki), _basis(f, m, j)), _mvec(f, _act(f, R, Kj), _basis(f, m, i))
            )
            rhs = _mvec(f, K, inner)
            if lhs != rhs:
                violations.append(Violation(name, (i, j), lhs, rhs))
    return violations


def _basis(f, n, i):
    return tuple(f.one() if t == i else f.zero() for t in range(n))


def eval_kupershmidt(K, rep) -> CheckReport:
    f = rep.algebra.field
    return CheckReport.build(
        _kup_violations(
            f, rep.algebra.c, [_ent(m) for m in rep.rhoL], [_ent(m) for m in rep.rhoR], _ent(K)
        )
    )


def eval_nijenhuis(N, alg) -> CheckReport:
    f, n, c = alg.field, alg.dim, alg.c
    Nm = _ent(N)
    violations = []
    for i in range(n):
        Ni = _col(Nm, i)
        for j in range(n):
            Nj = _col(Nm, j)
            lhs = _bracket(f, c, Ni, Nj)
            ei, ej = _basis(f, n, i), _basis(f, n, j)
            inner = _vadd(
                f,
                _bracket(f, c, Ni, ej),
                _bracket(f, c, ei, Nj),
                tuple(f.neg(v) for v in _mvec(f, Nm, _bracket(f, c, ei, ej))),
            )
            rhs = _mvec(f, Nm, inner)
            if lhs != rhs:
                violations.append(Violation("nijenhuis", (i, j), lhs, rhs))
    return CheckReport.build(violations)


def eval_rota_baxter(R, alg) -> CheckReport:
    f, n, c = alg.field, alg.dim, alg.c
    Rm = _ent(R)
    violations = []
    for i in range(n):
        Ri = _col(Rm, i)
        for j in range(n):
            Rj = _col(Rm, j)
            lhs = _bracket(f, c, Ri, Rj)
            ei, ej = _basis(f, n, i), _basis(f, n, j)
            rhs = _mvec(f, Rm, _vadd(f, _bracket(f, c, Ri, ej), _bracket(f, c, ei, Rj)))
            if lhs != rhs:
                violations.append(Violation("rota-baxter", (i, j), lhs, rhs))
    return CheckReport.build(violations)


_COMPAT_SAMPLES = ((1, 1), (2, -1), ("1/2", 3))


def eval_compatible(K1, K2, rep) -> CheckReport:
    f = rep.algebra.field
    c = rep.algebra.c
    L = [_ent(m) for m in rep.rhoL]
    R = [_ent(m) for m in rep.rhoR]
    A, B = _ent(K1), _ent(K2)
    for K in (A, B):
        if _kup_violations(f, c, L, R, K):
            raise NotKupershmidt("oracle precondition: operator is not Kupershmidt")
    m = len(A[0])
    violations = []
    for i in range(m):
        Ai, Bi = _col(A, i), _col(B, i)
        for j in range(m):
            Aj, Bj = _col(A, j), _col(B, j)
            lhs = _vadd(f, _bracket(f, c, Ai, Bj), _bracket(f, c, Bi, Aj))
            ei, ej = _basis(f, m, i), _basis(f, m, j)
            mixed1 = _vadd(f, _mvec(f, _act(f, L, Bi), ej), _mvec(f, _act(f, R, Bj), ei))
            mixed2 = _vadd(f, _mvec(f, _act(f, L, Ai), ej), _mvec(f, _act(f, R, Aj), ei))
            rhs = _vadd(f, _mvec(f, A, mixed1), _mvec(f, B, mixed2))
            if lhs != rhs:
                violations.append(Violation("compatible", (i, j), lhs, rhs))
    report_violations = list(violations)
    notes = {}
    if not violations:
        for n1, n2 in _COMPAT_SAMPLES:
            try:
                a, b = f.of(n1), f.of(n2)
            except Exception:
                notes[f"sample-{n1},{n2}"] = "skipped (coefficients not in field)"
                continue
            comb = tuple(
                tuple(f.normalize(a * A[r][s] + b * B[r][s]) for s in range(len(A[0])))
                for r in range(len(A))
            )
            for v in _kup_violations(f, c, L, R, comb):
                report_violations.append(
                    Violation(f"combination-{n1},{n2}:{v.identity}", v.index, v.lhs, v.rhs)
                )
    return CheckReport.build(report_violations, notes)


def eval_nk_condition(N, K, rep) -> CheckReport:
    f = rep.algebra.field
    c = rep.algebra.c
    alg = rep.algebra
    if eval_nijenhuis(N, alg).violations:
        raise NotNijenhuis("oracle precondition: N is not Nijenhuis")
    if eval_kupershmidt(K, rep).violations:
        raise NotKupershmidt("oracle precondition: K is not Kupershmidt")
    L = [_ent(m) for m in rep.rhoL]
    R = [_ent(m) for m in rep.rhoR]
    Nm, Km = _ent(N), _ent(K)
    NK = _mmul(f, Nm, Km)
    NNK = _mmul(f, Nm, NK)
    m = len(Km[0])
    violations = []
    for i in range(m):
        Ki, NKi = _col(Km, i), _col(NK, i)
        for j in range(m):
            Kj, NKj = _col(Km, j), _col(NK, j)
            lhs = _mvec(
                f, Nm, _vadd(f, _bracket(f, c, NKi, Kj), _bracket(f, c, Ki, NKj))
            )
            ei, ej = _basis(f, m, i), _basis(f, m, j)
            t1 = _mvec(f, NK, _vadd(f, _mvec(f, _act(f, L, NKi), ej), _mvec(f, _act(f, R, NKj), ei)))
            t2 = _mvec(f, NNK, _vadd(f, _mvec(f, _act(f, L, Ki), ej), _mvec(f, _act(f, R, Kj), ei)))
            rhs = _vadd(f, t1, t2)
            if lhs != rhs:
                violations.append(Violation("nk-condition", (i, j), lhs, rhs))
    direct = _kup_violations(f, c, L, R, NK)
    report = CheckReport.build(violations)
    if bool(violations) != bool(direct):
        report = report.merged(
            CheckReport.build(
                [
                    Violation(
                        "nk-condition-vs-composite",
                        (),
                        (1 if not violations else 0,),
                        (1 if not direct else 0,),
                    )
                ]
            )
        )
    report.notes["composite-kupershmidt"] = "ok" if not direct else "fail"
    return report


def _pair_violations(f, c, L, R, Nm, Sm, dual: bool):
    n = len(c)
    violations = []
    SS = _mmul(f, Sm, Sm)
    names = ("dual-pair-left", "dual-pair-right") if dual else ("pair-left", "pair-right")
    for i in range(n):
        Ni = _col(Nm, i)
        for name, fam in zip(names, (L, R)):
            rho_i = fam[i]
            rho_Ni = _act(f, fam, Ni)
            lhs = _mmul(f, rho_Ni, Sm)
            if dual:
                rhs = _madd(
                    f,
                    _madd(f, _mmul(f, Sm, rho_Ni), _mmul(f, rho_i, SS)),
                    _mmul(f, Sm, _mmul(f, rho_i, Sm)),
                    -1,
                )
            else:
                rhs = _madd(
                    f,
                    _madd(f, _mmul(f, Sm, rho_Ni), _mmul(f, Sm, _mmul(f, rho_i, Sm))),
                    _mmul(f, SS, rho_i),
                    -1,
                )
            if lhs != rhs:
                violations.append(Violation(name, (i,), _flat(lhs), _flat(rhs)))
    return violations


def eval_nijenhuis_pair(pair, rep) -> CheckReport:
    f = rep.algebra.field
    violations = list(eval_nijenhuis(pair.N, rep.algebra).violations)
    violations += _pair_violations(
        f, rep.algebra.c, [_ent(m) for m in rep.rhoL], [_ent(m) for m in rep.rhoR],
        _ent(pair.N), _ent(pair.S), dual=False,
    )
    return CheckReport.build(violations)


def eval_dual_nijenhuis_pair(pair, rep) -> CheckReport:
    f = rep.algebra.field
    violations = list(eval_nijenhuis(pair.N, rep.algebra).violations)
    violations += _pair_violations(
        f, rep.algebra.c, [_ent(m) for m in rep.rhoL], [_ent(m) for m in rep.rhoR],
        _ent(pair.N), _ent(pair.S), dual=True,
    )
    return CheckReport.build(violations)


def eval_perfect_pair(pair, rep) -> CheckReport:
    if eval_nijenhuis_pair(pair, rep).violations:
        raise NotNijenhuisPair("oracle precondition: not a Nijenhuis pair")
    f = rep.algebra.field
    n = rep.algebra.dim
    L = [_ent(m) for m in rep.rhoL]
    R = [_ent(m) for m in rep.rhoR]
    Sm = _ent(pair.S)
    SS = _mmul(f, Sm, Sm)
    two = f.of(2)
    violations = []
    for i in range(n):
        for name, fam in (("perfect-left", L), ("perfect-right", R)):
            rho_i = fam[i]
            lhs = _madd(f, _mmul(f, SS, rho_i), _mmul(f, rho_i, SS))
            mid = _mmul(f, Sm, _mmul(f, rho_i, Sm))
            rhs = tuple(tuple(f.mul(two, v) for v in row) for row in mid)
            if lhs != rhs:
                violations.append(Violation(name, (i,), _flat(lhs), _flat(rhs)))
    return CheckReport.build(violations)


def _module_bracket(f, c, L, R, T, i, j):
    m = len(T[0])
    Ti, Tj = _col(T, i), _col(T, j)
    return _vadd(
        f,
        _mvec(f, _act(f, L, Ti), _basis(f, m, j)),
        _mvec(f, _act(f, R, Tj), _basis(f, m, i)),
    )


def eval_kn_structure(kn, rep) -> CheckReport:
    """Core conditions only (commutation and bracket agreement)."""
    f = rep.algebra.field
    c = rep.algebra.c
    L = [_ent(m) for m in rep.rhoL]
    R = [_ent(m) for m in rep.rhoR]
    Km, Nm, Sm = _ent(kn.K), _ent(kn.N), _ent(kn.S)
    if _kup_violations(f, c, L, R, Km):
        raise NotKupershmidt("oracle precondition: K is not Kupershmidt")
    pv = _pair_violations(f, c, L, R, Nm, Sm, dual=(kn.mode == "dual-kn"))
    if pv or eval_nijenhuis(kn.pair.N, rep.algebra).violations:
        raise NotNijenhuisPair("oracle precondition: pair check fails")
    violations = []
    NK = _mmul(f, Nm, Km)
    KS = _mmul(f, Km, Sm)
    if NK != KS:
        violations.append(Violation("kn-commute", (), _flat(NK), _flat(KS)))
    m = len(Km[0])
    for i in range(m):
        for j in range(m):
            lhs = _module_bracket(f, c, L, R, NK, i, j)
            si, sj = _col(Sm, i), _col(Sm, j)
            t1 = [0] * m
            for t in range(m):
                if not f.is_zero(si[t]):
                    v = _module_bracket(f, c, L, R, Km, t, j)
                    for u in range(m):
                        t1[u] += si[t] * v[u]
                if not f.is_zero(sj[t]):
                    v = _module_bracket(f, c, L, R, Km, i, t)
                    for u in range(m):
                        t1[u] += sj[t] * v[u]
            base = _module_bracket(f, c, L, R, Km, i, j)
            sub = _mvec(f, Sm, base)
            rhs = tuple(f.normalize(t1[u] - sub[u]) for u in range(m))
            if lhs != rhs:
                violations.append(Violation("kn-bracket", (i, j), lhs, rhs))
    return CheckReport.build(violations)


def eval_maurer_cartan(ctx, theta, strong: bool = False) -> CheckReport:
    f = ctx.field
    n1, n2 = ctx.n1, ctx.n2
    c = ctx.total.c
    th = _ent(theta)
    violations = []
    for i in range(n1):
        ti = _col(th, i)
        ti_full = tuple([f.zero()] * n1) + ti
        for j in range(n1):
            tj = _col(th, j)
            tj_full = tuple([f.zero()] * n1) + tj
            ei = _basis(f, n1 + n2, i)
            ej = _basis(f, n1 + n2, j)
            b2 = _bracket(f, c, ti_full, tj_full)[n1:]
            rho1 = _vadd(
                f,
                _bracket(f, c, ei, tj_full)[n1:],
                _bracket(f, c, ti_full, ej)[n1:],
            )
            lin_lhs = _mvec(f, th, _bracket(f, c, ei, ej)[:n1])
            inner = _vadd(
                f,
                _bracket(f, c, ti_full, ej)[:n1],
                _bracket(f, c, ei, tj_full)[:n1],
            )
            quad_lhs = _vadd(f, b2, rho1)
            quad_rhs = _vadd(f, _mvec(f, th, inner), lin_lhs)
            if quad_lhs != quad_rhs:
                violations.append(Violation("maurer-cartan", (i, j), quad_lhs, quad_rhs))
            if strong:
                if lin_lhs != rho1:
                    violations.append(
                        Violation("maurer-cartan-linear", (i, j), lin_lhs, rho1)
                    )
    return CheckReport.build(violations)


def eval_ybe(alg, pi) -> CheckReport:
    f, n, c = alg.field, alg.dim, alg.c
    P = _ent(pi.matrix)
    total = {}
    for p in range(n):
        for r in range(n):
            for i in range(n):
                for j in range(n):
                    for k in range(n):
                        co = P[p][i] * P[r][j] * c[p][r][k]
                        if co:
                            total[(i, j, k)] = total.get((i, j, k), 0) + co
                        co = P[p][i] * P[r][k] * c[p][r][j]
                        if co:
                            total[(i, j, k)] = total.get((i, j, k), 0) + co
                        co = P[p][j] * P[r][k] * (c[p][r][i] + c[r][p][i])
                        if co:
                            total[(i, j, k)] = total.get((i, j, k), 0) - co
    violations = []
    for key in sorted(total):
        v = f.normalize(total[key])
        if not f.is_zero(v):
            violations.append(Violation("yang-baxter", key, (v,), (f.zero(),)))
    return CheckReport.build(violations)


def eval_quadratic(alg, q) -> CheckReport:
    f, n, c = alg.field, alg.dim, alg.c
    B = _ent(q.matrix)
    violations = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = 0
                for b in range(n):
                    lhs += B[i][b] * c[j][k][b]
                rhs = 0
                for a in range(n):
                    rhs += (c[i][k][a] + c[k][i][a]) * B[a][j]
                lhs, rhs = f.normalize(lhs), f.normalize(rhs)
                if lhs != rhs:
                    violations.append(Violation("quadratic-invariance", (i, j, k), (lhs,), (rhs,)))
    return CheckReport.build(violations)


def eval_rbn_structure(alg, R, N) -> CheckReport:
    f, n, c = alg.field, alg.dim, alg.c
    Rm, Nm = _ent(R), _ent(N)
    if eval_rota_baxter(Rm, alg).violations:
        raise NotRotaBaxter("oracle precondition: R is not Rota-Baxter")
    if eval_nijenhuis(Nm, alg).violations:
        raise NotNijenhuis("oracle precondition: N is not Nijenhuis")
    violations = []
    NR = _mmul(f, Nm, Rm)
    RN = _mmul(f, Rm, Nm)
    if NR != RN:
        violations.append(Violation("rbn-commute", (), _flat(NR), _flat(RN)))

    def rbracket(T, x, y):
        return _vadd(f, _bracket(f, c, _mvec(f, T, x), y), _bracket(f, c, x, _mvec(f, T, y)))

    for i in range(n):
        ei = _basis(f, n, i)
        Nei = _col(Nm, i)
        for j in range(n):
            ej = _basis(f, n, j)
            Nej = _col(Nm, j)
            lhs = rbracket(NR, ei, ej)
            rhs = _vadd(
                f,
                rbracket(Rm, Nei, ej),
                rbracket(Rm, ei, Nej),
                tuple(f.neg(v) for v in _mvec(f, Nm, rbracket(Rm, ei, ej))),
            )
            if lhs != rhs:
                violations.append(Violation("rbn-bracket", (i, j), lhs, rhs))
    return CheckReport.build(violations)


def eval_rn_structure(alg, pi, N) -> CheckReport:
    f, n = alg.field, alg.dim
    if eval_ybe(alg, pi).violations:
        raise NotRMatrix("oracle precondition: not an r-matrix")
    Nm = _ent(N)
    if eval_nijenhuis(Nm, alg).violations:
        raise NotNijenhuis("oracle precondition: N is not Nijenhuis")
    P = _ent(pi.matrix)
    c = alg.c
    # contragredient of the regular representation, built inline:
    # row r, col s of the left family is -c[i][r][s]; of the right family
    # c[i][r][s] + c[r][i][s]
    L = [tuple(tuple(f.neg(c[i][r][s]) for s in range(n)) for r in range(n)) for i in range(n)]
    R = [
        tuple(tuple(f.normalize(c[i][r][s] + c[r][i][s]) for s in range(n)) for r in range(n))
        for i in range(n)
    ]
    Nt = tuple(tuple(Nm[j][i] for j in range(n)) for i in range(n))
    NP = _mmul(f, Nm, P)
    PNt = _mmul(f, P, Nt)
    violations = []
    if NP != PNt:
        violations.append(Violation("rn-commute", (), _flat(NP), _flat(PNt)))
    for i in range(n):
        for j in range(n):
            lhs = _module_bracket(f, c, L, R, NP, i, j)
            nti, ntj = _col(Nt, i), _col(Nt, j)
            acc = [0] * n
            for t in range(n):
                if not f.is_zero(nti[t]):
                    v = _module_bracket(f, c, L, R, P, t, j)
                    for u in range(n):
                        acc[u] += nti[t] * v[u]
                if not f.is_zero(ntj[t]):
                    v = _module_bracket(f, c, L, R, P, i, t)
                    for u in range(n):
                        acc[u] += ntj[t] * v[u]
            sub = _mvec(f, Nt, _module_bracket(f, c, L, R, P, i, j))
            rhs = tuple(f.normalize(acc[u] - sub[u]) for u in range(n))
            if lhs != rhs:
                violations.append(Violation("rn-bracket", (i, j), lhs, rhs))
    return CheckReport.build(violations)


def eval_bn_structure(alg, B, N) -> CheckReport:
    f, n, c = alg.field, alg.dim, alg.c
    Bm, Nm = _ent(B.matrix), _ent(N)
    if eval_nijenhuis(Nm, alg).violations:
        raise NotNijenhuis("oracle precondition: N is not Nijenhuis")
    violations = []

    def pair(x, y, M):
        s = 0
        for a in range(n):
            for b in range(n):
                s += x[a] * M[a][b] * y[b]
        return f.normalize(s)

    def closed(M, name):
        for i in range(n):
            ei = _basis(f, n, i)
            for j in range(n):
                ej = _basis(f, n, j)
                for k in range(n):
                    ek = _basis(f, n, k)
                    lhs = pair(ek, c[i][j], M)
                    rhs = f.normalize(
                        -pair(ej, c[i][k], M) + pair(ei, c[j][k], M) + pair(ei, c[k][j], M)
                    )
                    if lhs != rhs:
                        violations.append(Violation(name, (i, j, k), (lhs,), (rhs,)))

    closed(Bm, "bn-closed")
    Nt = tuple(tuple(Nm[j][i] for j in range(n)) for i in range(n))
    NtB = _mmul(f, Nt, Bm)
    BN = _mmul(f, Bm, Nm)
    for i in range(n):
        for j in range(n):
            if NtB[i][j] != BN[i][j]:
                violations.append(Violation("bn-compat", (i, j), (NtB[i][j],), (BN[i][j],)))
    closed(NtB, "bn-n-closed")
    return CheckReport.build(violations)


ORACLES = {
    "leibniz": lambda b: eval_leibniz(b["algebra"]),
    "representation": lambda b: eval_representation(b["rep"]),
    "kupershmidt": lambda b: eval_kupershmidt(b["K"], b["rep"]),
    "nijenhuis": lambda b: eval_nijenhuis(b["N"], b["algebra"]),
    "rota-baxter": lambda b: eval_rota_baxter(b["R"], b["algebra"]),
    "compatible": lambda b: eval_compatible(b["K1"], b["K2"], b["rep"]),
    "nk-condition": lambda b: eval_nk_condition(b["N"], b["K"], b["rep"]),
    "nijenhuis-pair": lambda b: eval_nijenhuis_pair(b["pair"], b["rep"]),
    "dual-nijenhuis-pair": lambda b: eval_dual_nijenhuis_pair(b["pair"], b["rep"]),
    "perfect-pair": lambda b: eval_perfect_pair(b["pair"], b["rep"]),
    "kn-structure": lambda b: eval_kn_structure(b["kn"], b["rep"]),
    "maurer-cartan": lambda b: eval_maurer_cartan(b["ctx"], b["theta"], False),
    "maurer-cartan-strong": lambda b: eval_maurer_cartan(b["ctx"], b["theta"], True),
    "ybe": lambda b: eval_ybe(b["algebra"], b["pi"]),
    "quadratic": lambda b: eval_quadratic(b["algebra"], b["q"]),
    "rn-structure": lambda b: eval_rn_structure(b["algebra"], b["pi"], b["N"]),
    "rbn-structure": lambda b: eval_rbn_structure(b["algebra"], b["R"], b["N"]),
    "bn-structure": lambda b: eval_bn_structure(b["algebra"], b["B"], b["N"]),
}


def oracle_eval(identity: str, bindings: dict) -> CheckReport:
    """Run the registered independent evaluator for a named identity."""
    try:
        fn = ORACLES[identity]
    except KeyError:
        raise UnknownIdentity(f"no oracle registered for {identity!r}") from None
    return fn(bindings)
