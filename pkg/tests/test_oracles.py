"""Dual-path consistency: the naive evaluators must agree with the main
checkers on verdicts and violation tuples."""

import random

import pytest

from leibnizkit import (
    LeibnizAlgebra,
    Matrix,
    RATIONALS as Q,
    Representation,
    Tensor2,
    as_operator,
    check_kupershmidt,
    check_leibniz,
    check_maurer_cartan,
    check_nijenhuis,
    check_representation,
    check_rota_baxter,
    check_ybe,
    dual_representation,
    lifted_algebra,
    oracle_eval,
    regular_representation,
)
from leibnizkit.errors import UnknownIdentity
from leibnizkit.pairs import make_pair
from leibnizkit.checks import run_check
from leibnizkit.twilled import TwilledContext

from conftest import rb_matrix


def same(a, b):
    assert a.ok == b.ok
    assert a.violations == b.violations


def test_unknown_identity():
    with pytest.raises(UnknownIdentity):
        oracle_eval("frobnicate", {})


def test_leibniz_agreement(l2):
    same(check_leibniz(l2), oracle_eval("leibniz", {"algebra": l2}))
    bad = LeibnizAlgebra.from_brackets(Q, 1, {(0, 0): [1]})
    same(check_leibniz(bad), oracle_eval("leibniz", {"algebra": bad}))


def test_kupershmidt_agreement(l2_regular):
    R = as_operator(rb_matrix(1))
    same(check_kupershmidt(R, l2_regular),
         oracle_eval("kupershmidt", {"K": R, "rep": l2_regular}))
    I = as_operator(Matrix.identity(Q, 2))
    same(check_kupershmidt(I, l2_regular),
         oracle_eval("kupershmidt", {"K": I, "rep": l2_regular}))


def test_maurer_cartan_agreement(l2_regular):
    ctx = TwilledContext(lifted_algebra(as_operator(rb_matrix(1)), l2_regular), 2, 2)
    rng = random.Random(8)
    for _ in range(25):
        th = Matrix(Q, [[rng.randint(-2, 2) for _ in range(2)] for _ in range(2)])
        same(check_maurer_cartan(ctx, th),
             oracle_eval("maurer-cartan", {"ctx": ctx, "theta": th}))
        same(check_maurer_cartan(ctx, th, strong=True),
             oracle_eval("maurer-cartan-strong", {"ctx": ctx, "theta": th}))


def _mixed_corpus(l2, l2_regular, l2_dual, size=520):
    """(identity, bindings) pairs across catalog algebras and random inputs."""
    rng = random.Random(77)
    algs = [
        l2,
        LeibnizAlgebra.abelian(Q, 2),
        LeibnizAlgebra.from_brackets(Q, 2, {(1, 1): [1, 0]}),
        LeibnizAlgebra.from_brackets(Q, 2, {(0, 1): [1, 0], (1, 0): [-1, 0]}),
        LeibnizAlgebra.from_brackets(Q, 3, {(2, 2): [0, 1, 0]}),
    ]
    corpus = []

    def randmat(n, h=2):
        return Matrix(Q, [[rng.randint(-h, h) for _ in range(n)] for _ in range(n)])

    while len(corpus) < size:
        alg = algs[rng.randrange(len(algs))]
        n = alg.dim
        kind = rng.randrange(7)
        if kind == 0:
            corpus.append(("nijenhuis", {"N": randmat(n), "algebra": alg}))
        elif kind == 1:
            corpus.append(("rota-baxter", {"R": randmat(n), "algebra": alg}))
        elif kind == 2:
            rep = regular_representation(alg)
            corpus.append(("kupershmidt", {"K": randmat(n), "rep": rep}))
        elif kind == 3:
            rep = dual_representation(regular_representation(alg))
            corpus.append(("kupershmidt", {"K": randmat(n), "rep": rep}))
        elif kind == 4:
            rep = regular_representation(alg)
            corpus.append(("nijenhuis-pair",
                           {"pair": make_pair(randmat(n), randmat(n)), "rep": rep}))
        elif kind == 5:
            rep = dual_representation(regular_representation(alg))
            corpus.append(("dual-nijenhuis-pair",
                           {"pair": make_pair(randmat(n), randmat(n)), "rep": rep}))
        else:
            corpus.append(("ybe", {"algebra": alg, "pi": Tensor2(alg, randmat(n, 1))}))
    return corpus


def test_mixed_corpus_agreement(l2, l2_regular, l2_dual):
    from leibnizkit.operators import check_nijenhuis as main_nij
    from leibnizkit.operators import check_rota_baxter as main_rb
    from leibnizkit.operators import check_kupershmidt as main_kup
    from leibnizkit.pairs import check_nijenhuis_pair, check_dual_nijenhuis_pair
    from leibnizkit.forms import check_ybe as main_ybe

    corpus = _mixed_corpus(l2, l2_regular, l2_dual, size=150)
    for identity, bindings in corpus:
        if identity == "nijenhuis":
            main = main_nij(as_operator(bindings["N"]), bindings["algebra"])
        elif identity == "rota-baxter":
            main = main_rb(as_operator(bindings["R"]), bindings["algebra"])
        elif identity == "kupershmidt":
            main = main_kup(as_operator(bindings["K"]), bindings["rep"])
        elif identity == "nijenhuis-pair":
            main = check_nijenhuis_pair(bindings["pair"], bindings["rep"])
        elif identity == "dual-nijenhuis-pair":
            main = check_dual_nijenhuis_pair(bindings["pair"], bindings["rep"])
        else:
            main = main_ybe(bindings["algebra"], bindings["pi"])
        same(main, oracle_eval(identity, bindings))
