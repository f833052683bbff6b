"""Acceptance criteria, one test each; every test prints a PASS/FAIL line.

Run standalone with ``python3 tests/test_acceptance.py`` for just the summary.
"""

import random
import sys

import pytest

from multirees import analysis
from multirees import crn_algebra as ca
from multirees.groebner import (
    Ideal,
    UnitIdealError,
    dimension,
    eliminate,
    ideal_equal,
    ideal_member,
    is_groebner_basis,
    is_reduced,
    reduce,
)
from multirees.network import add_edge, parse_network
from multirees.poly_core import VariableContext, grevlex, is_homogeneous, lex, parse_polynomial
from multirees.randnet import random_binomial_corpus, random_corpus, random_intra_edge

EDELSTEIN = "A <-> 2A\nA + B <-> C\nC <-> B\n"
TRIANGLE = "2A <-> A + B\nA + B <-> 2B\n2B <-> 2A\n"

N_NETWORKS = 120
N_IDEALS = 220


def _nets():
    return parse_network(EDELSTEIN), parse_network(TRIANGLE)


def _ideal(ctx, *texts):
    return Ideal(ctx, [parse_polynomial(t, ctx) for t in texts])


CORPUS = random_corpus(N_NETWORKS, seed=2026, max_species=3, max_vertices=5)


def criterion_1():
    _, tri = _nets()
    tg = ca.toric_ideal_TG(tri)
    ctx = tg.context
    ok_tg = ideal_equal(tg, _ideal(ctx, "K3*x1 - K2*x2", "K2*x1 - K1*x2", "K1*K3 - K2^2"))
    ok_mg = ideal_equal(ca.moduli_ideal(tri), _ideal(ctx, "K1*K3 - K2^2"))
    fiber = ca.special_fiber_ideal(tri)
    ok_fiber = ideal_equal(fiber.fiber_ideal, _ideal(ctx, "K1*K3 - K2^2"))
    ok_w = fiber.homogeneous_case is True and fiber.weights.q == (1, 1)
    return ok_tg and ok_mg and ok_fiber and ok_w, f"T_G {ok_tg}, M_G {ok_mg}, fiber {ok_fiber}, q {fiber.weights.q}"


def criterion_2():
    ed, _ = _nets()
    tg = ca.toric_ideal_TG(ed)
    ctx = tg.context
    ok_tg = ideal_equal(tg, _ideal(ctx, "K1*K3 - K2*K5", "K4*x2 - K5*x3", "K1*x1 - K2", "K5*x1 - K3"))
    ok_mg = ideal_equal(ca.moduli_ideal(ed), _ideal(ctx, "K1*K3 - K2*K5"))
    fiber = ca.special_fiber_ideal(ed)
    ok_fiber = ideal_equal(fiber.fiber_ideal, _ideal(ctx, "K2", "K3"))
    ok_h = fiber.homogeneous_case is False
    return ok_tg and ok_mg and ok_fiber and ok_h, f"T_G {ok_tg}, M_G {ok_mg}, fiber {ok_fiber}, homogeneous {fiber.homogeneous_case}"


def criterion_3():
    results = []
    for net in _nets():
        results.append(ideal_equal(ca.cayley_toric_ideal(net, "standard"), ca.moduli_ideal(net)))
        results.append(ideal_equal(ca.cayley_toric_ideal(net, "modified"), ca.toric_ideal_TG(net)))
    return all(results), f"standard/modified agreement on both networks: {results}"


def criterion_4():
    ed, _ = _nets()
    ext = ca.cayley_toric_ideal(ed, "extended")
    ctx = ext.context
    a = ideal_member(parse_polynomial("K1 - K2*x1", ctx), ext)
    b = not ideal_member(parse_polynomial("K1*x1 - K2", ctx), ext)
    c = not ideal_equal(ext, ca.toric_ideal_TG(ed))
    return a and b and c, f"contains K1 - K2*x1 {a}, excludes K1*x1 - K2 {b}, differs from T_G {c}"


def criterion_5():
    nets = list(_nets()) + CORPUS
    bad, positive = [], 0
    for k, net in enumerate(nets):
        d, nu, cd = analysis.deficiency(net), analysis.cayley_nullity(net), analysis.codim_moduli(net)
        positive += d > 0
        if not d == nu == cd:
            bad.append((k, d, nu, cd))
    return not bad, f"{len(nets)} networks ({positive} with positive deficiency), mismatches {bad}"


def _invariant(net, bigger):
    return (
        ideal_equal(ca.toric_ideal_TG(net), ca.toric_ideal_TG(bigger))
        and ideal_equal(ca.moduli_ideal(net), ca.moduli_ideal(bigger))
        and analysis.stoichiometric_dim(net) == analysis.stoichiometric_dim(bigger)
        and analysis.deficiency(net) == analysis.deficiency(bigger)
    )


def criterion_6():
    ed, _ = _nets()
    plus = parse_network(EDELSTEIN + "A + B -> B\n")
    ok_ed = plus.partition == ed.partition and _invariant(ed, plus)
    rng = random.Random(7)
    tried, bad = 0, []
    for k, net in enumerate(CORPUS):
        pair = random_intra_edge(net, rng)
        if pair is None:
            continue
        tried += 1
        if not _invariant(net, add_edge(net, *pair)):
            bad.append(k)
    return ok_ed and not bad and tried > 0, f"Edelstein + A+B->B {ok_ed}; {tried} random edge additions, failures {bad}"


def criterion_7():
    nets = list(_nets()) + CORPUS
    bad = [k for k, net in enumerate(nets) if not ca.partition_equivalence_check(net)]
    return not bad, f"{len(nets)} networks, failures {bad}"


def criterion_8():
    nets = list(_nets()) + CORPUS
    bad, homogeneous = [], 0
    for k, net in enumerate(nets):
        tg, mg = ca.toric_ideal_TG(net), ca.moduli_ideal(net)
        if not all(g.is_binomial() for g in tg.generators + mg.generators):
            bad.append((k, "binomial"))
        pres = ca.rees_presentation(net)
        if any(ca.apply_phi(net, g, pres) for g in tg.generators):
            bad.append((k, "phi"))
        w = ca.find_positive_weights(net)
        if w is not None:
            homogeneous += 1
            grading = ca.grading(net, w.q)
            if not all(is_homogeneous(grading, g) for g in tg.generators):
                bad.append((k, "homogeneous"))
            if not ideal_equal(ca.special_fiber_ideal(net).fiber_ideal, mg):
                bad.append((k, "fiber"))
    return not bad, f"{len(nets)} networks ({homogeneous} with positive weights), failures {bad}"


D4 = VariableContext(("x1", "x2", "x3", "x4"), ())
DIMENSION_FIXTURES = [
    ([], 4),
    (["x1"], 3),
    (["x1", "x3"], 2),
    (["x1", "x2", "x3"], 1),
    (["x1", "x2", "x3", "x4"], 0),
    (["x1*x2 - x3^2"], 3),
    (["x2^3 - 2*x4 + 1"], 3),
]


def criterion_9():
    ideals = random_binomial_corpus(N_IDEALS, seed=2026)
    bad = []
    for k, ideal in enumerate(ideals):
        ctx = ideal.context
        for order in (lex(), grevlex()):
            gb = ideal.groebner_basis(order)
            if not (is_groebner_basis(gb, order) and is_reduced(gb, order)):
                bad.append((k, "confluence"))
            if any(reduce(g, gb, order)[0] for g in ideal.generators):
                bad.append((k, "membership"))
        keep = ctx.k_names
        kidx = {ctx.index[v] for v in keep}
        e1, e2 = eliminate(ideal, keep), eliminate(ideal, keep, inner=lex())
        if not all(g.support() <= kidx and ideal_member(g, ideal) for g in e1.generators):
            bad.append((k, "elimination"))
        if not ideal_equal(e1, e2):
            bad.append((k, "elimination order"))
    dims = []
    for gens, expected in DIMENSION_FIXTURES:
        got = dimension(Ideal(D4, [parse_polynomial(g, D4) for g in gens]))
        dims.append(got == expected)
    try:
        dimension(_ideal(D4, "x1", "x1 - 1"))
        unit_ok = False
    except UnitIdealError:
        unit_ok = True
    ok = not bad and all(dims) and unit_ok
    return ok, f"{len(ideals)} binomial ideals, failures {bad[:5]}; dimension fixtures {sum(dims)}/{len(dims)}; unit ideal raises {unit_ok}"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8, criterion_9]

TITLES = {
    1: "triangle network: T_G, M_G, special fiber, weights",
    2: "Edelstein network: T_G, M_G, special fiber",
    3: "Cayley toric ideals equal M_G and T_G",
    4: "extended Cayley toric ideal on Edelstein",
    5: "deficiency = Cayley nullity = codim M_G",
    6: "edge invariance",
    7: "partition equivalence",
    8: "binomial bases, kernel of phi, homogeneity and fiber",
    9: "Groebner engine correctness",
}


def _line(k, ok, detail):
    return f"[{'PASS' if ok else 'FAIL'}] criterion {k}: {TITLES[k]} ({detail})"


@pytest.mark.parametrize("k", range(1, len(CRITERIA) + 1))
def test_criterion(k, capsys):
    ok, detail = CRITERIA[k - 1]()
    with capsys.disabled():
        print("\n" + _line(k, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    results = []
    for k, fn in enumerate(CRITERIA, start=1):
        ok, detail = fn()
        results.append(ok)
        print(_line(k, ok, detail))
    sys.exit(0 if all(results) else 1)
