import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from multirees.groebner import (
    Ideal,
    UnitIdealError,
    codimension,
    dimension,
    eliminate,
    ideal_equal,
    ideal_member,
    is_groebner_basis,
    is_reduced,
    reduce,
    s_polynomial,
    saturate,
)
from multirees.poly_core import (
    ContextMismatch,
    Polynomial,
    VariableContext,
    grevlex,
    lex,
    parse_polynomial,
)
from multirees.randnet import random_binomial_corpus, random_binomial_ideal

CTX = VariableContext(("x1", "x2", "x3"), ("K1", "K2", "K3", "K4", "K5"))
CORPUS = random_binomial_corpus(60, seed=11)


def P(text, ctx=CTX):
    return parse_polynomial(text, ctx)


def I(*texts, ctx=CTX):
    return Ideal(ctx, [P(t, ctx) for t in texts])


def sympy_gb(ideal, order):
    """Reduced basis from sympy, returned as a set of our polynomials."""
    ctx = ideal.context
    gens = sympy.symbols(ctx.names)
    exprs = [sympy.sympify(str(g).replace("^", "**"), locals=dict(zip(ctx.names, gens))) for g in ideal.generators]
    gb = sympy.groebner(exprs, *gens, order=order)
    out = set()
    for g in gb.polys:
        terms = {tuple(m): Fraction(int(c.p), int(c.q)) for m, c in g.terms()}
        out.add(Polynomial(ctx, terms))
    return out


# -- reduction ---------------------------------------------------------------


def test_reduce_example():
    r, q = reduce(P("K1*x1 - K2"), [P("x1 - 1")], lex())
    assert r == P("K1 - K2")
    assert q[0] == P("K1")


def test_reduce_identity():
    f = P("x1^2*K3 - K1*K2 + 4*x2")
    G = [P("x1*K3 - K2"), P("K1 - x2")]
    r, q = reduce(f, G)
    assert q[0] * G[0] + q[1] * G[1] + r == f


def test_reduce_context_mismatch():
    other = VariableContext(("x1",), ("K1",))
    with pytest.raises(ContextMismatch):
        reduce(P("x1"), [parse_polynomial("x1", other)])


def test_binomial_mod_binomials_stays_binomial():
    r, _ = reduce(P("K1*x1^2 - K2*x2"), [P("x1 - K3"), P("x2 - K4")], lex())
    assert r == P("K1*K3^2 - K2*K4")


# -- bases -------------------------------------------------------------------


def test_two_line_example():
    gb = I("x1 - x2", "x2 - x3").groebner_basis(lex())
    assert gb == (P("x2 - x3"), P("x1 - x3"))


def test_triangle_binomials_basis():
    ideal = I("K3*x1 - K2*x2", "K2*x1 - K1*x2")
    gb = ideal.groebner_basis(grevlex())
    assert is_groebner_basis(gb)
    assert is_reduced(gb)
    assert all(g.is_binomial() for g in gb)


def test_unit_ideal():
    ideal = I("x1", "x1 - 1")
    assert ideal.groebner_basis() == (Polynomial.constant(CTX, 1),)
    assert ideal.is_unit()


def test_zero_ideal():
    assert I().groebner_basis() == ()
    assert Ideal(CTX, [Polynomial.zero(CTX)]).groebner_basis() == ()


def test_sorted_monic_output():
    gb = I("2*x1*K1 - 4*K2", "3*x2^2 - 6*K3").groebner_basis()
    order = grevlex()
    assert all(g.leading_term(order)[1] == 1 for g in gb)
    keys = [order.key(g.leading_term(order)[0]) for g in gb]
    assert keys == sorted(keys)


@pytest.mark.parametrize("order,name", [(lex(), "lex"), (grevlex(), "grevlex")])
@pytest.mark.parametrize("k", range(0, 60, 3))
def test_matches_sympy(order, name, k):
    ideal = CORPUS[k]
    assert set(ideal.groebner_basis(order)) == sympy_gb(ideal, name)


def test_matches_sympy_mixed_coefficients():
    ideal = I("2*x1^2 - 1/3*x2*K1 + K2", "x1*K1 - 5*K3", "x2^2 - x1")
    assert set(ideal.groebner_basis(grevlex())) == sympy_gb(ideal, "grevlex")


@settings(max_examples=40)
@given(st.integers(0, 10 ** 6))
def test_confluence_and_canonical(seed):
    rng = random.Random(seed)
    ideal = random_binomial_ideal(rng, nvars=4, ngens=rng.randint(1, 4))
    for order in (lex(), grevlex()):
        gb = ideal.groebner_basis(order)
        assert is_groebner_basis(gb, order)
        assert is_reduced(gb, order)
        assert all(g.is_binomial() for g in gb)
        # the generators reduce to zero and shuffling them changes nothing
        assert all(reduce(g, gb, order)[0].is_zero() for g in ideal.generators)
        gens = list(ideal.generators)
        rng.shuffle(gens)
        assert Ideal(ideal.context, gens).groebner_basis(order) == gb


@settings(max_examples=30)
@given(st.integers(0, 10 ** 6))
def test_order_independence_of_ideal(seed):
    ideal = random_binomial_ideal(random.Random(seed), nvars=4, ngens=3)
    glex = ideal.groebner_basis(lex())
    ggrl = ideal.groebner_basis(grevlex())
    assert all(reduce(g, ggrl, grevlex())[0].is_zero() for g in glex)
    assert all(reduce(g, glex, lex())[0].is_zero() for g in ggrl)


def test_s_polynomial_cancels_leading_terms():
    f, g = P("x1^2*K1 - K2"), P("x1*K1^2 - K3")
    assert s_polynomial(f, g, lex()) == P("x1*K3 - K1*K2")


# -- saturation --------------------------------------------------------------


def test_saturation_removes_component():
    # <x1*K1 - x1*K2> : x1^oo = <K1 - K2>
    sat = saturate(I("x1*K1 - x1*K2"), P("x1"))
    assert ideal_equal(sat, I("K1 - K2"))


def test_saturation_unit():
    assert saturate(I("x1*x2"), P("x1*x2")).is_unit()


def test_saturation_by_zero():
    with pytest.raises(ValueError):
        saturate(I("x1"), Polynomial.zero(CTX))


def test_saturation_names_do_not_clash():
    ctx = VariableContext(("x1",), ("K1", "K2"), ("y",))
    ideal = Ideal(ctx, [parse_polynomial("x1*y - x1*K1", ctx)])
    sat = saturate(ideal, parse_polynomial("x1", ctx))
    assert ideal_equal(sat, Ideal(ctx, [parse_polynomial("y - K1", ctx)]))


@pytest.mark.parametrize("k", range(0, 60, 2))
def test_saturation_contains_and_idempotent(k):
    ideal = CORPUS[k]
    f = Polynomial.variable(ideal.context, ideal.context.x_names[0])
    sat = saturate(ideal, f)
    assert all(ideal_member(g, sat) for g in ideal.generators)
    assert ideal_equal(saturate(sat, f), sat)
    assert all(g.is_binomial() or g.is_constant() for g in sat.generators)


# -- elimination -------------------------------------------------------------


def test_eliminate_example():
    elim = eliminate(I("x1 - K1", "x1 - K2"), ["K1", "K2"])
    assert ideal_equal(elim, I("K1 - K2"))


@pytest.mark.parametrize("k", range(60))
def test_elimination_soundness(k):
    ideal = CORPUS[k]
    keep = ideal.context.k_names
    elim = eliminate(ideal, keep)
    keep_idx = {ideal.context.index[v] for v in keep}
    assert all(g.support() <= keep_idx for g in elim.generators)
    assert all(ideal_member(g, ideal) for g in elim.generators)
    # completeness: x-block variables precede the K-block, so sympy's lex basis
    # restricted to the K variables generates the elimination ideal
    expected = [g for g in sympy_gb(ideal, "lex") if g.support() <= keep_idx]
    assert ideal_equal(elim, Ideal(ideal.context, expected))


# -- dimension ---------------------------------------------------------------

D4 = VariableContext(("x1", "x2", "x3", "x4"), ())


@pytest.mark.parametrize(
    "gens,expected",
    [
        ([], 4),
        (["x1"], 3),
        (["x1", "x2"], 2),
        (["x1", "x2", "x3", "x4"], 0),
        (["x1*x2 - x3^2"], 3),
        (["x1^3 + x2*x4 - 7"], 3),
        (["x1*x2"], 3),
        (["x1*x3", "x2*x4"], 2),
        (["x1 - x2^2", "x3 - x2^3"], 2),
    ],
)
def test_dimension_fixtures(gens, expected):
    ideal = Ideal(D4, [parse_polynomial(g, D4) for g in gens])
    assert dimension(ideal) == expected
    assert codimension(ideal) == 4 - expected


def test_dimension_over_subring():
    ideal = I("K1*K3 - K2*K5")
    assert dimension(ideal, over=CTX.k_names) == 4
    with pytest.raises(ValueError):
        dimension(I("x1 - K1"), over=CTX.k_names)


def test_dimension_unit_ideal_raises():
    with pytest.raises(UnitIdealError):
        dimension(I("x1", "x1 + 1"))


def test_basis_prints_leading_term_first():
    ctx = VariableContext(("x1", "x2"), ("K1", "K2", "K3"))
    ideal = Ideal(ctx, [parse_polynomial("K1*K3 - K2^2", ctx)])
    assert str(ideal.groebner_basis(lex())[0]) == "K1*K3 - K2^2"
    assert str(ideal.groebner_basis(grevlex())[0]) == "K2^2 - K1*K3"
