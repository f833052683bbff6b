"""Ideals and matrices attached to a reaction network.

For a network with species ``x1..xs`` and complexes ``K1..Kn`` grouped into
components ``A_1..A_l``, the presentation map of the multi-Rees algebra sends
``K_i`` to ``x^{v_i} t_k`` for ``i`` in ``A_k``.  Its kernel ``T_G`` is
computed as the saturation of the binomials ``K_i x^{v_j} - K_j x^{v_i}``
(``i, j`` in one block) by the product of all species variables.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from .groebner import Ideal, eliminate, ideal_equal, ideal_member, ideal_sum, saturate
from .matrix import IntegerMatrix, nullspace, primitive
from .network import Network, is_weakly_reversible, y_matrix
from .poly_core import (
    Multigrading,
    MonomialOrder,
    Polynomial,
    VariableContext,
    block_order,
    grevlex,
    is_homogeneous,
    substitute,
)


class NotWeaklyReversible(ValueError):
    """T_G is only defined for weakly reversible networks."""


def network_context(net: Network) -> VariableContext:
    return VariableContext.for_network(net.s, net.n)


def tg_order(ctx: VariableContext) -> MonomialOrder:
    """Block order ``{x} > {K}``, grevlex inside each block."""
    return block_order([(ctx.x_indices, grevlex()), (ctx.k_indices, grevlex())])


def x_monomial(ctx: VariableContext, v: Sequence[int]) -> Tuple[int, ...]:
    return tuple(v) + (0,) * (ctx.nvars - len(v))


def _k_exps(ctx: VariableContext, i: int) -> Tuple[int, ...]:
    e = [0] * ctx.nvars
    e[len(ctx.x_names) + i] = 1
    return tuple(e)


def _product(ctx: VariableContext, indices) -> Polynomial:
    e = [0] * ctx.nvars
    for j in indices:
        e[j] = 1
    return Polynomial.monomial(ctx, tuple(e))


def _pair_binomial(ctx: VariableContext, net: Network, i: int, j: int) -> Polynomial:
    """``K_i x^{v_j} - K_j x^{v_i}``."""
    ti = tuple(a + b for a, b in zip(_k_exps(ctx, i), x_monomial(ctx, net.vertices[j])))
    tj = tuple(a + b for a, b in zip(_k_exps(ctx, j), x_monomial(ctx, net.vertices[i])))
    return Polynomial(ctx, {ti: 1, tj: -1})


def block_binomials(net: Network, block: Sequence[int], ctx: Optional[VariableContext] = None) -> List[Polynomial]:
    ctx = ctx or network_context(net)
    block = sorted(block)
    return [_pair_binomial(ctx, net, i, j) for a, i in enumerate(block) for j in block[a + 1:]]


def binomial_generators(net: Network) -> Ideal:
    """The pre-saturation ideal T'_A, one binomial per pair inside a block."""
    ctx = network_context(net)
    gens = [g for block in net.partition for g in block_binomials(net, block, ctx)]
    return Ideal(ctx, gens)


def _require_wr(net: Network, as_partition: bool) -> None:
    if not as_partition and not is_weakly_reversible(net):
        raise NotWeaklyReversible(
            "network is not weakly reversible; pass as_partition=True to use its components as complete digraphs"
        )


def toric_ideal_TG(net: Network, as_partition: bool = False) -> Ideal:
    """T_G with generators its reduced basis under :func:`tg_order`.

    Non weakly reversible input is refused unless ``as_partition`` is set,
    in which case each component is treated as a complete digraph.
    """
    _require_wr(net, as_partition)
    return _tg(net)


@lru_cache(maxsize=4096)
def _tg(net: Network) -> Ideal:
    ctx = network_context(net)
    return saturate(binomial_generators(net), _product(ctx, ctx.x_indices), order=tg_order(ctx))


def moduli_ideal(net: Network, as_partition: bool = False) -> Ideal:
    _require_wr(net, as_partition)
    return _mg(net)


@lru_cache(maxsize=4096)
def _mg(net: Network) -> Ideal:
    tg = _tg(net)
    ctx = tg.context
    # the tg_order basis restricted to K is the reduced K-block basis
    gb = tg.groebner_basis(tg_order(ctx))
    xs = set(ctx.x_indices)
    return Ideal(ctx, [g for g in gb if not (g.support() & xs)])


def moduli_ideal_by_elimination(net: Network, as_partition: bool = False) -> Ideal:
    """Same ideal as :func:`moduli_ideal` but through the generic eliminator."""
    tg = toric_ideal_TG(net, as_partition)
    return eliminate(tg, tg.context.k_indices)


# ---------------------------------------------------------------------------
# Cayley matrices and toric ideals of matrices

CAYLEY_VARIANTS = ("standard", "modified", "extended")


def cayley_matrix(net: Network, variant: str = "standard") -> IntegerMatrix:
    """Cayley matrix of ``net``.

    ``standard`` appends one 0/1 indicator row per component to Y;
    ``modified`` and ``extended`` additionally put ``I_s`` / ``-I_s`` in
    front (zero rows below it).  Columns follow :func:`cayley_columns`.
    """
    if variant not in CAYLEY_VARIANTS:
        raise ValueError(f"unknown Cayley variant {variant!r}")
    Y, perm = y_matrix(net)
    comp = net.component_of
    indicator = IntegerMatrix([[1 if comp[i] == k else 0 for i in perm] for k in range(net.l)], net.n)
    cay = Y.vstack(indicator)
    if variant == "standard":
        return cay
    sign = 1 if variant == "modified" else -1
    left = IntegerMatrix.identity(net.s, sign).vstack(IntegerMatrix.zeros(net.l, net.s))
    return left.hstack(cay)


def cayley_columns(net: Network, variant: str = "standard") -> List[str]:
    """Variable name attached to each column of :func:`cayley_matrix`."""
    ctx = network_context(net)
    _, perm = y_matrix(net)
    ks = [ctx.k_names[i] for i in perm]
    return ks if variant == "standard" else list(ctx.x_names) + ks


def toric_ideal_of_matrix(A: IntegerMatrix, context: VariableContext, columns: Sequence[str]) -> Ideal:
    """Kernel of ``column_j -> u^{A[:, j]}`` as an ideal of ``context``.

    Row variables ``u1..ur`` are adjoined and ``<col_j - u^{a_j}>`` is
    intersected with the column subring.  Negative entries are made
    polynomial with a witness ``w`` subject to ``w * u1*...*ur = 1``.
    """
    if len(columns) != A.cols:
        raise ValueError("need one variable per column")
    rows = [context.fresh_name(f"u{r + 1}") for r in range(A.rows)]
    negative = any(x < 0 for row in A.entries for x in row)
    aux = list(rows)
    if negative:
        aux.append(context.fresh_name("w"))
    big = context.with_aux(*aux)
    base = context.nvars
    gens = []
    for j, name in enumerate(columns):
        a = A.column(j)
        lift = max([0] + [-x for x in a])
        e = [0] * big.nvars
        for r, x in enumerate(a):
            e[base + r] = x + lift
        if lift:
            e[base + A.rows] = lift
        gens.append(Polynomial.variable(big, name) - Polynomial.monomial(big, tuple(e)))
    if negative:
        e = [0] * big.nvars
        for r in range(A.rows + 1):
            e[base + r] = 1
        gens.append(Polynomial.monomial(big, tuple(e)) - 1)
    keep = [big.index[c] for c in columns]
    elim = Ideal(big, gens)
    top = [i for i in range(big.nvars) if i not in set(keep)]
    order = block_order([(top, grevlex()), (keep, grevlex())])
    gb = elim.groebner_basis(order)
    topset = set(top)
    kept = [g.restrict(context) for g in gb if not (g.support() & topset)]
    return Ideal(context, kept)


def cayley_toric_ideal(net: Network, variant: str = "standard") -> Ideal:
    return toric_ideal_of_matrix(cayley_matrix(net, variant), network_context(net), cayley_columns(net, variant))


# ---------------------------------------------------------------------------
# Rees algebra data


@dataclass(frozen=True)
class ReesPresentation:
    context: VariableContext
    phi_images: Dict[str, Polynomial]
    monomial_ideals: Tuple[Tuple[Polynomial, ...], ...]


def rees_presentation(net: Network) -> ReesPresentation:
    base = network_context(net)
    ctx = base.with_aux(*(f"t{k + 1}" for k in range(net.l)))
    Y, perm = y_matrix(net)
    cay = cayley_matrix(net)
    images = {}
    for col, i in enumerate(perm):
        a = cay.column(col)
        e = [0] * ctx.nvars
        for j in range(net.s):
            e[j] = a[j]
        for k in range(net.l):
            e[len(ctx.x_names) + net.n + k] = a[net.s + k]
        images[ctx.k_names[i]] = Polynomial.monomial(ctx, tuple(e))
    ideals = tuple(
        tuple(Polynomial.monomial(ctx, x_monomial(ctx, net.vertices[i])) for i in block) for block in net.partition
    )
    return ReesPresentation(ctx, images, ideals)


def rees_generators(net: Network) -> List[Polynomial]:
    """``x^{v_i} t_k`` for each vertex, in vertex order."""
    pres = rees_presentation(net)
    return [pres.phi_images[name] for name in pres.context.k_names]


def apply_phi(net: Network, f: Polynomial, pres: Optional[ReesPresentation] = None) -> Polynomial:
    pres = pres or rees_presentation(net)
    return substitute(f.embed(pres.context), pres.phi_images, pres.context)


def kernel_soundness_check(net: Network, tg: Optional[Ideal] = None) -> bool:
    tg = tg if tg is not None else _tg(net)
    pres = rees_presentation(net)
    if any(apply_phi(net, g, pres) for g in tg.generators):
        return False
    return all(ideal_member(b, tg) for b in binomial_generators(net).generators)


# ---------------------------------------------------------------------------
# gradings and the special fiber


@dataclass(frozen=True)
class WeightWitness:
    q: Tuple[int, ...]
    d: Tuple[int, ...]


def _fm_eliminate(rows: List[Tuple[Tuple[Fraction, ...], Fraction]], var: int):
    """Fourier-Motzkin step on constraints ``a . q >= b``."""
    pos, neg, zero = [], [], []
    for a, b in rows:
        (pos if a[var] > 0 else neg if a[var] < 0 else zero).append((a, b))
    out = list(zero)
    for ap, bp in pos:
        for an, bn in neg:
            fp, fn = ap[var], -an[var]
            a = tuple(fn * x + fp * y for x, y in zip(ap, an))
            out.append((a, fn * bp + fp * bn))
    return _dedupe(out)


def _dedupe(rows):
    seen = {}
    for a, b in rows:
        lead = next((x for x in a if x), None)
        if lead is None:
            seen[(a, b)] = (a, b)
            continue
        s = abs(lead)
        key = (tuple(x / s for x in a), b / s)
        seen.setdefault(key, key)
    return list(seen.values())


def lexmin_point(equalities: Sequence[Sequence[int]], lower: Fraction, dim: int) -> Optional[Tuple[Fraction, ...]]:
    """Lexicographically smallest ``q`` with ``E q = 0`` and every ``q_j >= lower``.

    Exact Fourier-Motzkin: project onto ``q_1`` to read its minimum, fix it,
    and repeat for the remaining coordinates.
    """
    rows = []
    for e in equalities:
        a = tuple(Fraction(x) for x in e)
        rows.append((a, Fraction(0)))
        rows.append((tuple(-x for x in a), Fraction(0)))
    for j in range(dim):
        rows.append((tuple(Fraction(1 if i == j else 0) for i in range(dim)), Fraction(lower)))
    rows = _dedupe(rows)
    fixed: List[Fraction] = []
    for j in range(dim):
        proj = rows
        for var in range(dim - 1, j, -1):
            proj = _fm_eliminate(proj, var)
        lo = None
        for a, b in proj:
            if a[j] > 0:
                bound = b / a[j]
                lo = bound if lo is None or bound > lo else lo
            elif a[j] == 0 and b > 0:
                return None
        hi_ok = all(b <= a[j] * lo for a, b in proj if a[j] < 0) if lo is not None else True
        if lo is None or not hi_ok:
            return None
        fixed.append(lo)
        # substitute q_j = lo
        rows = _dedupe([
            (tuple(Fraction(0) if i == j else x for i, x in enumerate(a)), b - a[j] * lo) for a, b in rows
        ])
    return tuple(fixed)


def find_positive_weights(net: Network) -> Optional[WeightWitness]:
    """Positive species weights making every block's complexes equal-degree."""
    eqs = []
    for block in net.partition:
        first = net.vertices[block[0]]
        for i in block[1:]:
            eqs.append([a - b for a, b in zip(net.vertices[i], first)])
    if eqs and not nullspace(eqs, net.s):
        return None
    point = lexmin_point(eqs, Fraction(1), net.s)
    if point is None:
        return None
    q = primitive(point)
    d = tuple(sum(a * b for a, b in zip(q, net.vertices[block[0]])) for block in net.partition)
    return WeightWitness(q, d)


def grading(net: Network, q: Sequence[int]) -> Multigrading:
    return Multigrading(tuple(q), net.component_of, net.l)


def homogeneity_check(net: Network, q: Optional[Sequence[int]] = None, tg: Optional[Ideal] = None) -> bool:
    if q is None:
        w = find_positive_weights(net)
        if w is None:
            raise ValueError("no positive weight witness; supply weights explicitly")
        q = w.q
    tg = tg if tg is not None else _tg(net)
    g = grading(net, q)
    return all(is_homogeneous(g, p) for p in tg.generators)


@dataclass(frozen=True)
class FiberResult:
    fiber_ideal: Ideal
    homogeneous_case: bool
    weights: Optional[WeightWitness]
    matches_moduli: Optional[bool]


def special_fiber_ideal(net: Network, as_partition: bool = False) -> FiberResult:
    """Image of T_G under ``x -> 0`` inside ``K[K]``.

    When a positive weight witness exists the result must coincide with the
    moduli ideal; ``matches_moduli`` records that comparison.
    """
    tg = toric_ideal_TG(net, as_partition)
    ctx = tg.context
    zero = Polynomial.zero(ctx)
    at_zero = {name: zero for name in ctx.x_names}
    fiber = Ideal(ctx, [substitute(g, at_zero, ctx) for g in tg.generators])
    fiber = Ideal(ctx, fiber.groebner_basis())
    w = find_positive_weights(net)
    matches = None
    if w is not None:
        matches = ideal_equal(fiber, moduli_ideal(net, as_partition))
    return FiberResult(fiber, w is not None, w, matches)


# ---------------------------------------------------------------------------
# two routes to T_G


def species_of_block(net: Network, block: Sequence[int]) -> List[int]:
    return sorted({j for i in block for j, e in enumerate(net.vertices[i]) if e})


def tg_per_component(net: Network) -> Ideal:
    """``(T_{G_1} + ... + T_{G_l}) : (x1...xs)^oo`` with each ``T_{G_k}``
    saturated at the product of the species occurring in its component."""
    ctx = network_context(net)
    parts = []
    for block in net.partition:
        gens = block_binomials(net, block, ctx)
        local = Ideal(ctx, gens)
        species = species_of_block(net, block)
        if gens and species:
            local = saturate(local, _product(ctx, species))
        parts.append(local)
    total = ideal_sum(*parts) if parts else Ideal(ctx)
    return saturate(total, _product(ctx, ctx.x_indices))


def partition_equivalence_check(net: Network) -> bool:
    direct = _tg(net)
    return ideal_equal(tg_per_component(net), direct)
