"""Buchberger's algorithm and the ideal operations built on it.

Work happens on plain ``dict`` polynomials (exponent tuple -> Fraction); the
public functions wrap and unwrap :class:`~multirees.poly_core.Polynomial`.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .poly_core import (
    ContextMismatch,
    Exponents,
    MonomialOrder,
    Polynomial,
    VariableContext,
    block_order,
    grevlex,
)

_Raw = Dict[Exponents, Fraction]


class UnitIdealError(ValueError):
    """The ideal is the whole ring, so the requested quantity is undefined."""


def _divides(a: Exponents, b: Exponents) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _lcm(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x if x > y else y for x, y in zip(a, b))


def _coprime(a: Exponents, b: Exponents) -> bool:
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


def _sub(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x - y for x, y in zip(a, b))


def _axpy(p: _Raw, q: Fraction, shift: Exponents, g: _Raw) -> None:
    """p -= q * x^shift * g, in place."""
    for m, c in g.items():
        mm = tuple(x + y for x, y in zip(m, shift))
        v = p.get(mm, 0) - q * c
        if v:
            p[mm] = v
        else:
            p.pop(mm, None)


class _Basis:
    """Polynomials with cached leading data for repeated division."""

    def __init__(self, key):
        self.key = key
        self.polys: List[_Raw] = []
        self.lms: List[Exponents] = []
        self.lcs: List[Fraction] = []
        self.live: List[bool] = []
        self.sugar: List[int] = []

    def add(self, p: _Raw, sugar: Optional[int] = None) -> int:
        lm = max(p, key=self.key)
        self.polys.append(p)
        self.lms.append(lm)
        self.lcs.append(p[lm])
        self.live.append(True)
        self.sugar.append(_tdeg(p) if sugar is None else sugar)
        return len(self.polys) - 1

    def reducer(self, m: Exponents, skip: int = -1) -> int:
        for i, lm in enumerate(self.lms):
            if i != skip and self.live[i] and _divides(lm, m):
                return i
        return -1

    def normal_form(self, f: _Raw, skip: int = -1, sugar: int = 0) -> Tuple[_Raw, int]:
        """Full reduction of ``f``; also returns the sugar of the result."""
        p = dict(f)
        r: _Raw = {}
        key = self.key
        while p:
            lm = max(p, key=key)
            i = self.reducer(lm, skip)
            if i < 0:
                r[lm] = p.pop(lm)
            else:
                shift = _sub(lm, self.lms[i])
                sugar = max(sugar, self.sugar[i] + sum(shift))
                _axpy(p, p[lm] / self.lcs[i], shift, self.polys[i])
        return r, sugar


def _tdeg(p: _Raw) -> int:
    return max(sum(m) for m in p)


def _monic(p: _Raw, key) -> _Raw:
    c = p[max(p, key=key)]
    if c == 1:
        return p
    return {m: v / c for m, v in p.items()}


def _raw_groebner(gens: Sequence[_Raw], order: MonomialOrder) -> List[_Raw]:
    """Reduced Groebner basis, sorted ascending by leading monomial."""
    key = order.key
    basis = _Basis(key)
    pending = set()
    heap: list = []

    def push(i: int, j: int) -> None:
        li, lj = basis.lms[i], basis.lms[j]
        lcm = _lcm(li, lj)
        d = sum(lcm)
        sugar = max(basis.sugar[i] + d - sum(li), basis.sugar[j] + d - sum(lj))
        pending.add((i, j))
        heapq.heappush(heap, (sugar, key(lcm), i, j, lcm))

    for g in gens:
        if not g:
            continue
        g, sug = basis.normal_form(g, sugar=_tdeg(g))
        if not g:
            continue
        new = basis.add(_monic(g, key), sug)
        for i in range(new):
            push(i, new)

    while heap:
        sugar, _, i, j, lcm = heapq.heappop(heap)
        pending.discard((i, j))
        if _coprime(basis.lms[i], basis.lms[j]):
            continue
        if _chain_skip(basis, pending, i, j, lcm):
            continue
        fi, fj = basis.polys[i], basis.polys[j]
        shift = _sub(lcm, basis.lms[i])
        s = {tuple(a + b for a, b in zip(m, shift)): c for m, c in fi.items()}
        _axpy(s, Fraction(1), _sub(lcm, basis.lms[j]), fj)
        if not s:
            continue
        h, sug = basis.normal_form(s, sugar=sugar)
        if not h:
            continue
        new = basis.add(_monic(h, key), sug)
        for k in range(new):
            push(k, new)

    return _reduce_basis(basis, key)


def _chain_skip(basis: _Basis, pending: set, i: int, j: int, lcm: Exponents) -> bool:
    # skip (i, j) if some k has lm_k | lcm(i, j) and both (i, k), (j, k) are done
    for k, lm in enumerate(basis.lms):
        if k == i or k == j or not _divides(lm, lcm):
            continue
        if (min(i, k), max(i, k)) in pending or (min(j, k), max(j, k)) in pending:
            continue
        return True
    return False


def _reduce_basis(basis: _Basis, key) -> List[_Raw]:
    n = len(basis.polys)
    keep = []
    for i in range(n):
        lm = basis.lms[i]
        redundant = False
        for j in range(n):
            if j == i or not _divides(basis.lms[j], lm):
                continue
            if basis.lms[j] != lm or j < i:
                redundant = True
                break
        if not redundant:
            keep.append(i)
    mini = _Basis(key)
    for i in keep:
        mini.add(basis.polys[i])
    out = []
    for i in range(len(mini.polys)):
        lm = mini.lms[i]
        p = mini.polys[i]
        tail = {m: c for m, c in p.items() if m != lm}
        tail, _ = mini.normal_form(tail, skip=i)
        tail[lm] = p[lm]
        out.append(_monic(tail, key))
    out.sort(key=lambda p: key(max(p, key=key)))
    return out


# ---------------------------------------------------------------------------
# Ideals


class Ideal:
    """Generators plus lazily computed reduced Groebner bases (one per order)."""

    def __init__(self, context: VariableContext, generators: Iterable[Polynomial] = ()):
        gens = []
        for g in generators:
            if g.context != context:
                raise ContextMismatch("generator lives in another context")
            if g:
                gens.append(g)
        self.context = context
        self.generators: Tuple[Polynomial, ...] = tuple(gens)
        self._gb: Dict[MonomialOrder, Tuple[Polynomial, ...]] = {}

    def groebner_basis(self, order: Optional[MonomialOrder] = None) -> Tuple[Polynomial, ...]:
        order = order or _DEFAULT
        gb = self._gb.get(order)
        if gb is None:
            gb = tuple(buchberger(self, order))
            self._gb[order] = gb
        return gb

    def _seed(self, order: MonomialOrder, gb: Sequence[Polynomial]) -> None:
        self._gb[order] = tuple(gb)

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        gb = self.groebner_basis()
        return len(gb) == 1 and gb[0].is_constant()

    def __contains__(self, f: Polynomial) -> bool:
        return ideal_member(f, self)

    def __repr__(self):
        return f"Ideal<{', '.join(map(str, self.generators)) or '0'}>"


_DEFAULT = grevlex()


def reduce(f: Polynomial, G: Sequence[Polynomial], order: Optional[MonomialOrder] = None):
    """Multivariate division of ``f`` by ``G``.

    The leading term is reduced first and divisors are tried in list order.
    Returns ``(remainder, quotients)`` with ``f = sum(q_i * g_i) + remainder``.
    """
    order = order or _DEFAULT
    ctx = f.context
    for g in G:
        if g.context != ctx:
            raise ContextMismatch("divisor lives in another context")
    key = order.key
    divs = [(g.term_dict, *g.leading_term(order)) for g in G if g]
    idx = [i for i, g in enumerate(G) if g]
    quot: List[_Raw] = [{} for _ in G]
    p = f.term_dict
    r: _Raw = {}
    while p:
        lm = max(p, key=key)
        c = p[lm]
        for pos, (g, glm, glc) in enumerate(divs):
            if _divides(glm, lm):
                q = c / glc
                shift = _sub(lm, glm)
                qd = quot[idx[pos]]
                qd[shift] = qd.get(shift, 0) + q
                _axpy(p, q, shift, g)
                break
        else:
            r[lm] = p.pop(lm)
    return (
        Polynomial._raw(ctx, r),
        [Polynomial(ctx, q) for q in quot],
    )


def buchberger(I: Ideal, order: Optional[MonomialOrder] = None) -> List[Polynomial]:
    order = order or _DEFAULT
    order.validate(I.context.nvars)
    raw = _raw_groebner([g.term_dict for g in I.generators], order)
    return [Polynomial._raw(I.context, p, order) for p in raw]


def s_polynomial(f: Polynomial, g: Polynomial, order: Optional[MonomialOrder] = None) -> Polynomial:
    order = order or _DEFAULT
    (mf, cf), (mg, cg) = f.leading_term(order), g.leading_term(order)
    lcm = _lcm(mf, mg)
    return f.mul_monomial(_sub(lcm, mf), 1 / cf) - g.mul_monomial(_sub(lcm, mg), 1 / cg)


def is_groebner_basis(G: Sequence[Polynomial], order: Optional[MonomialOrder] = None) -> bool:
    """Every S-polynomial reduces to zero."""
    for f, g in combinations(G, 2):
        r, _ = reduce(s_polynomial(f, g, order), G, order)
        if r:
            return False
    return True


def is_reduced(G: Sequence[Polynomial], order: Optional[MonomialOrder] = None) -> bool:
    order = order or _DEFAULT
    lts = [g.leading_term(order) for g in G]
    if any(c != 1 for _, c in lts):
        return False
    for i, g in enumerate(G):
        for j, (lm, _) in enumerate(lts):
            if i != j and any(_divides(lm, m) for m in g.term_dict):
                return False
    return True


def _indices(ctx: VariableContext, variables: Iterable) -> List[int]:
    out = set()
    for v in variables:
        out.add(ctx.index[v] if isinstance(v, str) else int(v))
    return sorted(out)


def eliminate(I: Ideal, keep: Iterable, inner: Optional[MonomialOrder] = None) -> Ideal:
    """Generators of ``I`` intersected with the subring on ``keep``.

    The result stays in ``I.context``; its generators (the reduced basis of
    the elimination ideal) only involve variables in ``keep``.
    """
    ctx = I.context
    keep_idx = _indices(ctx, keep)
    drop = [i for i in range(ctx.nvars) if i not in set(keep_idx)]
    order = block_order([(drop, grevlex()), (keep_idx, inner or grevlex())])
    gb = I.groebner_basis(order)
    dropped = set(drop)
    kept = [g for g in gb if not (g.support() & dropped)]
    return Ideal(ctx, kept)


def saturate(I: Ideal, f: Polynomial, order: Optional[MonomialOrder] = None) -> Ideal:
    """``I : f^oo`` via a fresh variable ``y``, generator ``y*f - 1``, and elimination.

    The returned ideal's generators are its reduced basis in ``order``
    (grevlex by default), restricted from the block order ``{y} > rest``.
    """
    if not f:
        raise ValueError("cannot saturate with respect to the zero polynomial")
    ctx = I.context
    if f.context != ctx:
        raise ContextMismatch("saturating polynomial lives in another context")
    order = order or _DEFAULT
    y = ctx.fresh_name("y")
    big = ctx.with_aux(y)
    yv = Polynomial.variable(big, y)
    gens = [g.embed(big) for g in I.generators]
    gens.append(yv * f.embed(big) - 1)
    n = ctx.nvars
    big_order = block_order([([n], grevlex()), (range(n), order)])
    gb = _raw_groebner([g.term_dict for g in gens], big_order)
    kept = [Polynomial._raw(ctx, {m[:n]: c for m, c in p.items()}, order) for p in gb if not any(m[n] for m in p)]
    J = Ideal(ctx, kept)
    J._seed(order, kept)
    return J


def ideal_equal(I: Ideal, J: Ideal, order: Optional[MonomialOrder] = None) -> bool:
    if I.context != J.context:
        raise ContextMismatch("ideals live in different contexts")
    order = order or _DEFAULT
    return I.groebner_basis(order) == J.groebner_basis(order)


def ideal_member(f: Polynomial, I: Ideal, order: Optional[MonomialOrder] = None) -> bool:
    if f.context != I.context:
        raise ContextMismatch("polynomial and ideal live in different contexts")
    gb = I.groebner_basis(order)
    r, _ = reduce(f, gb, order or _DEFAULT)
    return r.is_zero()


def ideal_sum(*ideals: Ideal) -> Ideal:
    ctx = ideals[0].context
    return Ideal(ctx, [g for I in ideals for g in I.generators])


def dimension(I: Ideal, over: Optional[Iterable] = None) -> int:
    """Krull dimension of ``K[over] / I``.

    ``over`` defaults to all variables and must contain every variable used by
    the generators.  This is the largest variable set ``U`` such that no
    leading monomial of the reduced grevlex basis lies in ``K[U]``.
    """
    ctx = I.context
    vars_ = _indices(ctx, over) if over is not None else list(range(ctx.nvars))
    used = set().union(*(g.support() for g in I.generators)) if I.generators else set()
    if not used <= set(vars_):
        raise ValueError("ideal uses variables outside the requested ring")
    gb = I.groebner_basis()
    if any(g.is_constant() for g in gb):
        raise UnitIdealError("dimension of the unit ideal is undefined")
    lm_supports = [frozenset(i for i, e in enumerate(g.leading_term()[0]) if e) for g in gb]
    involved = sorted(set().union(*lm_supports)) if lm_supports else []
    free = len(vars_) - len(involved)
    best = 0
    # independent sets are closed under subsets; search from the largest size down
    for size in range(len(involved), -1, -1):
        for U in combinations(involved, size):
            Us = set(U)
            if not any(s <= Us for s in lm_supports):
                best = size
                break
        else:
            continue
        break
    return free + best


def codimension(I: Ideal, over: Optional[Iterable] = None) -> int:
    n = len(_indices(I.context, over)) if over is not None else I.context.nvars
    return n - dimension(I, over)
