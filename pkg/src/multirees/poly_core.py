"""Exact sparse multivariate polynomials over the rationals.

Variables live in a :class:`VariableContext` split into three blocks
(species ``x``, vertex ``K``, auxiliary).  Exponents are stored as dense
tuples indexed by the context; polynomials are sparse maps from exponent
tuples to :class:`fractions.Fraction` coefficients.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple, Union

Exponents = Tuple[int, ...]
Scalar = Union[int, Fraction]


class ContextMismatch(ValueError):
    """Raised when objects from different variable contexts are combined."""


class PolynomialSyntaxError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Variable contexts


@dataclass(frozen=True)
class VariableContext:
    """Ordered variables: x-block first, then K-block, then auxiliaries."""

    x_names: Tuple[str, ...] = ()
    k_names: Tuple[str, ...] = ()
    aux_names: Tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "x_names", tuple(self.x_names))
        object.__setattr__(self, "k_names", tuple(self.k_names))
        object.__setattr__(self, "aux_names", tuple(self.aux_names))
        names = self.names
        if not names:
            raise ValueError("a context needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")

    @classmethod
    def for_network(cls, s: int, n: int, aux: Sequence[str] = ()) -> "VariableContext":
        return cls(
            tuple(f"x{j + 1}" for j in range(s)),
            tuple(f"K{i + 1}" for i in range(n)),
            tuple(aux),
        )

    @property
    def names(self) -> Tuple[str, ...]:
        return self.x_names + self.k_names + self.aux_names

    @property
    def nvars(self) -> int:
        return len(self.x_names) + len(self.k_names) + len(self.aux_names)

    @cached_property
    def index(self) -> Dict[str, int]:
        return {name: i for i, name in enumerate(self.names)}

    @property
    def x_indices(self) -> range:
        return range(len(self.x_names))

    @property
    def k_indices(self) -> range:
        s = len(self.x_names)
        return range(s, s + len(self.k_names))

    @property
    def aux_indices(self) -> range:
        start = len(self.x_names) + len(self.k_names)
        return range(start, self.nvars)

    def fresh_name(self, base: str) -> str:
        if base not in self.index:
            return base
        i = 1
        while f"{base}{i}" in self.index:
            i += 1
        return f"{base}{i}"

    def with_aux(self, *names: str) -> "VariableContext":
        """Extend by auxiliaries; new variables are appended at the end."""
        return VariableContext(self.x_names, self.k_names, self.aux_names + tuple(names))

    def var(self, name: str) -> "Polynomial":
        return Polynomial.variable(self, name)

    def monomial(self, powers: Mapping[str, int]) -> Exponents:
        exps = [0] * self.nvars
        for name, e in powers.items():
            exps[self.index[name]] += e
        return tuple(exps)

    def format_monomial(self, exps: Exponents) -> str:
        factors = []
        for name, e in zip(self.names, exps):
            if e == 1:
                factors.append(name)
            elif e:
                factors.append(f"{name}^{e}")
        return "*".join(factors) if factors else "1"


# ---------------------------------------------------------------------------
# Monomial orders


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order given by a sort key on exponent tuples.

    ``kind`` is one of ``lex``, ``grevlex``, ``wgrevlex`` or ``block``.
    Block orders compare the restricted exponent vectors block by block in
    the order listed; each block carries its own inner order.
    """

    kind: str
    weights: Tuple[Fraction, ...] = ()
    blocks: Tuple[Tuple[Tuple[int, ...], "MonomialOrder"], ...] = ()
    _cache: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex", "wgrevlex", "block"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "wgrevlex":
            w = tuple(Fraction(x) for x in self.weights)
            if any(x <= 0 for x in w):
                raise ValueError("weights must be positive")
            object.__setattr__(self, "weights", w)
        if self.kind == "block":
            blocks = tuple((tuple(idx), inner) for idx, inner in self.blocks if len(idx))
            object.__setattr__(self, "blocks", blocks)

    def key(self, exps: Exponents):
        try:
            return self._cache[exps]
        except KeyError:
            pass
        k = self._key(exps)
        self._cache[exps] = k
        return k

    def _key(self, exps: Exponents):
        if self.kind == "lex":
            return exps
        if self.kind == "grevlex":
            return (sum(exps), tuple(-e for e in reversed(exps)))
        if self.kind == "wgrevlex":
            if len(exps) != len(self.weights):
                raise ContextMismatch("weight vector length does not match context")
            wdeg = sum(w * e for w, e in zip(self.weights, exps))
            return (wdeg, tuple(-e for e in reversed(exps)))
        return tuple(inner.key(tuple(exps[i] for i in idx)) for idx, inner in self.blocks)

    def validate(self, nvars: int) -> None:
        """Check that block index sets partition ``range(nvars)``."""
        if self.kind == "wgrevlex" and len(self.weights) != nvars:
            raise ContextMismatch("weight vector length does not match context")
        if self.kind != "block":
            return
        seen = sorted(i for idx, _ in self.blocks for i in idx)
        if seen != list(range(nvars)):
            raise ContextMismatch("block variable sets must partition the context")
        for idx, inner in self.blocks:
            inner.validate(len(idx))

    def compare(self, a: Exponents, b: Exponents) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)


def lex() -> MonomialOrder:
    return MonomialOrder("lex")


def grevlex() -> MonomialOrder:
    return MonomialOrder("grevlex")


def weighted_grevlex(weights: Sequence[Scalar]) -> MonomialOrder:
    return MonomialOrder("wgrevlex", weights=tuple(weights))


def block_order(blocks: Sequence[Tuple[Iterable[int], MonomialOrder]]) -> MonomialOrder:
    return MonomialOrder("block", blocks=tuple((tuple(idx), o) for idx, o in blocks))


def elimination_order(nvars: int, eliminate: Iterable[int], inner: Optional[MonomialOrder] = None) -> MonomialOrder:
    """Block order with ``eliminate`` on top, grevlex inside each block."""
    top = sorted(set(eliminate))
    rest = [i for i in range(nvars) if i not in set(top)]
    inner = inner or grevlex()
    return block_order([(top, grevlex()), (rest, inner)])


# ---------------------------------------------------------------------------
# Monomials


@dataclass(frozen=True)
class Monomial:
    exponents: Exponents
    context: VariableContext

    def __post_init__(self):
        if len(self.exponents) != self.context.nvars:
            raise ContextMismatch("exponent vector has the wrong length")
        if any(e < 0 for e in self.exponents):
            raise ValueError("exponents must be nonnegative")

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def __mul__(self, other: "Monomial") -> "Monomial":
        _same(self.context, other.context)
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)), self.context)

    def divides(self, other: "Monomial") -> bool:
        _same(self.context, other.context)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __str__(self):
        return self.context.format_monomial(self.exponents)


def compare(order: MonomialOrder, a: Monomial, b: Monomial) -> int:
    """Return -1, 0 or 1 according to ``a < b``, ``a == b``, ``a > b``."""
    _same(a.context, b.context)
    return order.compare(a.exponents, b.exponents)


def _same(a: VariableContext, b: VariableContext) -> None:
    if a != b:
        raise ContextMismatch(f"contexts differ: {a.names} vs {b.names}")


def _mono_mul(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x + y for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# Polynomials


class Polynomial:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("context", "_terms", "order", "_hash")

    def __init__(self, context: VariableContext, terms: Mapping[Exponents, Scalar] = (), order: Optional[MonomialOrder] = None):
        self.context = context
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean = {}
        n = context.nvars
        for exps, c in items:
            exps = tuple(exps)
            if len(exps) != n:
                raise ContextMismatch("exponent vector has the wrong length")
            c = Fraction(c)
            if c:
                clean[exps] = clean.get(exps, 0) + c
        self._terms = {m: c for m, c in clean.items() if c}
        self.order = order or _GREVLEX
        self._hash = None

    @classmethod
    def _raw(cls, context: VariableContext, terms: Dict[Exponents, Fraction], order=None) -> "Polynomial":
        # trusted constructor: ``terms`` already clean
        p = cls.__new__(cls)
        p.context = context
        p._terms = terms
        p.order = order or _GREVLEX
        p._hash = None
        return p

    @classmethod
    def zero(cls, context: VariableContext) -> "Polynomial":
        return cls._raw(context, {})

    @classmethod
    def constant(cls, context: VariableContext, c: Scalar) -> "Polynomial":
        return cls(context, {(0,) * context.nvars: c})

    @classmethod
    def variable(cls, context: VariableContext, name: str) -> "Polynomial":
        exps = [0] * context.nvars
        exps[context.index[name]] = 1
        return cls._raw(context, {tuple(exps): Fraction(1)})

    @classmethod
    def monomial(cls, context: VariableContext, exps: Exponents, coeff: Scalar = 1) -> "Polynomial":
        return cls(context, {tuple(exps): coeff})

    # -- inspection ---------------------------------------------------------

    @property
    def term_dict(self) -> Dict[Exponents, Fraction]:
        return dict(self._terms)

    @property
    def terms(self):
        """(coefficient, Monomial) pairs, strictly descending in ``self.order``."""
        return [(self._terms[m], Monomial(m, self.context)) for m in self.sorted_monomials()]

    def sorted_monomials(self, order: Optional[MonomialOrder] = None):
        order = order or self.order
        return sorted(self._terms, key=order.key, reverse=True)

    def leading_term(self, order: Optional[MonomialOrder] = None) -> Tuple[Exponents, Fraction]:
        if not self._terms:
            raise ValueError("the zero polynomial has no leading term")
        order = order or self.order
        m = max(self._terms, key=order.key)
        return m, self._terms[m]

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._terms)

    def is_binomial(self) -> bool:
        """True for a difference of two distinct monomials (up to scaling)."""
        if len(self._terms) != 2:
            return False
        a, b = self._terms.values()
        return a == -b

    def support(self) -> set:
        """Indices of variables occurring in some term."""
        return {i for m in self._terms for i, e in enumerate(m) if e}

    def with_order(self, order: MonomialOrder) -> "Polynomial":
        return Polynomial._raw(self.context, self._terms, order)

    def monic(self, order: Optional[MonomialOrder] = None) -> "Polynomial":
        if not self._terms:
            return self
        _, c = self.leading_term(order)
        return self * (1 / c)

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            _same(self.context, other.context)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.context, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial._raw(self.context, out, self.order)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.context, {m: -c for m, c in self._terms.items()}, self.order)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return Polynomial.zero(self.context)
            return Polynomial._raw(self.context, {m: v * c for m, v in self._terms.items()}, self.order)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: Dict[Exponents, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                v = out.get(m, 0) + c1 * c2
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return Polynomial._raw(self.context, out, self.order)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = Polynomial.constant(self.context, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def mul_monomial(self, exps: Exponents, c: Scalar = 1) -> "Polynomial":
        c = Fraction(c)
        return Polynomial._raw(self.context, {_mono_mul(m, exps): v * c for m, v in self._terms.items()} if c else {}, self.order)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.context, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.context == other.context and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.context, frozenset(self._terms.items())))
        return self._hash

    # -- context changes ------------------------------------------------------

    def embed(self, target: VariableContext) -> "Polynomial":
        """Re-express in a context containing all of this context's variables."""
        if target == self.context:
            return self
        pos = [target.index[name] for name in self.context.names]
        n = target.nvars
        out = {}
        for m, c in self._terms.items():
            e = [0] * n
            for i, k in enumerate(m):
                if k:
                    e[pos[i]] = k
            out[tuple(e)] = c
        return Polynomial._raw(target, out)

    def restrict(self, target: VariableContext) -> "Polynomial":
        """Re-express in a smaller context; every used variable must exist there."""
        if target == self.context:
            return self
        names = self.context.names
        out = {}
        n = target.nvars
        for m, c in self._terms.items():
            e = [0] * n
            for i, k in enumerate(m):
                if k:
                    try:
                        e[target.index[names[i]]] = k
                    except KeyError:
                        raise ContextMismatch(f"variable {names[i]} not in target context") from None
            out[tuple(e)] = c
        return Polynomial._raw(target, out)

    # -- text ---------------------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for i, m in enumerate(self.sorted_monomials()):
            c = self._terms[m]
            neg = c < 0
            a = -c if neg else c
            if any(m):
                mono = self.context.format_monomial(m)
                body = mono if a == 1 else f"{_fmt(a)}*{mono}"
            else:
                body = _fmt(a)
            if i == 0:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f" - {body}" if neg else f" + {body}")
        return "".join(parts)

    def __repr__(self):
        return f"Polynomial({str(self)!r})"


_GREVLEX = MonomialOrder("grevlex")


def _fmt(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def substitute(p: Polynomial, assignment: Mapping[str, Polynomial], target: Optional[VariableContext] = None) -> Polynomial:
    """Evaluate ``p`` at the ring homomorphism given by ``assignment``.

    Keys are variable names of ``p.context``; values live in ``target``
    (inferred from the values when omitted).  Unassigned variables map to
    themselves and must therefore exist in ``target``.
    """
    if target is None:
        target = next(iter(assignment.values())).context if assignment else p.context
    names = p.context.names
    images = []
    for name in names:
        if name in assignment:
            img = assignment[name]
            _same(img.context, target)
        else:
            if name not in target.index:
                raise ContextMismatch(f"unassigned variable {name} missing from target context")
            img = Polynomial.variable(target, name)
        images.append(img)
    powers: Dict[Tuple[int, int], Polynomial] = {}

    def power(i: int, e: int) -> Polynomial:
        key = (i, e)
        if key not in powers:
            powers[key] = images[i] ** e
        return powers[key]

    result = Polynomial.zero(target)
    one = Polynomial.constant(target, 1)
    for m, c in p._terms.items():
        term = one * c
        for i, e in enumerate(m):
            if e:
                term = term * power(i, e)
                if not term:
                    break
        result = result + term
    return result


# ---------------------------------------------------------------------------
# Multigradings


@dataclass(frozen=True)
class Multigrading:
    """``mdeg(x_j) = (q_j, 0)``, ``mdeg(K_i) = (0, e_k)`` for ``i`` in block ``k``."""

    x_weights: Tuple[Fraction, ...]
    component_of_k: Tuple[int, ...]
    n_components: int

    def __post_init__(self):
        object.__setattr__(self, "x_weights", tuple(Fraction(q) for q in self.x_weights))
        object.__setattr__(self, "component_of_k", tuple(self.component_of_k))
        if any(q <= 0 for q in self.x_weights):
            raise ValueError("species weights must be positive")


def weighted_mdeg(g: Multigrading, m: Monomial) -> Tuple[Fraction, Tuple[int, ...]]:
    ctx = m.context
    if len(ctx.x_names) != len(g.x_weights) or len(ctx.k_names) != len(g.component_of_k):
        raise ContextMismatch("grading does not match the context")
    exps = m.exponents
    if any(exps[i] for i in ctx.aux_indices):
        raise ValueError("auxiliary variables carry no multidegree")
    wdeg = sum((q * exps[j] for j, q in enumerate(g.x_weights)), Fraction(0))
    vec = [0] * g.n_components
    s = len(ctx.x_names)
    for i, k in enumerate(g.component_of_k):
        vec[k] += exps[s + i]
    return wdeg, tuple(vec)


def is_homogeneous(g: Multigrading, p: Polynomial) -> bool:
    degs = {weighted_mdeg(g, mono) for _, mono in p.terms}
    return len(degs) <= 1


# ---------------------------------------------------------------------------
# Text grammar

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^])|(?P<bad>\S))")


def _tokenize(text: str):
    pos = 0
    out = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        if m.group("bad"):
            raise PolynomialSyntaxError(f"unexpected character {m.group('bad')!r} at column {m.start('bad') + 1}")
        kind = m.lastgroup
        out.append((kind, m.group(kind), m.start(kind) + 1))
        pos = m.end()
    return out


def variable_names(text: str) -> list:
    """Variable identifiers in order of first appearance."""
    seen = []
    for kind, val, _ in _tokenize(text):
        if kind == "name" and val not in seen:
            seen.append(val)
    return seen


def parse_polynomial(text: str, context: VariableContext) -> Polynomial:
    """Parse ``term (('+'|'-') term)*``; the printer's output round-trips."""
    toks = _tokenize(text)
    if not toks:
        raise PolynomialSyntaxError("empty polynomial")
    pos = 0
    result = Polynomial.zero(context)

    def peek():
        return toks[pos] if pos < len(toks) else (None, None, len(text) + 1)

    sign = 1
    kind, val, col = peek()
    if kind == "op" and val in "+-":
        sign = -1 if val == "-" else 1
        pos += 1
    while True:
        coeff = Fraction(1)
        exps = [0] * context.nvars
        kind, val, col = peek()
        have_factor = False
        if kind == "num":
            coeff = Fraction(val)
            pos += 1
            have_factor = True
            kind, val, col = peek()
            if kind == "op" and val == "*":
                pos += 1
                kind, val, col = peek()
                if kind != "name":
                    raise PolynomialSyntaxError(f"expected variable at column {col}")
        while kind == "name":
            if val not in context.index:
                raise PolynomialSyntaxError(f"unknown variable {val!r} at column {col}")
            pos += 1
            e = 1
            k2, v2, c2 = peek()
            if k2 == "op" and v2 == "^":
                pos += 1
                k3, v3, c3 = peek()
                if k3 != "num" or "/" in v3:
                    raise PolynomialSyntaxError(f"expected integer exponent at column {c3}")
                e = int(v3)
                pos += 1
            exps[context.index[val]] += e
            have_factor = True
            k2, v2, c2 = peek()
            if k2 == "op" and v2 == "*":
                pos += 1
                kind, val, col = peek()
                if kind != "name":
                    raise PolynomialSyntaxError(f"expected variable at column {col}")
            else:
                break
        if not have_factor:
            raise PolynomialSyntaxError(f"expected term at column {col}")
        result = result + Polynomial.monomial(context, tuple(exps), sign * coeff)
        kind, val, col = peek()
        if kind is None:
            return result
        if kind == "op" and val in "+-":
            sign = -1 if val == "-" else 1
            pos += 1
            continue
        raise PolynomialSyntaxError(f"unexpected token {val!r} at column {col}")


_X = re.compile(r"x(\d+)$")
_K = re.compile(r"K(\d+)$")


def infer_context(texts: Iterable[str]) -> VariableContext:
    """Build a context from the identifiers used in ``texts``.

    ``x<i>`` go to the x-block and ``K<i>`` to the K-block (each sorted by
    index); any other identifier is auxiliary, ordered by first appearance.
    """
    names = []
    for t in texts:
        for v in variable_names(t):
            if v not in names:
                names.append(v)
    xs = sorted((n for n in names if _X.match(n)), key=lambda n: int(n[1:]))
    ks = sorted((n for n in names if _K.match(n)), key=lambda n: int(n[1:]))
    aux = [n for n in names if n not in xs and n not in ks]
    return VariableContext(tuple(xs), tuple(ks), tuple(aux))
