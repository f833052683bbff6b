"""Reaction networks: the ``.crn`` text format and the underlying digraph.

A file holds an optional ``species: A, B, C`` header and one reaction per
line::

    # Edelstein
    A <-> 2A        k12, k21
    A + B <-> C     k34, k43
    C <-> B

A line holding a lone complex declares a vertex without reactions.  ``0`` is
the empty complex.  Labels are stored verbatim; ``<->`` takes a forward and
a backward label.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

from .matrix import IntegerMatrix


class NetworkSyntaxError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Edge:
    source: int
    target: int
    label: Optional[str] = None


@dataclass(frozen=True)
class Network:
    """Species, complexes (exponent vectors) and directed reactions.

    Vertices are 0-based here; the algebra names vertex ``i`` as ``K{i+1}``.
    """

    species: Tuple[str, ...]
    vertices: Tuple[Tuple[int, ...], ...]
    edges: Tuple[Edge, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "species", tuple(self.species))
        object.__setattr__(self, "vertices", tuple(tuple(v) for v in self.vertices))
        object.__setattr__(self, "edges", tuple(e if isinstance(e, Edge) else Edge(*e) for e in self.edges))
        s = len(self.species)
        if s < 1:
            raise ValueError("a network needs at least one species")
        if not self.vertices:
            raise ValueError("a network needs at least one vertex")
        if len(set(self.species)) != s:
            raise ValueError("duplicate species names")
        for v in self.vertices:
            if len(v) != s or any(e < 0 for e in v):
                raise ValueError(f"bad exponent vector {v}")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("vertices must be distinct complexes")
        n = len(self.vertices)
        for e in self.edges:
            if not (0 <= e.source < n and 0 <= e.target < n):
                raise ValueError(f"edge {e} references a missing vertex")
            if e.source == e.target:
                raise ValueError("self-loops are not reactions")

    @property
    def s(self) -> int:
        return len(self.species)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def l(self) -> int:
        return len(self.partition)

    @cached_property
    def partition(self) -> Tuple[Tuple[int, ...], ...]:
        return connected_components(self)

    @cached_property
    def component_of(self) -> Tuple[int, ...]:
        comp = [0] * self.n
        for k, block in enumerate(self.partition):
            for i in block:
                comp[i] = k
        return tuple(comp)

    def complex_str(self, i: int) -> str:
        return format_complex(self.vertices[i], self.species)

    def __str__(self):
        return format_network(self)


# ---------------------------------------------------------------------------
# graph algorithms


def connected_components(net: Network) -> Tuple[Tuple[int, ...], ...]:
    """Components of the underlying undirected graph (union-find).

    Blocks are sorted internally and ordered by their smallest vertex.
    """
    parent = list(range(net.n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for e in net.edges:
        ra, rb = find(e.source), find(e.target)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    groups: Dict[int, List[int]] = {}
    for i in range(net.n):
        groups.setdefault(find(i), []).append(i)
    return tuple(sorted((tuple(g) for g in groups.values()), key=lambda b: b[0]))


def strongly_connected_components(net: Network) -> Tuple[Tuple[int, ...], ...]:
    """Tarjan's algorithm, iterative.  Same block ordering as components."""
    succ: List[List[int]] = [[] for _ in range(net.n)]
    for e in net.edges:
        succ[e.source].append(e.target)
    index: Dict[int, int] = {}
    low: Dict[int, int] = {}
    on_stack = set()
    stack: List[int] = []
    sccs = []
    counter = 0
    for root in range(net.n):
        if root in index:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, pos = work[-1]
            if pos < len(succ[v]):
                work[-1] = (v, pos + 1)
                w = succ[v][pos]
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, 0))
                elif w in on_stack:
                    low[v] = min(low[v], index[w])
                continue
            work.pop()
            if work:
                u = work[-1][0]
                low[u] = min(low[u], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                sccs.append(tuple(sorted(comp)))
    return tuple(sorted(sccs, key=lambda b: b[0]))


def is_weakly_reversible(net: Network) -> bool:
    return set(connected_components(net)) == set(strongly_connected_components(net))


def y_matrix(net: Network) -> Tuple[IntegerMatrix, Tuple[int, ...]]:
    """The s x n matrix of exponent vectors, columns grouped by component.

    Returns ``(Y, perm)`` where column ``j`` of ``Y`` is vertex ``perm[j]``.
    """
    perm = tuple(i for block in net.partition for i in block)
    cols = [net.vertices[i] for i in perm]
    return IntegerMatrix([[c[r] for c in cols] for r in range(net.s)], net.n), perm


def add_edge(net: Network, i: int, j: int, label: Optional[str] = None) -> Network:
    if i == j:
        raise ValueError("self-loops are not reactions")
    if not (0 <= i < net.n and 0 <= j < net.n):
        raise IndexError(f"vertex index out of range for ({i}, {j})")
    return Network(net.species, net.vertices, net.edges + (Edge(i, j, label),))


def complete_digraph(net: Network) -> Network:
    """Same vertices; every component replaced by the complete digraph on it."""
    edges = [Edge(i, j) for block in net.partition for i in block for j in block if i != j]
    return Network(net.species, net.vertices, tuple(edges))


# ---------------------------------------------------------------------------
# text format

_NAME = r"[A-Za-z_][A-Za-z0-9_]*"
_TERM = re.compile(rf"\s*(?P<coef>[-+]?\d+(?:[./]\d+)?)?\s*\*?\s*(?P<name>{_NAME})\s*")
_ARROW = re.compile(r"<->|->")


def _parse_complex(text: str, offset: int, lineno: int) -> Tuple[Dict[str, int], List[str]]:
    if text.strip() == "":
        raise NetworkSyntaxError("empty complex", lineno, offset + 1)
    if text.strip() == "0":
        return {}, []
    counts: Dict[str, int] = {}
    order: List[str] = []
    pos = 0
    parts = text.split("+")
    for part in parts:
        col = offset + pos + 1
        if part.strip().startswith("-"):
            raise NetworkSyntaxError("negative stoichiometric coefficient", lineno, col)
        m = _TERM.fullmatch(part)
        if m is None:
            raise NetworkSyntaxError(f"cannot parse term {part.strip()!r}", lineno, col)
        coef = m.group("coef")
        if coef is None:
            c = 1
        else:
            if coef.startswith("-"):
                raise NetworkSyntaxError("negative stoichiometric coefficient", lineno, col)
            if "." in coef or "/" in coef:
                raise NetworkSyntaxError("fractional stoichiometric coefficient", lineno, col)
            c = int(coef)
            if c <= 0:
                raise NetworkSyntaxError("stoichiometric coefficient must be positive", lineno, col)
        name = m.group("name")
        if name not in counts:
            order.append(name)
        counts[name] = counts.get(name, 0) + c
        pos += len(part) + 1
    return counts, order


def _split_labels(rest: str, lineno: int, col: int) -> List[str]:
    rest = rest.strip()
    if rest.startswith("[") and rest.endswith("]"):
        rest = rest[1:-1]
    labels = [x.strip() for x in rest.split(",")] if rest else []
    for lab in labels:
        if not re.fullmatch(r"\S+", lab):
            raise NetworkSyntaxError(f"bad rate label {lab!r}", lineno, col)
    return labels


_LOOSE_TERM = rf"-?\s*(?:\d+(?:[./]\d+)?\s*\*?\s*)?{_NAME}"
_LEADING_COMPLEX = re.compile(rf"\s*(?:0(?![\w.])|{_LOOSE_TERM}(?:\s*\+\s*{_LOOSE_TERM})*)")


def _split_product(rhs: str) -> Tuple[str, str]:
    """Separate the product complex from trailing labels."""
    m = _LEADING_COMPLEX.match(rhs)
    end = m.end() if m else 0
    return rhs[:end], rhs[end:]


def parse_network(text: str) -> Network:
    declared: List[str] = []
    species: List[str] = []
    vertices: List[Dict[str, int]] = []
    keys: Dict[Tuple, int] = {}
    edges: List[Tuple[int, int, Optional[str]]] = []

    def vertex(counts: Dict[str, int]) -> int:
        k = tuple(sorted(counts.items()))
        if k not in keys:
            keys[k] = len(vertices)
            vertices.append(counts)
        return keys[k]

    def note_species(names: List[str]) -> None:
        for nm in names:
            if nm not in species:
                species.append(nm)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        head = re.match(r"\s*species\s*:(.*)$", line)
        if head:
            if species or vertices:
                raise NetworkSyntaxError("species header must come first", lineno, 1)
            names = [x.strip() for x in head.group(1).split(",") if x.strip()]
            for nm in names:
                if not re.fullmatch(_NAME, nm):
                    raise NetworkSyntaxError(f"bad species name {nm!r}", lineno, line.index(nm) + 1)
                if nm in declared:
                    raise NetworkSyntaxError(f"species {nm!r} declared twice", lineno, line.index(nm) + 1)
                declared.append(nm)
            species.extend(declared)
            continue
        arrows = list(_ARROW.finditer(line))
        if not arrows:
            counts, order = _parse_complex(line, 0, lineno)
            note_species(order)
            vertex(counts)
            continue
        if len(arrows) > 1:
            raise NetworkSyntaxError("one reaction per line", lineno, arrows[1].start() + 1)
        arrow = arrows[0]
        lhs = line[: arrow.start()]
        product, rest = _split_product(line[arrow.end():])
        rest_col = arrow.end() + len(product) + 1
        c1, o1 = _parse_complex(lhs, 0, lineno)
        c2, o2 = _parse_complex(product, arrow.end(), lineno)
        labels = _split_labels(rest, lineno, rest_col)
        n_edges = 2 if arrow.group() == "<->" else 1
        if len(labels) > n_edges:
            raise NetworkSyntaxError(f"{len(labels)} rate labels for {n_edges} reaction(s)", lineno, rest_col)
        if len(labels) == 2 and labels[0] == labels[1]:
            raise NetworkSyntaxError("duplicate rate label", lineno, rest_col)
        if c1 == c2:
            raise NetworkSyntaxError("reaction from a complex to itself", lineno, arrow.start() + 1)
        note_species(o1)
        note_species(o2)
        a, b = vertex(c1), vertex(c2)
        labels += [None] * (n_edges - len(labels))
        edges.append((a, b, labels[0]))
        if n_edges == 2:
            edges.append((b, a, labels[1]))
    if not vertices:
        raise NetworkSyntaxError("no reactions or complexes", 1, 1)
    if not species:
        species.append("A")  # only the zero complex; keep s >= 1
    vecs = tuple(tuple(c.get(nm, 0) for nm in species) for c in vertices)
    return Network(tuple(species), vecs, tuple(Edge(*e) for e in edges))


def format_complex(v: Sequence[int], species: Sequence[str]) -> str:
    parts = []
    for e, name in zip(v, species):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{e}{name}")
    return " + ".join(parts) if parts else "0"


def format_network(net: Network) -> str:
    """Normalized text; ``parse_network(format_network(net)) == net``."""
    lines = ["species: " + ", ".join(net.species)]
    seen: List[int] = []
    for e in net.edges:
        for v in (e.source, e.target):
            if v not in seen:
                seen.append(v)
    if seen != list(range(net.n)):
        lines.extend(net.complex_str(i) for i in range(net.n))
    for e in net.edges:
        line = f"{net.complex_str(e.source)} -> {net.complex_str(e.target)}"
        if e.label is not None:
            line += f"  {e.label}"
        lines.append(line)
    return "\n".join(lines) + "\n"
