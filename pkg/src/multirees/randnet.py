"""Seeded random weakly reversible networks for property runs."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .groebner import Ideal
from .network import Edge, Network, add_edge
from .poly_core import Polynomial, VariableContext


def random_network(rng: random.Random, max_species: int = 3, max_vertices: int = 5, max_exponent: int = 2) -> Network:
    """Distinct complexes split into components, each a directed cycle."""
    s = rng.randint(1, max_species)
    pool = list(itertools.product(range(max_exponent + 1), repeat=s))
    cap = min(max_vertices, len(pool))
    n = max(rng.randint(1, cap), rng.randint(1, cap))  # lean towards larger networks
    vertices = rng.sample(pool, n)
    # few components relative to n, otherwise nearly every sample has deficiency zero
    k = rng.randint(1, max(1, (n + 1) // 2))
    labels = [rng.randrange(k) for _ in range(n)]
    blocks: dict = {}
    for i, lab in enumerate(labels):
        blocks.setdefault(lab, []).append(i)
    edges = []
    for block in blocks.values():
        rng.shuffle(block)
        if len(block) > 1:
            for a, b in zip(block, block[1:] + block[:1]):
                edges.append(Edge(a, b))
    species = tuple("ABCDEFGH"[j] for j in range(s))
    return Network(species, tuple(vertices), tuple(edges))


@dataclass(frozen=True)
class CorpusConfig:
    count: int = 100
    seed: int = 0
    max_species: int = 3
    max_vertices: int = 5
    max_exponent: int = 2

    def build(self) -> List[Network]:
        return random_corpus(
            self.count, self.seed,
            max_species=self.max_species, max_vertices=self.max_vertices, max_exponent=self.max_exponent,
        )


def random_corpus(count: int, seed: int = 0, **kwargs) -> List[Network]:
    rng = random.Random(seed)
    return [random_network(rng, **kwargs) for _ in range(count)]


def random_intra_edge(net: Network, rng: random.Random) -> Optional[Tuple[int, int]]:
    """A random ordered pair of distinct vertices in one component, if any."""
    blocks = [b for b in net.partition if len(b) > 1]
    if not blocks:
        return None
    block = rng.choice(blocks)
    i, j = rng.sample(block, 2)
    return i, j


def with_random_intra_edge(net: Network, rng: random.Random) -> Optional[Network]:
    pair = random_intra_edge(net, rng)
    return add_edge(net, *pair) if pair else None


def random_binomial_ideal(rng: random.Random, nvars: int = 4, ngens: int = 3, max_exponent: int = 2) -> Ideal:
    """Pure binomials ``x^a - x^b`` over a context with x- and K-blocks."""
    nx = rng.randint(1, nvars - 1)
    ctx = VariableContext(tuple(f"x{i + 1}" for i in range(nx)), tuple(f"K{i + 1}" for i in range(nvars - nx)))
    gens = []
    while len(gens) < ngens:
        a = tuple(rng.randint(0, max_exponent) for _ in range(nvars))
        b = tuple(rng.randint(0, max_exponent) for _ in range(nvars))
        if a != b:
            gens.append(Polynomial.monomial(ctx, a) - Polynomial.monomial(ctx, b))
    return Ideal(ctx, gens)


def random_binomial_corpus(count: int, seed: int = 0, **kwargs) -> List[Ideal]:
    rng = random.Random(seed)
    return [random_binomial_ideal(rng, nvars=rng.randint(2, 4), ngens=rng.randint(1, 4), **kwargs) for _ in range(count)]
