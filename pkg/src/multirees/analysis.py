"""Deficiency, Cayley nullity, codimension of M_G, and the cross-check suite."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import List, Optional, Sequence, Tuple

from . import crn_algebra as ca
from .groebner import Ideal, dimension, ideal_equal
from .matrix import IntegerMatrix, bareiss_rank
from .network import Network, add_edge, is_weakly_reversible


@dataclass(frozen=True)
class Check:
    name: str
    status: str  # "pass", "fail" or "skip"
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status != "fail"


def _check(name: str, ok: bool, detail: str = "") -> Check:
    return Check(name, "pass" if ok else "fail", detail)


@dataclass
class AnalysisReport:
    n: int
    l: int
    s: int
    dim_S: int
    deficiency: int
    cayley_rank: int
    cayley_nullity: int
    codim_MG: Optional[int]
    weakly_reversible: bool
    homogeneous_case: Optional[bool]
    checks: List[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["checks"] = [asdict(c) for c in self.checks]
        return d


def reaction_vectors(net: Network) -> IntegerMatrix:
    rows = [[b - a for a, b in zip(net.vertices[e.source], net.vertices[e.target])] for e in net.edges]
    return IntegerMatrix(rows, net.s)


def stoichiometric_dim(net: Network) -> int:
    m = reaction_vectors(net)
    return bareiss_rank(m.entries, m.cols)


def deficiency(net: Network) -> int:
    return net.n - net.l - stoichiometric_dim(net)


def cayley_rank(net: Network) -> int:
    return ca.cayley_matrix(net).rank()


def cayley_nullity(net: Network) -> int:
    return net.n - cayley_rank(net)


def codim_moduli(net: Network, as_partition: bool = False) -> int:
    mg = ca.moduli_ideal(net, as_partition)
    ks = list(mg.context.k_indices)
    return len(ks) - dimension(mg, over=ks)


def edge_invariance_suite(net: Network, new_edges: Sequence[Tuple[int, int]]) -> List[Check]:
    """Compare T_G, M_G, dim S and the deficiency before and after each edge."""
    tg, mg = ca.toric_ideal_TG(net, True), ca.moduli_ideal(net, True)
    dim_s, delta = stoichiometric_dim(net), deficiency(net)
    out = []
    comp = net.component_of
    for i, j in new_edges:
        tag = f"edge K{i + 1}->K{j + 1}"
        if comp[i] != comp[j]:
            out.append(Check(f"{tag}: invariance", "skip", "edge joins two components"))
            continue
        bigger = add_edge(net, i, j)
        out.append(_check(f"{tag}: T_G unchanged", ideal_equal(tg, ca.toric_ideal_TG(bigger, True))))
        out.append(_check(f"{tag}: M_G unchanged", ideal_equal(mg, ca.moduli_ideal(bigger, True))))
        d2 = stoichiometric_dim(bigger)
        out.append(_check(f"{tag}: dim S unchanged", d2 == dim_s, f"{dim_s} vs {d2}"))
        e2 = deficiency(bigger)
        out.append(_check(f"{tag}: deficiency unchanged", e2 == delta, f"{delta} vs {e2}"))
    return out


def consistency_suite(net: Network, tg: Optional[Ideal] = None) -> AnalysisReport:
    """Run every structural check on ``net``; failures are recorded, not raised.

    ``tg`` replaces the computed T_G in the checks that consume it, which
    lets a caller confirm the suite notices a wrong ideal.
    """
    wr = is_weakly_reversible(net)
    dim_s = stoichiometric_dim(net)
    delta = net.n - net.l - dim_s
    cay = ca.cayley_matrix(net)
    rank = cay.rank()
    null = net.n - rank
    checks = [
        _check("deficiency = Cayley nullity", delta == null, f"{delta} vs {null}"),
        _check("rank(Cayley) = rank(Cayley^T)", rank == cay.transpose().rank()),
    ]
    report = AnalysisReport(net.n, net.l, net.s, dim_s, delta, rank, null, None, wr, None, checks)
    if not wr:
        checks.append(Check("ideal checks", "skip", "network is not weakly reversible"))
        return report

    computed = ca.toric_ideal_TG(net)
    tg = tg if tg is not None else computed
    mg = ca.moduli_ideal(net)
    codim = codim_moduli(net)
    report.codim_MG = codim
    checks.append(_check("deficiency = codim M_G", delta == codim, f"{delta} vs {codim}"))
    checks.append(_check("partition equivalence", ca.partition_equivalence_check(net)))
    checks.append(_check("kernel soundness", ca.kernel_soundness_check(net, tg)))
    bad = [str(g) for g in tg.generators if not g.is_binomial()]
    checks.append(_check("T_G binomial", not bad, ", ".join(bad)))
    bad = [str(g) for g in mg.generators if not g.is_binomial()]
    checks.append(_check("M_G binomial", not bad, ", ".join(bad)))
    checks.append(_check("standard Cayley toric ideal = M_G", ideal_equal(ca.cayley_toric_ideal(net, "standard"), mg)))
    checks.append(_check("modified Cayley toric ideal = T_G", ideal_equal(ca.cayley_toric_ideal(net, "modified"), tg)))

    fiber = ca.special_fiber_ideal(net)
    report.homogeneous_case = fiber.homogeneous_case
    if fiber.homogeneous_case:
        q = fiber.weights.q
        checks.append(_check("fiber = M_G", bool(fiber.matches_moduli), f"q = {q}"))
        checks.append(_check("T_G homogeneous", ca.homogeneity_check(net, q, tg), f"q = {q}"))
    else:
        checks.append(Check("fiber = M_G", "skip", "no positive weights with equal degrees per block"))
    return report
