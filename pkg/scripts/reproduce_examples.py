"""Print every ideal and invariant for the two worked networks in networks/."""

from pathlib import Path

from multirees import analysis
from multirees import crn_algebra as ca
from multirees.network import parse_network

ROOT = Path(__file__).resolve().parent.parent / "networks"


def show(path: Path) -> None:
    net = parse_network(path.read_text())
    print(f"== {path.name}: n={net.n} l={net.l} s={net.s}")
    for i in range(net.n):
        print(f"  K{i + 1} <- {net.complex_str(i)}")
    print("T_G:", ", ".join(map(str, ca.toric_ideal_TG(net).generators)))
    print("M_G:", ", ".join(map(str, ca.moduli_ideal(net).generators)) or "0")
    fiber = ca.special_fiber_ideal(net)
    weights = fiber.weights.q if fiber.weights else None
    print("fiber:", ", ".join(map(str, fiber.fiber_ideal.generators)) or "0", f"(weights {weights})")
    print("Cayley:")
    print(ca.cayley_matrix(net))
    ext = ca.cayley_toric_ideal(net, "extended")
    print("extended Cayley toric ideal:", ", ".join(map(str, ext.generators)))
    report = analysis.consistency_suite(net)
    print(f"deficiency {report.deficiency}, nullity {report.cayley_nullity}, codim M_G {report.codim_MG}")
    for c in report.checks:
        print(f"  {c.status:4} {c.name}")
    print()


if __name__ == "__main__":
    for name in ("triangle.crn", "edelstein.crn", "edelstein_plus.crn"):
        show(ROOT / name)
