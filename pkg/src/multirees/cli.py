"""Command-line entry point.

Exit status: 0 success, 1 a check failed, 2 usage or parse error,
3 a non weakly reversible network given to ``ideal`` without
``--as-partition``.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import List, Optional

from . import analysis
from . import crn_algebra as ca
from .groebner import Ideal
from .network import Network, NetworkSyntaxError, format_network, is_weakly_reversible, parse_network
from .poly_core import PolynomialSyntaxError, VariableContext, grevlex, infer_context, lex, parse_polynomial
from .randnet import random_corpus, random_intra_edge

EXIT_OK, EXIT_CHECK, EXIT_USAGE, EXIT_NOT_WR = 0, 1, 2, 3

IDEALS = ("tg", "mg", "fiber", "tprime")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def network_dict(net: Network) -> dict:
    return {
        "species": list(net.species),
        "vertices": [list(v) for v in net.vertices],
        "complexes": [net.complex_str(i) for i in range(net.n)],
        "edges": [{"source": e.source + 1, "target": e.target + 1, "label": e.label} for e in net.edges],
        "partition": [[i + 1 for i in block] for block in net.partition],
        "weakly_reversible": is_weakly_reversible(net),
    }


def _emit(network: Optional[Network], report=None, ideals=None, extra=None) -> None:
    doc = {
        "network": network_dict(network) if network is not None else None,
        "report": report.to_dict() if report is not None else None,
        "ideals": {k: [str(g) for g in v] for k, v in (ideals or {}).items()},
    }
    if extra:
        doc.update(extra)
    json.dump(doc, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _order(name: Optional[str]):
    return {"lex": lex(), "grevlex": grevlex(), None: None}[name]


def _basis(ideal: Ideal, order) -> List:
    return list(ideal.groebner_basis(order)) if order is not None else list(ideal.generators)


def _print_ideal(gens) -> None:
    if not gens:
        print("0")
    for g in gens:
        print(g)


def requested_ideal(net: Network, which: str, as_partition: bool) -> Ideal:
    if which == "tprime":
        tp = ca.binomial_generators(net)
        return Ideal(tp.context, tp.groebner_basis())
    if which == "tg":
        return ca.toric_ideal_TG(net, as_partition)
    if which == "mg":
        return ca.moduli_ideal(net, as_partition)
    return ca.special_fiber_ideal(net, as_partition).fiber_ideal


def cmd_parse(args) -> int:
    net = parse_network(_read(args.input))
    if args.json:
        _emit(net)
    else:
        sys.stdout.write(format_network(net))
    return EXIT_OK


def _print_report(report: analysis.AnalysisReport) -> None:
    d = report.to_dict()
    for k, v in d.items():
        if k != "checks":
            print(f"{k}: {'null' if v is None else v}")
    for c in report.checks:
        _print_check(c)


def _print_check(c: analysis.Check) -> None:
    line = f"{c.status.upper():4} {c.name}"
    if c.detail:
        line += f"  ({c.detail})"
    print(line)


def cmd_analyze(args) -> int:
    net = parse_network(_read(args.input))
    report = analysis.consistency_suite(net)
    if args.json:
        ideals = {}
        if report.weakly_reversible:
            ideals = {"tg": ca.toric_ideal_TG(net).generators, "mg": ca.moduli_ideal(net).generators}
        _emit(net, report, ideals)
    else:
        _print_report(report)
    return EXIT_OK


def cmd_ideal(args) -> int:
    net = parse_network(_read(args.input))
    if not args.as_partition and not is_weakly_reversible(net):
        print("error: network is not weakly reversible (use --as-partition)", file=sys.stderr)
        return EXIT_NOT_WR
    ideal = requested_ideal(net, args.which, args.as_partition)
    gens = _basis(ideal, _order(args.order))
    if args.json:
        _emit(net, ideals={args.which: gens})
    else:
        _print_ideal(gens)
    return EXIT_OK


def cmd_cayley(args) -> int:
    net = parse_network(_read(args.input))
    mat = ca.cayley_matrix(net, args.variant)
    cols = ca.cayley_columns(net, args.variant)
    toric = ca.cayley_toric_ideal(net, args.variant).generators if args.toric else None
    if args.json:
        ideals = {f"toric_{args.variant}": toric} if toric is not None else {}
        _emit(net, ideals=ideals, extra={"cayley": {"variant": args.variant, "columns": cols, "matrix": mat.tolist()}})
        return EXIT_OK
    print("columns: " + " ".join(cols))
    print(mat)
    if toric is not None:
        print()
        _print_ideal(toric)
    return EXIT_OK


def _intra_component_pairs(net: Network):
    existing = {(e.source, e.target) for e in net.edges}
    return [(i, j) for b in net.partition for i in b for j in b if i != j and (i, j) not in existing]


def cmd_check(args) -> int:
    results = []
    if args.input:
        net = parse_network(_read(args.input))
        report = analysis.consistency_suite(net)
        edges = analysis.edge_invariance_suite(net, _intra_component_pairs(net)) if report.weakly_reversible else []
        results.append((args.input, net, report, edges))
    if args.random:
        rng = random.Random(args.seed)
        for k, net in enumerate(random_corpus(args.random, seed=args.seed)):
            report = analysis.consistency_suite(net)
            pair = random_intra_edge(net, rng)
            edges = analysis.edge_invariance_suite(net, [pair]) if pair else []
            results.append((f"random[{k}]", net, report, edges))
    if not results:
        print("error: give an input file or --random N", file=sys.stderr)
        return EXIT_USAGE
    ok = all(r.ok and all(c.passed for c in e) for _, _, r, e in results)
    if args.json:
        doc = {
            "network": network_dict(results[0][1]) if args.input else None,
            "report": results[0][2].to_dict() if args.input else None,
            "ideals": {},
            "runs": [
                {"name": name, "ok": r.ok and all(c.passed for c in e), "report": r.to_dict(),
                 "edge_checks": [vars(c) for c in e]}
                for name, _, r, e in results
            ],
        }
        json.dump(doc, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        for name, _, r, e in results:
            if len(results) == 1:
                _print_report(r)
                for c in e:
                    _print_check(c)
            else:
                bad = [c for c in r.checks + e if not c.passed]
                print(f"{'PASS' if not bad else 'FAIL'} {name}" + "".join(f"\n    {c.name}: {c.detail}" for c in bad))
        print(f"{'all checks passed' if ok else 'CHECK FAILURES'} ({len(results)} network(s))")
    return EXIT_OK if ok else EXIT_CHECK


def _polynomial_lines(text: str) -> List[str]:
    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip().rstrip(",")
        if line:
            out.extend(p.strip() for p in line.split(",") if p.strip())
    return out


def cmd_gb(args) -> int:
    texts = _polynomial_lines(_read(args.input))
    if not texts:
        print("error: no polynomials given", file=sys.stderr)
        return EXIT_USAGE
    ctx: VariableContext = infer_context(texts)
    ideal = Ideal(ctx, [parse_polynomial(t, ctx) for t in texts])
    gb = _basis(ideal, _order(args.order) or grevlex())
    if args.json:
        _emit(None, ideals={"gb": gb}, extra={"variables": list(ctx.names)})
    else:
        _print_ideal(gb)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="multirees", description="Multi-Rees algebra ideals of reaction networks.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_, needs_input=True):
        sp = sub.add_parser(name, help=help_)
        if needs_input:
            sp.add_argument("input", help=".crn file, or - for stdin")
        sp.add_argument("--json", action="store_true", help="emit JSON")
        sp.set_defaults(func=func)
        return sp

    add("parse", cmd_parse, "echo the normalized network")
    add("analyze", cmd_analyze, "deficiency, nullity, codimension and checks")
    sp = add("ideal", cmd_ideal, "print a reduced Groebner basis")
    sp.add_argument("--which", choices=IDEALS, default="tg")
    sp.add_argument("--as-partition", action="store_true", help="treat components as complete digraphs")
    sp.add_argument("--order", choices=("lex", "grevlex"), help="recompute the basis in this order")
    sp = add("cayley", cmd_cayley, "print a Cayley matrix")
    sp.add_argument("--variant", choices=ca.CAYLEY_VARIANTS, default="standard")
    sp.add_argument("--toric", action="store_true", help="also print its toric ideal")
    sp = add("check", cmd_check, "run the consistency and edge-invariance suites", needs_input=False)
    sp.add_argument("input", nargs="?", help=".crn file, or - for stdin")
    sp.add_argument("--random", type=int, default=0, metavar="N", help="also check N random networks")
    sp.add_argument("--seed", type=int, default=0)
    sp = add("gb", cmd_gb, "reduced Groebner basis of polynomials (one per line)")
    sp.add_argument("--order", choices=("lex", "grevlex"), default="grevlex")
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (NetworkSyntaxError, PolynomialSyntaxError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ca.NotWeaklyReversible as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_WR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
