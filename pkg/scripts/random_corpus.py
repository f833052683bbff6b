"""Run the consistency and edge-invariance suites over a seeded random corpus.

    python3 scripts/random_corpus.py --count 200 --seed 3
"""

import argparse
import random
import time
from collections import Counter
from dataclasses import fields

from multirees import analysis
from multirees.randnet import CorpusConfig, random_intra_edge


def parse_config() -> CorpusConfig:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for f in fields(CorpusConfig):
        p.add_argument("--" + f.name.replace("_", "-"), type=int, default=f.default)
    return CorpusConfig(**vars(p.parse_args()))


def main() -> int:
    cfg = parse_config()
    rng = random.Random(cfg.seed)
    start = time.perf_counter()
    deficiencies, failures = Counter(), []
    for k, net in enumerate(cfg.build()):
        report = analysis.consistency_suite(net)
        pair = random_intra_edge(net, rng)
        extra = analysis.edge_invariance_suite(net, [pair]) if pair else []
        deficiencies[report.deficiency] += 1
        bad = [c for c in report.checks + extra if not c.passed]
        if bad:
            failures.append((k, bad))
    elapsed = time.perf_counter() - start
    print(f"{cfg}")
    print("deficiency histogram:", dict(sorted(deficiencies.items())))
    print(f"{cfg.count - len(failures)}/{cfg.count} networks passed in {elapsed:.2f}s")
    for k, bad in failures:
        print(f"  network {k}: " + "; ".join(f"{c.name} ({c.detail})" for c in bad))
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
