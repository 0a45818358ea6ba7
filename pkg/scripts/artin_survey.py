"""Survey small Artin systems: claimed ranks against oracle bounds and component counts."""

import argparse
import itertools
from collections import Counter

from wlogkit.artin import ArtinTitsSystem, artin_invariants


def systems(n, labels):
    vs = [f"a{i}" for i in range(1, n + 1)]
    pairs = list(itertools.combinations(vs, 2))
    # None = no edge
    for choice in itertools.product([None, *labels], repeat=len(pairs)):
        yield ArtinTitsSystem.build(vs, [(u, v, m) for (u, v), m in zip(pairs, choice) if m is not None])


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--vertices", type=int, default=3)
    ap.add_argument("--labels", type=int, nargs="+", default=[2, 3, 4, 5])
    args = ap.parse_args()
    status = Counter()
    formula_misses = 0
    inexact = []
    for s in systems(args.vertices, args.labels):
        res = artin_invariants(s)
        o = res.report.oracle
        status["agree" if res.agree else "disagree"] += 1
        status["exact" if o.h2_exact else "bracketed"] += 1
        formula_misses += not res.component_check[2]
        if not o.h2_exact:
            inexact.append((sorted(s.labels.items()), o.h2_claim, o.h2_lower, o.h2_upper))
    print("systems:", dict(status))
    print("component-count formula misses:", formula_misses)
    for labels, claim, lo, hi in inexact[:20]:
        desc = ", ".join(f"{u}{v[1:]}:{m}" for (u, v), m in labels)
        print(f"  [{desc}] claim {claim} in [{lo}, {hi}]")
    if len(inexact) > 20:
        print(f"  ... {len(inexact) - 20} more")


if __name__ == "__main__":
    main()
