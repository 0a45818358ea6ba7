"""Reproduce the two worked examples and print their WLOGs and multiplier ranks."""

from wlogkit.artin import ArtinTitsSystem, artin_invariants
from wlogkit.bestvina_brady import bb_invariants, ps_presentation
from wlogkit.graphs import SimplicialGraph, SpanningTree
from wlogkit.words import format_word

VERTICES = ["a1", "a2", "a3", "a4", "a5", "a6"]
EDGES = [
    ("a1", "a2"), ("a1", "a5"), ("a2", "a5"), ("a2", "a3"), ("a2", "a4"),
    ("a3", "a4"), ("a4", "a5"), ("a4", "a6"), ("a5", "a6"),
]
TREE = [("a1", "a2"), ("a2", "a5"), ("a2", "a4"), ("a2", "a3"), ("a4", "a6")]
NAMES = dict(zip(TREE, ["v1", "v2", "v3", "v4", "v5"]))


def bestvina_brady_example():
    g = SimplicialGraph.build(VERTICES, EDGES)
    tree = SpanningTree(g, TREE)
    print("Bestvina-Brady group of the six-vertex graph")
    p = ps_presentation(g, tree, NAMES)
    print("  generators:", ", ".join(p.generators))
    for r in p.relators:
        print("  relator:", format_word(r))
    res = bb_invariants(g, tree=tree, names=NAMES)
    for e in res.wlog.edges:
        print(f"  loop at {e.origin} labelled {format_word(e.label)}")
    print(f"  H2 rank {res.h2_rank}, B0 rank {res.report.b0_rank_claim}, oracle agree {res.agree}")
    for gen in res.report.h2_generators:
        print("  H2 generator:", format_word(gen.commutator_word))


def artin_example():
    s = ArtinTitsSystem.build(["a1", "a2", "a3"], [("a1", "a2", 5), ("a1", "a3", 3), ("a2", "a3", 7)])
    res = artin_invariants(s)
    print("Artin group with labels 5, 3, 7")
    for e in res.wlog.edges:
        print(f"  edge {e.origin} -> {e.terminus} labelled {format_word(e.label)}")
    rep = res.report
    print(f"  H2 rank {rep.h2_rank_claim}, B0 rank {rep.b0_rank_claim}")
    for gen in rep.b0_generators:
        print("  B0 generator from edge relator:", format_word(res.wlog.edge_relator(res.wlog.edges[gen.edge])))
    o = rep.oracle
    print(f"  oracle: H2 in [{o.h2_lower}, {o.h2_upper}], suspension {'pass' if o.suspension.passed else 'FAIL'}")


if __name__ == "__main__":
    bestvina_brady_example()
    print()
    artin_example()
