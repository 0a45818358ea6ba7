"""Bestvina-Brady groups: Dicks-Leary and Papadima-Suciu presentations, the WLOG
construction from a favourable spanning tree, and the multiplier invariants.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Mapping

from .errors import InvalidInput, NotCertifiedSimplyConnected
from .graphs import (
    Edge,
    OrientedEdge,
    SimplicialGraph,
    SpanningTree,
    Triangle,
    apexes,
    classify_triangle,
    favourable_spanning_tree,
    flag_two_skeleton,
    tree_path,
    triangles,
)
from .homology import (
    AbelianGroupDescriptor,
    exterior_rank,
    flag_boundary_rank,
    flag_h1,
    pi1_trivial_certificate,
    presentation_complex_homology,
    solve_in_row_span,
)
from .wlog import (
    MultiplierReport,
    Presentation,
    WlogEdge,
    WlogGraph,
    WlogVertex,
    multiplier_report,
    substituted_presentation,
)
from .words import Alphabet, Word, commutator, exterior_image

log = logging.getLogger(__name__)

CERTIFIED, ASSUMED, REFUTED, UNKNOWN = "certified", "assumed", "refuted", "unknown"

EMITTED_LOOP = "emittedLoop"
EMITTED_VERTEX_AND_LOOP = "emittedVertexAndLoop"
SKIPPED = "skipped"


def edge_symbol(e: Edge) -> str:
    return f"e_{e[0]}_{e[1]}"


def flag_gate(g: SimplicialGraph, assume: bool = False, tietze_budget: int = 10_000) -> str:
    """Three-valued simple-connectivity gate on the flag complex.

    ``refuted`` when H_1 of the flag complex is nonzero (or the graph is
    disconnected); ``certified`` when bounded Tietze elimination kills pi_1;
    otherwise ``assumed`` if the caller vouches for it, else ``unknown``.
    """
    if not g.vertices or not g.is_connected():
        return REFUTED
    sk = flag_two_skeleton(g)
    if not flag_h1(sk).is_trivial():
        return REFUTED
    if pi1_trivial_certificate(sk, tietze_budget) == CERTIFIED:
        return CERTIFIED
    return ASSUMED if assume else UNKNOWN


def _require_gate(g: SimplicialGraph, assume: bool) -> str:
    status = flag_gate(g, assume)
    if status not in (CERTIFIED, ASSUMED):
        raise NotCertifiedSimplyConnected(status)
    return status


def dicks_leary_presentation(g: SimplicialGraph, assume: bool = False) -> Presentation:
    """One generator per canonically oriented edge; [e, f] and e f g^-1 per triangle."""
    _require_gate(g, assume)
    gens = Alphabet(edge_symbol(e) for e in g.edge_list)
    relators, tags = [], []
    for t in triangles(g):
        # e: a->b, f: b->c, g: a->c
        e, f, gg = (Word.gen(edge_symbol(x)) for x in ((t.a, t.b), (t.b, t.c), (t.a, t.c)))
        relators += [commutator(e, f), e * f * gg.inverse()]
        tags += [f"triangle {t} commute", f"triangle {t} compose"]
    return Presentation(gens, relators, tags)


def _names(tree: SpanningTree, names: Mapping[Edge, str] | None) -> dict[Edge, str]:
    out = {}
    for e in tree.edges:
        out[e] = names[e] if names and e in names else edge_symbol(e)
    if len(set(out.values())) != len(out):
        raise InvalidInput("tree edge names must be distinct")
    return out


def edge_word(
    g: SimplicialGraph, tree: SpanningTree, e: OrientedEdge, names: Mapping[Edge, str] | None = None
) -> Word:
    """The edge as a word in the tree generators: the tree path from o(e) to t(e)."""
    e = OrientedEdge(*e)
    if not g.has_edge(*e):
        raise InvalidInput(f"{e} is not an edge of the graph")
    sym = _names(tree, names)
    return Word((sym[x], s) for x, s in tree_path(tree, e.origin, e.terminus))


def ps_presentation(
    g: SimplicialGraph, tree: SpanningTree, names: Mapping[Edge, str] | None = None, assume: bool = False
) -> Presentation:
    """Generators = tree edges; one commutator [w(x), w(y)] per triangle."""
    _require_gate(g, assume)
    sym = _names(tree, names)
    relators, tags = [], []
    for t in triangles(g):
        x, y = t.edges[0], t.edges[1]
        relators.append(commutator(edge_word(g, tree, x, sym), edge_word(g, tree, y, sym)))
        tags.append(f"triangle {t}")
    return Presentation(Alphabet(sym[e] for e in tree.edges), relators, tags)


@dataclass
class EmissionRecord:
    triangle: Triangle
    tree_edge_count: int
    action: str
    placed_at: str
    label: Word
    new_vertex: tuple[str, Word] | None = None
    certificate: dict | None = None

    def to_json(self) -> dict:
        out = {
            "triangle": list(self.triangle),
            "tree_edges": self.tree_edge_count,
            "action": self.action,
            "placed_at": self.placed_at,
            "label": str(self.label),
        }
        if self.new_vertex is not None:
            out["new_vertex"] = {"name": self.new_vertex[0], "word": str(self.new_vertex[1])}
        if self.certificate is not None:
            out["certificate"] = self.certificate
        return out


def _toward(t: Triangle, edge: Edge, anchor: Edge) -> OrientedEdge:
    """Orient ``edge`` from the vertex of t off ``anchor`` toward the vertex it shares with it."""
    off = t.opposite(anchor)
    shared = edge[0] if edge[1] == off else edge[1]
    return OrientedEdge(off, shared)


def _plan(g, tree, sym, t, cls):
    """What triangle t would emit: (placed_at, label, new_vertex)."""
    order = {e: i for i, e in enumerate(tree.edges)}
    in_tree = [e for e in t.edges if e in tree.edge_set]
    if cls.tree_edge_count == 2:
        e, f = sorted(in_tree, key=order.__getitem__)
        return sym[e], Word.gen(sym[f]), None

    def shortest(cands, anchor):
        words = []
        for f in cands:
            o = _toward(t, f, anchor)
            words.append((len(edge_word(g, tree, o, sym)), f, o))
        _, f, o = min(words)
        return edge_word(g, tree, o, sym)

    if cls.tree_edge_count == 1:
        (e,) = in_tree
        return sym[e], shortest([f for f in t.edges if f != e], e), None
    e = t.edges[0]
    name = "w_" + edge_symbol(e)[2:]
    label = shortest(list(t.edges[1:]), e)
    return name, label, (name, edge_word(g, tree, OrientedEdge(*e), sym))


def build_bb_wlog(
    g: SimplicialGraph,
    tree: SpanningTree,
    names: Mapping[Edge, str] | None = None,
    emit_all: bool = False,
    cycle_pruning: bool = True,
    assume: bool = False,
    gate: str | None = None,
) -> tuple[WlogGraph, list[EmissionRecord]]:
    """The WLOG whose group is H_Gamma, one loop per retained triangle.

    Triangles with two tree edges get a loop at one tree edge labelled by the
    other; with one tree edge, a loop at it labelled by the shorter word of a
    non-tree edge; with none, a new vertex w(e) carrying its defining word and
    a loop there. Unless ``emit_all``, redundant triangles are skipped:
    first strictly internal ones with an apex certificate, then (with
    ``cycle_pruning``) any triangle closing a 2-cycle with retained ones.
    Both require the relator's exterior image to lie in the span of the
    retained ones.
    """
    if gate is None:
        gate = _require_gate(g, assume)
    elif gate not in (CERTIFIED, ASSUMED):
        raise NotCertifiedSimplyConnected(gate)
    if tree.host != g:
        raise InvalidInput("tree does not span this graph")
    sym = _names(tree, names)
    alphabet = Alphabet(sym[e] for e in tree.edges)
    tris = triangles(g)
    classes = {t: classify_triangle(g, tree, t) for t in tris}
    plans = {t: _plan(g, tree, sym, t, classes[t]) for t in tris}

    vec = {}
    for t in tris:
        placed, label, new = plans[t]
        base = new[1] if new else Word.gen(placed)
        vec[t] = exterior_image(commutator(base.inverse(), label.inverse()), alphabet).vector()

    skipped: dict[Triangle, dict] = {}
    deps: dict[Triangle, set] = {}

    def retained_except(t):
        return [s for s in tris if s != t and s not in skipped]

    if not emit_all:
        candidates = [t for t in tris if classes[t].strictly_internal and classes[t].tree_edge_count < 2]
        changed = True
        while changed:
            changed = False
            for t in candidates:
                if t in skipped:
                    continue
                for x in apexes(g, t):
                    flanks = [Triangle.of(u, v, x) for u, v in t.edges]
                    # a skipped flank is usable only if its certificate does not lean on t
                    if any(f in skipped and t in deps[f] for f in flanks):
                        continue
                    if solve_in_row_span(vec[t], [vec[s] for s in retained_except(t)]) is None:
                        continue
                    skipped[t] = {"kind": "apex", "apex": x, "triangles": [list(f) for f in flanks]}
                    deps[t] = set(flanks).union(*(deps.get(f, set()) for f in flanks))
                    changed = True
                    break
        if cycle_pruning:
            for t in sorted(tris, key=lambda s: (classes[s].tree_edge_count, s)):
                if t in skipped:
                    continue
                others = retained_except(t)
                coeffs = solve_in_row_span(vec[t], [vec[s] for s in others])
                if coeffs is None:
                    continue
                support = [[list(s), c] for s, c in zip(others, coeffs) if c]
                skipped[t] = {"kind": "cycle", "triangles": support}
                deps[t] = {s for s, c in zip(others, coeffs) if c}

    vertices = [WlogVertex(sym[e]) for e in tree.edges]
    defined = set()
    edges = []
    records = []
    for t in tris:
        placed, label, new = plans[t]
        cnt = classes[t].tree_edge_count
        if t in skipped:
            records.append(EmissionRecord(t, cnt, SKIPPED, placed, label, new, skipped[t]))
            continue
        if new is not None and new[0] not in defined:
            defined.add(new[0])
            vertices.append(WlogVertex(new[0], new[1]))
        edges.append(WlogEdge(placed, placed, label, f"triangle {t}"))
        action = EMITTED_LOOP if new is None else EMITTED_VERTEX_AND_LOOP
        records.append(EmissionRecord(t, cnt, action, placed, label, new))
    return WlogGraph(tuple(vertices), tuple(edges)), records


@dataclass
class BBResult:
    graph: SimplicialGraph
    gate: str
    tree: SpanningTree
    tree_mode: str
    unfavourable: int
    wlog: WlogGraph
    emissions: list[EmissionRecord]
    report: MultiplierReport
    emit_all: bool
    h2_rank: int
    exterior_rank: int
    flag_boundary_rank: int
    abelianization: AbelianGroupDescriptor
    checks: dict = field(default_factory=dict)
    warnings: list[str] = field(default_factory=list)

    @property
    def loops(self) -> int:
        return len(self.wlog.edges)

    @property
    def skipped(self) -> int:
        return sum(r.action == SKIPPED for r in self.emissions)

    @property
    def agree(self) -> bool:
        return all(self.checks.values())


def bb_invariants(
    g: SimplicialGraph,
    tree: SpanningTree | None = None,
    mode: str = "exact",
    budget: int | None = None,
    emit_all: bool = False,
    assume: bool = False,
    names: Mapping[Edge, str] | None = None,
    cycle_pruning: bool = True,
) -> BBResult:
    """Gate, tree search, WLOG construction and H_2 / B~_0 with oracle checks.

    Disagreements between claims and oracles are recorded in ``checks``;
    nothing is raised for them.
    """
    gate = _require_gate(g, assume)
    if tree is None:
        tree, unfav = favourable_spanning_tree(g, mode, budget)
        tree_mode = mode
    else:
        unfav = sum(not classify_triangle(g, tree, t).favourable for t in triangles(g))
        tree_mode = "given"
    w, records = build_bb_wlog(g, tree, names, emit_all, cycle_pruning, gate=gate)
    report = multiplier_report(w)
    sp = substituted_presentation(w)
    ext = exterior_rank(sp.relators, sp.generators)
    h1, _ = presentation_complex_homology(sp.generators, sp.relators)
    fb = flag_boundary_rank(flag_two_skeleton(g))
    loops = len(w.edges)
    checks = {
        "b0_structurally_trivial": report.b0_rank_claim == 0 and report.oracle.b0_trivial_certified,
        "suspension": report.oracle.suspension.passed,
        "abelianization_free_rank_tree_edges": h1 == AbelianGroupDescriptor(len(tree.edges)),
        "exterior_rank_equals_flag_boundary_rank": ext == fb,
    }
    if not emit_all:
        checks["loops_equal_exterior_rank"] = loops == ext
    result = BBResult(
        graph=g,
        gate=gate,
        tree=tree,
        tree_mode=tree_mode,
        unfavourable=unfav,
        wlog=w,
        emissions=records,
        report=report,
        emit_all=emit_all,
        h2_rank=ext if emit_all else loops,
        exterior_rank=ext,
        flag_boundary_rank=fb,
        abelianization=h1,
        checks=checks,
    )
    if gate == ASSUMED:
        result.warnings.append("flag complex not certified simply connected; proceeding on assumption")
    for name, ok in checks.items():
        if not ok:
            msg = f"validation failed: {name}"
            log.warning(msg)
            result.warnings.append(msg)
    return result
