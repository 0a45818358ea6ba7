"""Word labelled oriented graphs, their presentations, and multiplier generators."""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import InvalidWlog, NotInCommutatorSubgroup
from .homology import (
    SuspensionReport,
    exterior_rank,
    presentation_complex_homology,
    relative_exterior_rank,
    suspension_check,
)
from .words import Alphabet, Word, commutator, format_word, is_identifier

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class WlogVertex:
    name: str
    word: Word | None = None  # defining word over the other vertices, if any


@dataclass(frozen=True)
class WlogEdge:
    origin: str
    terminus: str
    label: Word
    source: str = field(default="", compare=False)  # provenance tag, carried into the presentation

    @property
    def is_loop(self) -> bool:
        return self.origin == self.terminus


@dataclass(frozen=True)
class WlogGraph:
    vertices: tuple[WlogVertex, ...]
    edges: tuple[WlogEdge, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))
        names = [v.name for v in self.vertices]
        if len(set(names)) != len(names):
            raise InvalidWlog("duplicate WLOG vertex")
        for n in names:
            if not is_identifier(n):
                raise InvalidWlog(f"vertex name {n!r} is not an identifier")
        known = set(names)
        for v in self.vertices:
            if v.word is not None and not v.word.symbols() <= known:
                raise InvalidWlog(f"defining word of {v.name} uses undeclared symbols")
        for i, e in enumerate(self.edges):
            if e.origin not in known or e.terminus not in known:
                raise InvalidWlog(f"edge {i} has an undeclared endpoint")
            if not e.label:
                raise InvalidWlog(f"edge {i} ({e.origin}->{e.terminus}) has an empty label")
            if not e.label.symbols() <= known:
                raise InvalidWlog(f"label of edge {i} uses undeclared symbols")

    @cached_property
    def alphabet(self) -> Alphabet:
        return Alphabet(v.name for v in self.vertices)

    @cached_property
    def definitions(self) -> dict[str, Word]:
        return {v.name: v.word for v in self.vertices if v.word is not None}

    def substitute(self, w: Word) -> Word:
        """Expand defining words until only undefined vertices remain."""
        defs = self.definitions
        for _ in range(len(defs) + 1):
            if not (w.symbols() & defs.keys()):
                return w
            w = w.substitute(defs)
        raise InvalidWlog("defining words are circular")

    @cached_property
    def base_alphabet(self) -> Alphabet:
        """Vertices without a defining word."""
        return Alphabet(v.name for v in self.vertices if v.word is None)

    def edge_relator(self, e: WlogEdge) -> Word:
        o, t = Word.gen(e.origin), Word.gen(e.terminus)
        return o * e.label * t.inverse() * e.label.inverse()


@dataclass(frozen=True)
class Presentation:
    generators: Alphabet
    relators: tuple[Word, ...]
    provenance: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "relators", tuple(self.relators))
        if not self.provenance:
            object.__setattr__(self, "provenance", ("",) * len(self.relators))
        object.__setattr__(self, "provenance", tuple(self.provenance))
        if len(self.provenance) != len(self.relators):
            raise InvalidWlog("provenance length does not match relators")

    @property
    def degenerate(self) -> list[int]:
        return [i for i, r in enumerate(self.relators) if not r]


def presentation(w: WlogGraph) -> Presentation:
    """<V | o(e) lambda(e) = lambda(e) t(e)>, one relator per edge, defining words untouched."""
    relators = []
    tags = []
    for i, e in enumerate(w.edges):
        r = w.edge_relator(e)
        if not r:
            log.warning("relator of edge %d (%s->%s, %s) is degenerate", i, e.origin, e.terminus, e.label)
        relators.append(r)
        tags.append(e.source or f"edge {i}")
    return Presentation(w.alphabet, relators, tags)


def substituted_presentation(w: WlogGraph) -> Presentation:
    """Presentation over the undefined vertices with defining words expanded."""
    p = presentation(w)
    return Presentation(w.base_alphabet, [w.substitute(r) for r in p.relators], p.provenance)


@dataclass(frozen=True)
class ComponentDecomposition:
    components: tuple[tuple[str, ...], ...]  # vertex tuples, base vertex first
    forest_edges: tuple[int, ...]
    loop_edges: tuple[int, ...]
    nonloop_edges: tuple[int, ...]
    component_of: dict = field(repr=False, compare=False, default_factory=dict)

    @property
    def bases(self) -> tuple[str, ...]:
        return tuple(c[0] for c in self.components)

    @property
    def extra_edges(self) -> tuple[int, ...]:
        return tuple(sorted(self.loop_edges + self.nonloop_edges))


def components_and_forest(w: WlogGraph) -> ComponentDecomposition:
    """Components, bases (least vertex) and a depth-first spanning forest.

    Neighbours are visited in lexicographic order, parallel edges by
    declaration order.
    """
    incident: dict[str, list[tuple[str, int]]] = {v.name: [] for v in w.vertices}
    for i, e in enumerate(w.edges):
        if e.is_loop:
            continue
        incident[e.origin].append((e.terminus, i))
        incident[e.terminus].append((e.origin, i))
    for lst in incident.values():
        lst.sort()
    seen = set()
    components = []
    forest = []
    component_of = {}
    for base in sorted(incident):
        if base in seen:
            continue
        order = [base]
        stack = [base]
        seen.add(base)
        # iterative DFS: always descend into the least unseen neighbour
        while stack:
            x = stack[-1]
            for y, i in incident[x]:
                if y not in seen:
                    seen.add(y)
                    forest.append(i)
                    order.append(y)
                    stack.append(y)
                    break
            else:
                stack.pop()
        for x in order:
            component_of[x] = len(components)
        components.append(tuple(order))
    forest_set = set(forest)
    loops = tuple(i for i, e in enumerate(w.edges) if e.is_loop)
    nonloops = tuple(i for i, e in enumerate(w.edges) if not e.is_loop and i not in forest_set)
    return ComponentDecomposition(tuple(components), tuple(sorted(forest)), loops, nonloops, component_of)


def fundamental_loops(w: WlogGraph, d: ComponentDecomposition) -> list[tuple[int, int]]:
    """(component index, edge index) for each non-forest edge, in declaration order."""
    return [(d.component_of[w.edges[i].origin], i) for i in d.extra_edges]


def _forest_labels(w: WlogGraph, d: ComponentDecomposition) -> dict[str, Word]:
    """lambda-image of the forest path from each vertex's base to the vertex."""
    adj: dict[str, list[tuple[str, int]]] = {v.name: [] for v in w.vertices}
    for i in d.forest_edges:
        e = w.edges[i]
        adj[e.origin].append((e.terminus, i))
        adj[e.terminus].append((e.origin, i))
    labels = {}
    for base in d.bases:
        labels[base] = Word()
        queue = deque([base])
        while queue:
            x = queue.popleft()
            for y, i in sorted(adj[x]):
                if y in labels:
                    continue
                e = w.edges[i]
                step = e.label if e.origin == x else e.label.inverse()
                labels[y] = labels[x] * step
                queue.append(y)
    return labels


def lambda_image(w: WlogGraph, d: ComponentDecomposition, loop: tuple[int, int]) -> Word:
    """g1 lambda(e) g2^-1 for the fundamental loop through non-forest edge e."""
    _, i = loop
    e = w.edges[i]
    paths = _forest_labels(w, d)
    return paths[e.origin] * e.label * paths[e.terminus].inverse()


@dataclass(frozen=True)
class MultiplierGenerator:
    base_vertex: str
    loop_word: Word
    edge: int
    relator_word: Word  # relator of the edge, transported to the base

    @property
    def commutator_word(self) -> Word:
        return commutator(self.loop_word, Word.gen(self.base_vertex))

    def to_json(self, w: WlogGraph | None = None) -> dict:
        out = {
            "edge": self.edge,
            "base": self.base_vertex,
            "loop_word": format_word(self.loop_word),
            "commutator": format_word(self.commutator_word),
            "relator": format_word(self.relator_word),
        }
        if w is not None:
            out["edge_relator"] = format_word(w.edge_relator(w.edges[self.edge]))
        if w is not None and w.definitions:
            out["commutator_expanded"] = format_word(w.substitute(self.commutator_word))
        return out


@dataclass
class OracleRecord:
    suspension: SuspensionReport
    exterior_rank: int | None  # None: relators not all in the commutator subgroup
    h2_lower: int  # class-2 lower bound
    h2_upper: int  # H_2 of the presentation complex
    h2_claim: int
    b0_claim: int
    b0_trivial_certified: bool  # every non-forest relator is a literal commutator
    notes: list[str] = field(default_factory=list)

    @property
    def h2_agree(self) -> bool:
        return self.h2_lower <= self.h2_claim <= self.h2_upper

    @property
    def h2_exact(self) -> bool:
        return self.h2_lower == self.h2_claim == self.h2_upper

    @property
    def b0_agree(self) -> bool:
        if self.b0_claim == 0:
            return self.b0_trivial_certified
        return self.b0_claim <= self.h2_upper

    @property
    def agree(self) -> bool:
        return self.suspension.passed and self.h2_agree and self.b0_agree

    def to_json(self) -> dict:
        return {
            "suspension": self.suspension.to_json(),
            "exterior_rank": self.exterior_rank if self.exterior_rank is not None else "not-applicable",
            "h2": {
                "claim": self.h2_claim,
                "lower_bound": self.h2_lower,
                "upper_bound": self.h2_upper,
                "status": "exact" if self.h2_exact else ("consistent" if self.h2_agree else "disagree"),
                "agree": self.h2_agree,
            },
            "b0": {
                "claim": self.b0_claim,
                "trivial_certified": self.b0_trivial_certified,
                "agree": self.b0_agree,
            },
            "agree": self.agree,
            "notes": list(self.notes),
        }


@dataclass
class MultiplierReport:
    h2_rank_claim: int
    b0_rank_claim: int
    h2_generators: list[MultiplierGenerator]
    b0_generators: list[MultiplierGenerator]
    oracle: OracleRecord

    def to_json(self, w: WlogGraph | None = None) -> dict:
        return {
            "h2_rank": self.h2_rank_claim,
            "b0_rank": self.b0_rank_claim,
            "h2_generators": [g.to_json(w) for g in self.h2_generators],
            "b0_generators": [g.to_json(w) for g in self.b0_generators],
            "oracle": self.oracle.to_json(),
        }


def multiplier_report(w: WlogGraph, d: ComponentDecomposition | None = None) -> MultiplierReport:
    """Rank claims and generator words for H_2 and B~_0, with oracle evidence.

    Claims: H_2 rank = number of non-forest edges, B~_0 rank = number of
    non-forest non-loop edges. Oracle bounds are computed on the presentation
    with defining words expanded.
    """
    if d is None:
        d = components_and_forest(w)
    loops = fundamental_loops(w, d)
    paths = _forest_labels(w, d)
    h2_gens, b0_gens = [], []
    for comp, i in loops:
        e = w.edges[i]
        base = d.bases[comp]
        g1, g2 = paths[e.origin], paths[e.terminus]
        loop_word = g1 * e.label * g2.inverse()
        lam = e.label
        transported = g2 * lam.inverse() * Word.gen(e.origin).inverse() * lam * Word.gen(e.terminus) * g2.inverse()
        gen = MultiplierGenerator(base, loop_word, i, transported)
        h2_gens.append(gen)
        if not e.is_loop:
            b0_gens.append(gen)

    sp = substituted_presentation(w)
    extra_relators = [sp.relators[i] for i in d.extra_edges]
    try:
        ext = exterior_rank(sp.relators, sp.generators)
    except NotInCommutatorSubgroup:
        ext = None
    lower = relative_exterior_rank(list(sp.relators), sp.generators)
    _, upper = presentation_complex_homology(sp.generators, sp.relators)
    # a loop relator is the commutator [o^-1, lambda^-1]; check the expanded words literally
    b0_certified = True
    for i, r in zip(d.extra_edges, extra_relators):
        e = w.edges[i]
        o = w.substitute(Word.gen(e.origin))
        if not e.is_loop or r != commutator(o.inverse(), w.substitute(e.label).inverse()):
            b0_certified = False
    oracle = OracleRecord(
        suspension=suspension_check(w),
        exterior_rank=ext,
        h2_lower=lower,
        h2_upper=upper,
        h2_claim=len(h2_gens),
        b0_claim=len(b0_gens),
        b0_trivial_certified=b0_certified,
    )
    return MultiplierReport(len(h2_gens), len(b0_gens), h2_gens, b0_gens, oracle)


def wlog_from_parts(
    vertices: Iterable[str | tuple[str, Word | None]], edges: Sequence[tuple[str, str, Word]]
) -> WlogGraph:
    vs = []
    for v in vertices:
        vs.append(WlogVertex(v) if isinstance(v, str) else WlogVertex(*v))
    return WlogGraph(tuple(vs), tuple(WlogEdge(o, t, lab) for o, t, lab in edges))
