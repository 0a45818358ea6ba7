"""Word labelled oriented graphs: Schur multipliers of Bestvina-Brady and Artin groups."""

from .artin import ArtinTitsSystem, artin_invariants, build_artin_wlog, component_count_check
from .bestvina_brady import (
    bb_invariants,
    build_bb_wlog,
    dicks_leary_presentation,
    edge_word,
    flag_gate,
    ps_presentation,
)
from .errors import (
    BudgetExceeded,
    InvalidInput,
    InvalidWlog,
    NotCertifiedSimplyConnected,
    NotInCommutatorSubgroup,
    WlogkitError,
)
from .graphs import SimplicialGraph, SpanningTree, Triangle, favourable_spanning_tree, triangles
from .homology import AbelianGroupDescriptor, smith_normal_form, suspension_check
from .wlog import WlogEdge, WlogGraph, WlogVertex, components_and_forest, multiplier_report, presentation
from .words import Alphabet, Word, commutator, exterior_image, format_word, parse_word

__all__ = [
    "AbelianGroupDescriptor",
    "Alphabet",
    "ArtinTitsSystem",
    "BudgetExceeded",
    "InvalidInput",
    "InvalidWlog",
    "NotCertifiedSimplyConnected",
    "NotInCommutatorSubgroup",
    "SimplicialGraph",
    "SpanningTree",
    "Triangle",
    "WlogEdge",
    "WlogGraph",
    "WlogVertex",
    "WlogkitError",
    "Word",
    "artin_invariants",
    "bb_invariants",
    "build_artin_wlog",
    "build_bb_wlog",
    "commutator",
    "component_count_check",
    "components_and_forest",
    "dicks_leary_presentation",
    "edge_word",
    "exterior_image",
    "favourable_spanning_tree",
    "flag_gate",
    "format_word",
    "multiplier_report",
    "parse_word",
    "presentation",
    "ps_presentation",
    "smith_normal_form",
    "suspension_check",
    "triangles",
]
