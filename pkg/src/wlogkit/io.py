"""JSON documents, a DOT-subset importer and the plain-text presentation format."""

from __future__ import annotations

import json
import os
import re
import tempfile
from dataclasses import dataclass
from pathlib import Path

from .errors import InvalidInput
from .graphs import SimplicialGraph
from .artin import ArtinTitsSystem
from .wlog import Presentation, WlogEdge, WlogGraph, WlogVertex
from .words import Alphabet, format_word, is_identifier, parse_word


@dataclass(frozen=True)
class InputDocument:
    kind: str  # "graph" or "artin"
    vertices: tuple[str, ...]
    edges: tuple[tuple, ...]  # (u, v) or (u, v, m)

    def __post_init__(self):
        if self.kind not in ("graph", "artin"):
            raise InvalidInput(f"unknown kind {self.kind!r}")

    def graph(self) -> SimplicialGraph:
        return SimplicialGraph.build(self.vertices, [e[:2] for e in self.edges])

    def artin(self) -> ArtinTitsSystem:
        if self.kind != "artin":
            raise InvalidInput("document is not an Artin system")
        return ArtinTitsSystem.build(self.vertices, self.edges)

    def to_json(self) -> dict:
        edges = []
        for e in self.edges:
            d = {"u": e[0], "v": e[1]}
            if self.kind == "artin":
                d["m"] = e[2]
            edges.append(d)
        return {"kind": self.kind, "vertices": list(self.vertices), "edges": edges}


def _require(obj, key, typ, where="document"):
    if not isinstance(obj, dict) or key not in obj:
        raise InvalidInput(f"{where}: missing field {key!r}")
    val = obj[key]
    if not isinstance(val, typ):
        raise InvalidInput(f"{where}: field {key!r} has the wrong type")
    return val


def parse_input_document(data: dict) -> InputDocument:
    kind = _require(data, "kind", str)
    if kind not in ("graph", "artin"):
        raise InvalidInput(f"kind must be 'graph' or 'artin' here, got {kind!r}")
    vertices = _require(data, "vertices", list)
    for v in vertices:
        if not isinstance(v, str) or not is_identifier(v):
            raise InvalidInput(f"vertex {v!r} is not an identifier")
    edges = []
    for i, e in enumerate(_require(data, "edges", list)):
        where = f"edge {i}"
        u = _require(e, "u", str, where)
        v = _require(e, "v", str, where)
        if kind == "artin":
            if "m" not in e:
                raise InvalidInput(f"{where}: Artin edge needs a label m")
            m = e["m"]
            if not isinstance(m, int) or isinstance(m, bool):
                raise InvalidInput(f"{where}: m must be an integer")
            edges.append((u, v, m))
        else:
            if "m" in e:
                raise InvalidInput(f"{where}: graph edges take no label")
            edges.append((u, v))
    doc = InputDocument(kind, tuple(vertices), tuple(edges))
    # validate the simplicial constraints up front
    doc.artin() if kind == "artin" else doc.graph()
    return doc


def wlog_to_json(w: WlogGraph) -> dict:
    vertices = []
    for v in w.vertices:
        vertices.append({"name": v.name} if v.word is None else {"name": v.name, "word": format_word(v.word)})
    edges = [{"o": e.origin, "t": e.terminus, "label": format_word(e.label)} for e in w.edges]
    return {"kind": "wlog", "vertices": vertices, "edges": edges}


def wlog_from_json(data: dict) -> WlogGraph:
    vs = []
    for i, v in enumerate(_require(data, "vertices", list)):
        if isinstance(v, str):
            vs.append(WlogVertex(v))
            continue
        name = _require(v, "name", str, f"vertex {i}")
        word = v.get("word")
        if word is not None and not isinstance(word, str):
            raise InvalidInput(f"vertex {i}: word must be a string")
        vs.append(WlogVertex(name, parse_word(word) if word is not None else None))
    alphabet = Alphabet(v.name for v in vs)
    es = []
    for i, e in enumerate(_require(data, "edges", list)):
        where = f"edge {i}"
        label = parse_word(_require(e, "label", str, where), alphabet)
        es.append(WlogEdge(_require(e, "o", str, where), _require(e, "t", str, where), label))
    return WlogGraph(tuple(vs), tuple(es))


def presentation_to_json(p: Presentation) -> dict:
    return {
        "kind": "presentation",
        "generators": list(p.generators),
        "relators": [format_word(r) for r in p.relators],
    }


def presentation_from_json(data: dict) -> Presentation:
    gens = _require(data, "generators", list)
    for g in gens:
        if not isinstance(g, str) or not is_identifier(g):
            raise InvalidInput(f"generator {g!r} is not an identifier")
    alphabet = Alphabet(gens)
    rels = []
    for r in _require(data, "relators", list):
        if not isinstance(r, str):
            raise InvalidInput("relators must be strings")
        rels.append(parse_word(r, alphabet))
    return Presentation(alphabet, tuple(rels))


def export_presentation(p: Presentation) -> str:
    """First line: comma-separated generators; then one relator per line."""
    lines = [",".join(p.generators)]
    lines += [format_word(r) for r in p.relators]
    return "\n".join(lines) + "\n"


def import_presentation(text: str) -> Presentation:
    lines = text.splitlines()
    if not lines:
        raise InvalidInput("empty presentation text")
    gens = [g.strip() for g in lines[0].split(",") if g.strip()]
    for g in gens:
        if not is_identifier(g):
            raise InvalidInput(f"generator {g!r} is not an identifier")
    alphabet = Alphabet(gens)
    return Presentation(alphabet, tuple(parse_word(ln.strip(), alphabet) for ln in lines[1:] if ln.strip()))


_DOT_HEADER = re.compile(r"^\s*(strict\s+)?graph\s*(\w+)?\s*\{(.*)\}\s*$", re.S)
_DOT_EDGE = re.compile(r"^(\w+)\s*--\s*(\w+)$")
_DOT_NODE = re.compile(r"^(\w+)$")


def parse_dot(text: str) -> InputDocument:
    """Undirected simple graphs only: node statements and plain a -- b edges."""
    text = re.sub(r"//[^\n]*|#[^\n]*|/\*.*?\*/", "", text, flags=re.S)
    m = _DOT_HEADER.match(text)
    if not m:
        raise InvalidInput("expected 'graph { ... }'")
    vertices: list[str] = []
    edges = []

    def add(v):
        if v not in vertices:
            vertices.append(v)

    for stmt in re.split(r"[;\n]", m.group(3)):
        stmt = stmt.strip()
        if not stmt:
            continue
        if em := _DOT_EDGE.match(stmt):
            add(em.group(1))
            add(em.group(2))
            edges.append((em.group(1), em.group(2)))
        elif nm := _DOT_NODE.match(stmt):
            add(nm.group(1))
        else:
            raise InvalidInput(f"unsupported DOT statement: {stmt!r}")
    doc = InputDocument("graph", tuple(vertices), tuple(edges))
    doc.graph()
    return doc


def load_document(path) -> tuple[str, object]:
    """Read a file and return (kind, parsed object)."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise InvalidInput(f"cannot read {path}: {exc}") from exc
    if path.suffix in (".dot", ".gv"):
        return "graph", parse_dot(text)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"{path}: not valid JSON ({exc})") from exc
    kind = _require(data, "kind", str)
    if kind == "wlog":
        return kind, wlog_from_json(data)
    if kind == "presentation":
        return kind, presentation_from_json(data)
    return kind, parse_input_document(data)


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def write_atomic(path, text: str) -> None:
    """Write via a temporary file in the target directory, then rename."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
