import json
from pathlib import Path

import pytest

from wlogkit.cli import main, render_text
from wlogkit.errors import InvalidInput
from wlogkit.io import (
    export_presentation,
    import_presentation,
    load_document,
    parse_dot,
    parse_input_document,
    presentation_from_json,
    presentation_to_json,
    wlog_from_json,
    wlog_to_json,
)
from wlogkit.wlog import WlogEdge, WlogGraph, WlogVertex, presentation
from wlogkit.words import parse_word

DATA = Path(__file__).resolve().parent.parent / "data"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_input_document_roundtrip():
    for name in ["fig2_graph.json", "artin_5_3_7.json"]:
        data = json.loads((DATA / name).read_text())
        doc = parse_input_document(data)
        assert parse_input_document(doc.to_json()) == doc
        assert doc.to_json() == data


@pytest.mark.parametrize(
    "data",
    [
        {"kind": "graph", "vertices": ["a", "b"], "edges": [{"u": "a", "v": "c"}]},
        {"kind": "graph", "vertices": ["1a"], "edges": []},
        {"kind": "graph", "vertices": ["a", "b"], "edges": [{"u": "a", "v": "b", "m": 2}]},
        {"kind": "artin", "vertices": ["a", "b"], "edges": [{"u": "a", "v": "b"}]},
        {"kind": "artin", "vertices": ["a", "b"], "edges": [{"u": "a", "v": "b", "m": "3"}]},
        {"kind": "artin", "vertices": ["a", "b"], "edges": [{"u": "a", "v": "b", "m": 1}]},
        {"kind": "banana", "vertices": [], "edges": []},
        {"vertices": [], "edges": []},
    ],
)
def test_input_document_rejects(data):
    with pytest.raises(InvalidInput):
        parse_input_document(data)


def test_wlog_roundtrip():
    w = WlogGraph(
        (WlogVertex("a"), WlogVertex("b"), WlogVertex("w", parse_word("a*b^-1"))),
        (WlogEdge("a", "b", parse_word("a^2*b")), WlogEdge("w", "w", parse_word("a"))),
    )
    assert wlog_from_json(wlog_to_json(w)) == w
    plain = wlog_from_json({"kind": "wlog", "vertices": ["x"], "edges": [{"o": "x", "t": "x", "label": "x"}]})
    assert plain.vertices == (WlogVertex("x"),)


def test_presentation_roundtrip():
    w = WlogGraph((WlogVertex("a"), WlogVertex("b")), (WlogEdge("a", "b", parse_word("a*b")),))
    p = presentation(w)
    assert presentation_from_json(presentation_to_json(p)).relators == p.relators
    back = import_presentation(export_presentation(p))
    assert back.generators == p.generators and back.relators == p.relators


def test_export_format():
    w = WlogGraph((WlogVertex("a"),), (WlogEdge("a", "a", parse_word("a")),))
    assert export_presentation(presentation(w)) == "a\n1\n"


def test_dot_import():
    doc = parse_dot((DATA / "k4.dot").read_text())
    assert doc.kind == "graph" and len(doc.edges) == 6
    assert parse_dot("strict graph { x; x -- y // note\n }").vertices == ("x", "y")
    with pytest.raises(InvalidInput):
        parse_dot("digraph { a -> b }")
    with pytest.raises(InvalidInput):
        parse_dot("graph { a -- b [weight=2] }")


def test_load_document_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(InvalidInput):
        load_document(bad)
    with pytest.raises(InvalidInput):
        load_document(tmp_path / "missing.json")


def test_bb_fig2(capsys):
    code, rep = run_json(capsys, "bb", DATA / "fig2_graph.json")
    assert code == 0
    assert rep["invariants"]["h2_rank"] == 4 and rep["invariants"]["b0_rank"] == 0
    assert rep["multiplier"]["oracle"]["agree"]
    assert len(rep["wlog"]["edges"]) == 4


def test_bb_k4_and_dot(capsys):
    code, rep = run_json(capsys, "bb", DATA / "k4.json")
    assert code == 0 and rep["invariants"]["h2_rank"] == 3 and rep["agree"]
    code, rep2 = run_json(capsys, "bb", DATA / "k4.dot")
    assert rep2["invariants"] == rep["invariants"]


def test_bb_square_exits_3(capsys):
    code, out, err = run(capsys, "bb", DATA / "c4.json")
    assert code == 3 and "refuted" in err
    code, _, _ = run(capsys, "bb", DATA / "c4.json", "--assume-simply-connected")
    assert code == 3


def test_bb_disagreement_exits_4_and_still_reports(capsys, tmp_path):
    out = tmp_path / "rep.json"
    code, _, err = run(capsys, "bb", DATA / "octahedron.json", "--apex-pruning-only", "--json", "-o", out)
    assert code == 4 and "disagreement" in err
    rep = json.loads(out.read_text())
    assert rep["checks"]["loops_equal_exterior_rank"] is False


def test_bb_budget_falls_back_to_greedy(capsys):
    code, rep = run_json(capsys, "bb", DATA / "fig2_graph.json", "--tree-budget", "2")
    assert code == 0 and rep["tree"]["mode"] == "greedy"
    assert any("greedy" in w for w in rep["warnings"])


def test_bb_emit_all(capsys):
    code, rep = run_json(capsys, "bb", DATA / "octahedron.json", "--emit-all")
    assert code == 0 and rep["invariants"]["loops"] == 8 and rep["invariants"]["h2_rank"] == 7


def test_artin_commands(capsys):
    code, rep = run_json(capsys, "artin", DATA / "artin_5_3_7.json")
    assert code == 0 and rep["invariants"] == {"h2_rank": 1, "b0_rank": 1}
    code, rep = run_json(capsys, "artin", DATA / "raag_path.json")
    assert rep["invariants"] == {"h2_rank": 3, "b0_rank": 0}
    code, rep = run_json(capsys, "artin", DATA / "braid_b3.json")
    assert rep["invariants"] == {"h2_rank": 0, "b0_rank": 0}


def test_kind_mismatch_exits_2(capsys):
    code, _, err = run(capsys, "artin", DATA / "fig2_graph.json")
    assert code == 2 and "error" in err
    code, _, _ = run(capsys, "bb", DATA / "artin_5_3_7.json")
    assert code == 2


def test_oracle_command(capsys, tmp_path):
    fig4 = {
        "kind": "wlog",
        "vertices": [{"name": f"v{i}"} for i in range(1, 6)],
        "edges": [
            {"o": "v1", "t": "v1", "label": "v2"},
            {"o": "v2", "t": "v2", "label": "v3"},
            {"o": "v3", "t": "v3", "label": "v4"},
            {"o": "v5", "t": "v5", "label": "v2^-1*v3"},
        ],
    }
    f = tmp_path / "fig4.json"
    f.write_text(json.dumps(fig4))
    code, rep = run_json(capsys, "oracle", f)
    assert code == 0 and rep["suspension"]["pass"]
    assert (rep["homology"]["h1"], rep["homology"]["h2_rank"]) == ("Z^5", 4)
    f.write_text(json.dumps({"kind": "wlog", "vertices": ["x", "y", "z"], "edges": []}))
    code, rep = run_json(capsys, "oracle", f)
    assert (rep["homology"]["h1"], rep["homology"]["h2_rank"]) == ("Z^3", 0)
    f.write_text(json.dumps({"kind": "presentation", "generators": ["a", "b"], "relators": ["a*b*a^-1*b^-2"]}))
    code, rep = run_json(capsys, "oracle", f)
    assert code == 0 and rep["homology"]["exterior_rank"] == "not-applicable"
    code, _, _ = run(capsys, "oracle", DATA / "k4.json")
    assert code == 2


def test_flag_check(capsys):
    code, rep = run_json(capsys, "flag-check", DATA / "fig2_graph.json")
    assert code == 0 and rep["gate"] == "certified"
    code, rep = run_json(capsys, "flag-check", DATA / "c4.json")
    assert code == 3 and rep["gate"] == "refuted" and rep["flag_h1"] == "Z"


def test_export_presentation_file(capsys, tmp_path):
    path = tmp_path / "p.txt"
    code, _, _ = run(capsys, "artin", DATA / "artin_5_3_7.json", "--export-presentation", path)
    lines = path.read_text().splitlines()
    assert code == 0 and lines[0] == "a1,a2,a3" and lines[2] == "a1*a3*a1*a3^-1*a1^-1*a3^-1"


def test_text_and_json_agree(capsys):
    _, rep = run_json(capsys, "bb", DATA / "fig2_graph.json")
    _, text, _ = run(capsys, "bb", DATA / "fig2_graph.json")
    assert text == render_text(rep)
    assert "h2_rank: 4" in text


def test_reports_are_byte_identical(capsys):
    first = run(capsys, "bb", DATA / "octahedron.json", "--json")
    second = run(capsys, "bb", DATA / "octahedron.json", "--json")
    assert first == second
