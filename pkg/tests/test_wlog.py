import pytest

from wlogkit.errors import InvalidWlog
from wlogkit.homology import presentation_complex_homology
from wlogkit.wlog import (
    WlogEdge,
    WlogGraph,
    WlogVertex,
    components_and_forest,
    fundamental_loops,
    lambda_image,
    multiplier_report,
    presentation,
    substituted_presentation,
    wlog_from_parts,
)
from wlogkit.words import Word, commutator, parse_word


def W(text):
    return parse_word(text)


@pytest.fixture
def fig4():
    return wlog_from_parts(
        ["v1", "v2", "v3", "v4", "v5"],
        [("v1", "v1", W("v2")), ("v2", "v2", W("v3")), ("v3", "v3", W("v4")), ("v5", "v5", W("v2^-1*v3"))],
    )


@pytest.fixture
def fig5():
    return wlog_from_parts(
        ["a1", "a2", "a3"],
        [("a1", "a2", W("a2*a1*a2*a1")), ("a1", "a3", W("a3*a1")), ("a2", "a3", W("a3*a2*a3*a2*a3*a2"))],
    )


def test_validation():
    with pytest.raises(InvalidWlog):
        wlog_from_parts(["a"], [("a", "a", Word())])
    with pytest.raises(InvalidWlog):
        wlog_from_parts(["a"], [("a", "b", W("a"))])
    with pytest.raises(InvalidWlog):
        wlog_from_parts(["a"], [("a", "a", W("z"))])
    with pytest.raises(InvalidWlog):
        wlog_from_parts(["a", "a"], [])
    with pytest.raises(InvalidWlog):
        WlogGraph((WlogVertex("x", W("y")), WlogVertex("y", W("x"))), ()).substitute(W("x"))


def test_fig4_presentation(fig4):
    p = presentation(fig4)
    assert len(p.relators) == 4
    assert p.relators[0] == W("v1*v2*v1^-1*v2^-1")
    assert p.relators[3] == W("v5*v2^-1*v3*v5^-1*v3^-1*v2")


def test_degenerate_relator_is_flagged(caplog):
    w = wlog_from_parts(["a"], [("a", "a", W("a"))])
    p = presentation(w)
    assert p.degenerate == [0]
    assert "degenerate" in caplog.text


def test_fig5_relator_is_artin_relation(fig5):
    r = presentation(fig5).relators[0]
    lhs = W("a1") * W("a2*a1") ** 2
    rhs = W("a2*a1") ** 2 * W("a2")
    assert r == lhs * rhs.inverse()


def test_decomposition(fig4, fig5):
    d = components_and_forest(fig4)
    assert len(d.components) == 5 and d.forest_edges == () and d.extra_edges == (0, 1, 2, 3)
    assert d.nonloop_edges == ()
    d = components_and_forest(fig5)
    assert len(d.components) == 1 and d.forest_edges == (0, 2) and d.nonloop_edges == (1,)
    d = components_and_forest(wlog_from_parts(["x", "y", "z"], []))
    assert len(d.components) == 3 and d.extra_edges == ()


def test_fundamental_loops(fig4, fig5):
    assert [i for _, i in fundamental_loops(fig5, components_and_forest(fig5))] == [1]
    assert len(fundamental_loops(fig4, components_and_forest(fig4))) == 4
    forest = wlog_from_parts(["x", "y"], [("x", "y", W("x"))])
    assert fundamental_loops(forest, components_and_forest(forest)) == []


def test_lambda_images(fig4, fig5):
    d = components_and_forest(fig4)
    assert lambda_image(fig4, d, (3, 3)) == W("v2^-1*v3")
    d = components_and_forest(fig5)
    # edge a1->a3 read through the forest: path to a1 is empty, path to a3 goes via a2
    assert lambda_image(fig5, d, (0, 1)) == W("a3*a1") * (W("a2*a1*a2*a1") * W("a3*a2*a3*a2*a3*a2")).inverse()


def test_lambda_image_on_path_component():
    # base b, forest b -> x -> v, loop at v
    w = wlog_from_parts(
        ["b", "v", "x"], [("b", "x", W("b*v")), ("x", "v", W("x^2")), ("v", "v", W("b"))]
    )
    d = components_and_forest(w)
    l1, l2, u = W("b*v"), W("x^2"), W("b")
    assert lambda_image(w, d, (0, 2)) == l1 * l2 * u * (l1 * l2).inverse()


def test_multiplier_fig4(fig4):
    rep = multiplier_report(fig4)
    assert (rep.h2_rank_claim, rep.b0_rank_claim) == (4, 0)
    assert rep.oracle.agree and rep.oracle.h2_exact
    assert [g.commutator_word for g in rep.h2_generators][0] == commutator(W("v2"), W("v1"))


def test_multiplier_fig5(fig5):
    rep = multiplier_report(fig5)
    assert (rep.h2_rank_claim, rep.b0_rank_claim) == (1, 1)
    assert rep.oracle.suspension.passed
    assert (str(rep.oracle.suspension.h1), rep.oracle.suspension.h2_rank) == ("Z", 1)
    assert rep.oracle.h2_agree


def test_multiplier_edgeless():
    rep = multiplier_report(wlog_from_parts(["x", "y"], []))
    assert (rep.h2_rank_claim, rep.b0_rank_claim, rep.h2_generators) == (0, 0, [])


def test_substituted_presentation_expands_definitions():
    w = WlogGraph(
        (WlogVertex("a"), WlogVertex("b"), WlogVertex("w", W("a*b"))),
        (WlogEdge("w", "w", W("a")),),
    )
    sp = substituted_presentation(w)
    assert list(sp.generators) == ["a", "b"]
    assert sp.relators[0] == commutator(W("a*b").inverse(), W("a").inverse())
    h1, h2 = presentation_complex_homology(sp.generators, sp.relators)
    assert str(h1) == "Z^2" and h2 == 1
