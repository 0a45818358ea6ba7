import itertools

import pytest

from conftest import FIG2_TREE
from wlogkit.errors import BudgetExceeded, InvalidInput
from wlogkit.graphs import (
    SimplicialGraph,
    SpanningTree,
    Triangle,
    apexes,
    bfs_tree,
    classify_triangle,
    complete_graph,
    edge_set_complement,
    favourable_spanning_tree,
    flag_two_skeleton,
    is_internal,
    is_strictly_internal,
    spanning_trees,
    tree_path,
    triangles,
    unfavourable_count,
)


def path_graph(n):
    vs = [f"a{i}" for i in range(1, n + 1)]
    return SimplicialGraph.build(vs, zip(vs, vs[1:]))


def test_rejects_loops_multi_edges_and_unknown_endpoints():
    with pytest.raises(InvalidInput):
        SimplicialGraph.build(["a"], [("a", "a")])
    with pytest.raises(InvalidInput):
        SimplicialGraph.build(["a", "b"], [("a", "b"), ("b", "a")])
    with pytest.raises(InvalidInput):
        SimplicialGraph.build(["a"], [("a", "b")])


def test_triangle_lists(fig2):
    assert triangles(fig2) == [
        Triangle("a1", "a2", "a5"),
        Triangle("a2", "a3", "a4"),
        Triangle("a2", "a4", "a5"),
        Triangle("a4", "a5", "a6"),
    ]
    assert triangles(path_graph(5)) == []
    assert len(triangles(complete_graph(5))) == 10


def test_edge_set_complement(internal_demo, k4):
    comp = edge_set_complement(internal_demo, Triangle.of("a3", "a4", "a7"))
    assert "a7" not in comp.vertices
    assert edge_set_complement(complete_graph(3), Triangle.of("a1", "a2", "a3")).vertices == ()
    for t in triangles(k4):
        assert set(edge_set_complement(k4, t).vertices) == set(k4.vertices)


def test_internal_triangles(internal_demo, k4):
    internal = {t for t in triangles(internal_demo) if is_internal(internal_demo, t)}
    assert internal == {Triangle.of("a2", "a4", "a5"), Triangle.of("a2", "a3", "a4")}
    assert all(is_internal(k4, t) and is_strictly_internal(k4, t) for t in triangles(k4))


def test_strictly_internal(fig2):
    assert not is_strictly_internal(fig2, Triangle.of("a4", "a5", "a6"))
    assert not is_strictly_internal(complete_graph(3), Triangle.of("a1", "a2", "a3"))


def test_apexes(k4):
    assert apexes(k4, Triangle.of("a2", "a3", "a4")) == ["a1"]


def test_classification(fig2, fig2_tree, k4):
    c = classify_triangle(fig2, fig2_tree, Triangle.of("a1", "a2", "a5"))
    assert c.tree_edge_count == 2 and c.favourable
    c = classify_triangle(fig2, fig2_tree, Triangle.of("a4", "a5", "a6"))
    assert c.tree_edge_count == 1 and not c.strictly_internal and not c.favourable
    star = SpanningTree(k4, [("a1", "a2"), ("a1", "a3"), ("a1", "a4")])
    c = classify_triangle(k4, star, Triangle.of("a2", "a3", "a4"))
    assert c.tree_edge_count == 0 and c.strictly_internal and c.favourable


def test_classification_invariants(fig2):
    for tree in spanning_trees(fig2):
        st = SpanningTree(fig2, tree)
        for t in triangles(fig2):
            c = classify_triangle(fig2, st, t)
            assert c.tree_edge_count <= 2
            assert not c.strictly_internal or c.internal
            assert c.favourable == (c.tree_edge_count == 2 or c.strictly_internal)


def test_spanning_tree_validation(fig2):
    with pytest.raises(InvalidInput):
        SpanningTree(fig2, FIG2_TREE[:-1])
    with pytest.raises(InvalidInput):
        SpanningTree(fig2, [("a1", "a2"), ("a1", "a5"), ("a2", "a5"), ("a2", "a3"), ("a4", "a6")])


def test_spanning_tree_enumeration_matches_brute_force(fig2):
    trees = list(spanning_trees(fig2))
    assert trees == sorted(trees)
    brute = []
    for combo in itertools.combinations(fig2.edge_list, len(fig2.vertices) - 1):
        try:
            SpanningTree(fig2, combo)
        except InvalidInput:
            continue
        brute.append(combo)
    assert trees == brute


def test_favourable_tree_fig2(fig2, fig2_tree):
    tree, count = favourable_spanning_tree(fig2)
    assert count == 1
    assert count == min(unfavourable_count(fig2, SpanningTree(fig2, t)) for t in spanning_trees(fig2))
    assert unfavourable_count(fig2, fig2_tree) == 1


def test_favourable_tree_trivial_cases(k4):
    g = path_graph(4)
    tree, count = favourable_spanning_tree(g)
    assert set(tree.edges) == g.edges and count == 0
    assert favourable_spanning_tree(k4)[1] == 0


def test_greedy_tree_never_beats_exact(fig2):
    assert favourable_spanning_tree(fig2, "greedy")[1] >= favourable_spanning_tree(fig2)[1]


def test_budget(fig2, monkeypatch):
    with pytest.raises(BudgetExceeded):
        favourable_spanning_tree(fig2, budget=3)
    monkeypatch.setenv("WLOGKIT_TREE_BUDGET", "2")
    with pytest.raises(BudgetExceeded):
        favourable_spanning_tree(fig2)
    monkeypatch.setenv("WLOGKIT_TREE_BUDGET", "zero")
    with pytest.raises(InvalidInput):
        favourable_spanning_tree(fig2)


def test_tree_paths(fig2_tree):
    assert tree_path(fig2_tree, "a5", "a4") == [(("a2", "a5"), -1), (("a2", "a4"), 1)]
    assert tree_path(fig2_tree, "a3", "a3") == []
    g = path_graph(3)
    assert tree_path(SpanningTree(g, g.edge_list), "a1", "a3") == [(("a1", "a2"), 1), (("a2", "a3"), 1)]


def test_flag_skeleton_counts(fig2):
    sq = SimplicialGraph.build(["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("c", "d"), ("a", "d")])
    for g, counts in [(complete_graph(3), (3, 3, 1)), (fig2, (6, 9, 4)), (sq, (4, 4, 0))]:
        sk = flag_two_skeleton(g)
        assert (len(sk.vertices), len(sk.edges), len(sk.triangles)) == counts


def test_bfs_tree_spans(fig2):
    SpanningTree(fig2, bfs_tree(fig2))
