import pytest

from wlogkit.graphs import SimplicialGraph, SpanningTree, complete_graph

FIG2_VERTICES = ["a1", "a2", "a3", "a4", "a5", "a6"]
FIG2_EDGES = [
    ("a1", "a2"), ("a1", "a5"), ("a2", "a5"), ("a2", "a3"), ("a2", "a4"),
    ("a3", "a4"), ("a4", "a5"), ("a4", "a6"), ("a5", "a6"),
]
# tree in the order the worked example lists it; names follow that order
FIG2_TREE = [("a1", "a2"), ("a2", "a5"), ("a2", "a4"), ("a2", "a3"), ("a4", "a6")]
FIG2_NAMES = dict(zip(FIG2_TREE, ["v1", "v2", "v3", "v4", "v5"]))

# graph with two internal triangles and one non-internal one hanging off a4
INTERNAL_DEMO_EDGES = [
    ("a1", "a2"), ("a2", "a5"), ("a2", "a4"), ("a2", "a3"), ("a4", "a6"), ("a1", "a5"),
    ("a4", "a5"), ("a5", "a6"), ("a3", "a4"), ("a4", "a7"), ("a3", "a7"),
]


def octahedron():
    vs = list("abcdef")
    missing = [{"a", "b"}, {"c", "d"}, {"e", "f"}]
    return SimplicialGraph.build(vs, [(u, v) for i, u in enumerate(vs) for v in vs[i + 1:] if {u, v} not in missing])


@pytest.fixture
def fig2():
    return SimplicialGraph.build(FIG2_VERTICES, FIG2_EDGES)


@pytest.fixture
def fig2_tree(fig2):
    return SpanningTree(fig2, FIG2_TREE)


@pytest.fixture
def internal_demo():
    return SimplicialGraph.build([f"a{i}" for i in range(1, 8)], INTERNAL_DEMO_EDGES)


@pytest.fixture
def k4():
    return complete_graph(4)


# --- session bookkeeping for the acceptance suite ---------------------------

from wlogkit import wlog as _wlog  # noqa: E402

CONSTRUCTED_WLOGS: dict = {}
ACCEPTANCE_LINES: dict = {}
TEST_OUTCOMES: dict = {}

_original_post_init = _wlog.WlogGraph.__post_init__


def _recording_post_init(self):
    _original_post_init(self)
    CONSTRUCTED_WLOGS.setdefault((self.vertices, self.edges), self)


_wlog.WlogGraph.__post_init__ = _recording_post_init


def pytest_collection_modifyitems(items):
    # acceptance runs last so it sees every WLOG and property outcome of the session
    items.sort(key=lambda item: item.module.__name__ == "test_acceptance")


def pytest_runtest_logreport(report):
    if report.when == "call" or report.outcome != "passed":
        TEST_OUTCOMES[report.nodeid.split("::")[-1]] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[n])
