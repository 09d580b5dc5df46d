import itertools

import pytest

from sculptgraph.central_path import (
    build_path_matrix,
    linear_graph_digraph,
    path_digraph,
    path_labels,
    replace_loop_with_star,
    seed_digraph,
)
from sculptgraph.compiler import CompiledScheme
from sculptgraph.errors import StructuralError
from sculptgraph.fock import LOGICAL0, PLUS, ModeId
from sculptgraph.graphs import Edge, SculptingDigraph, count_directed_pms, is_strongly_connected, permanent, support_matrix
from sculptgraph.oracle import equal_up_to_scalar, path_state
from sculptgraph.scalar import ONE
from sculptgraph.verifier import simulate

from oracles import brute_permanent

P1 = [[1, 1, 1], [1, 1, 0], [1, -1, 1]]
P2 = [[1, 1, 1, 1], [1, 1, 0, 0], [1, -1, 1, 0], [1, 1, -1, 1]]
P3 = [
    [1, 1, 1, 1, 1],
    [1, 1, 0, 0, 0],
    [1, -1, 1, 0, 0],
    [1, 1, -1, 1, 0],
    [1, 1, 1, -1, 1],
]


@pytest.mark.parametrize("l,expected", [(1, P1), (2, P2), (3, P3)])
def test_printed_matrices(l, expected):
    assert build_path_matrix(l).as_ints() == expected


def test_labels_and_size():
    m = build_path_matrix(4)
    assert m.labels == ["C", "A1", "A2", "A3", "A4", "A5"]
    assert m.size == 6 == len(m.entries)


@pytest.mark.parametrize("l", range(2, 9))
def test_recursion(l):
    prev, cur = build_path_matrix(l - 1).as_ints(), build_path_matrix(l).as_ints()
    for i, row in enumerate(prev):
        assert cur[i][:-1] == row
        assert cur[i][-1] == (1 if i == 0 else 0)
    assert cur[-1] == [1] * l + [-1, 1]


def test_domain_errors():
    with pytest.raises(ValueError):
        build_path_matrix(0)
    with pytest.raises(ValueError):
        path_digraph(0)
    with pytest.raises(ValueError):
        seed_digraph(-1)
    with pytest.raises(ValueError):
        linear_graph_digraph(1)


def test_seed_for_single_star():
    g = seed_digraph(0)
    assert g.labels == ["C", "A1"]
    assert support_matrix(g) == [[1, 1], [1, 1]]


@pytest.mark.parametrize("l,n_edges", [(1, 8), (2, 13), (3, 19)])
def test_edge_counts(l, n_edges):
    # one edge per nonzero entry of the printed matrix
    g = path_digraph(l)
    assert len(g.vertices) == l + 2
    assert len(g.edges) == n_edges == sum(1 for row in build_path_matrix(l).entries for x in row if not x.is_zero())
    assert all(e.state is PLUS for e in g.edges)
    assert sum(e.is_loop for e in g.edges) == l + 2


@pytest.mark.parametrize("l", range(1, 11))
def test_permanent_doubles(l):
    perm = permanent(support_matrix(path_digraph(l)))
    assert perm == 2 ** (l + 1)
    if l <= 6:
        assert brute_permanent(support_matrix(path_digraph(l))) == 2 ** (l + 1)
    assert count_directed_pms(path_digraph(l)) == 2 ** (l + 1)


@pytest.mark.parametrize("l", range(1, 8))
def test_strongly_connected(l):
    assert is_strongly_connected(path_digraph(l))


def test_bell_gadget_structure():
    g = replace_loop_with_star(path_digraph(1), "A1", 1, ["1"])
    incoming = {(e.source, e.state.symbol, str(e.amplitude)) for e in g.incoming("1")}
    assert incoming == {("1", "1", "-1"), ("A1", "+", "1")}
    assert not g.has_loop("A1")
    assert ("1", "0", "1") in {(e.source, e.state.symbol, str(e.amplitude)) for e in g.incoming("A1")}


def test_star_gadget_chain():
    g = replace_loop_with_star(path_digraph(1), "A2", 3, ["4", "5", "6"])
    into = lambda v: {(e.source, e.state.symbol, str(e.amplitude)) for e in g.incoming(v)}
    assert into("4") == {("4", "1", "-1"), ("5", "0", "1")}
    assert into("5") == {("5", "1", "-1"), ("6", "0", "1")}
    assert into("6") == {("6", "1", "-1"), ("A2", "+", "1")}
    assert ("4", "0", "1") in into("A2")


def test_loop_amplitude_is_carried():
    g = SculptingDigraph([ModeId("X", "ancilla")], [Edge("X", "X", -ONE, PLUS)])
    g = replace_loop_with_star(g, "X", 1, ["1"])
    [e] = [e for e in g.incoming("X") if e.state is LOGICAL0]
    assert e.source == "1" and e.amplitude == -ONE


def test_replacement_errors():
    g = replace_loop_with_star(path_digraph(1), "A1", 1, ["1"])
    with pytest.raises(StructuralError, match="no loop"):
        replace_loop_with_star(g, "A1", 1, ["2"])
    with pytest.raises(StructuralError, match="in use"):
        replace_loop_with_star(g, "A2", 1, ["1"])
    with pytest.raises(ValueError):
        replace_loop_with_star(g, "A2", 2, ["5"])


def all_replacements(l, max_k):
    """Every assignment of a gadget size 0..max_k (0 = keep the loop) to every loop."""
    labels = path_labels(l)
    for sizes in itertools.product(range(max_k + 1), repeat=len(labels)):
        g = path_digraph(l)
        counter = 1
        for vertex, k in zip(labels, sizes):
            if k:
                g = replace_loop_with_star(g, vertex, k, [f"q{counter + i}" for i in range(k)])
                counter += k
        yield sizes, g


@pytest.mark.parametrize("l", [1, 2, 3, 4])
def test_pm_count_invariant_under_replacement(l):
    expected = 2 ** (l + 1)
    seen = 0
    for sizes, g in all_replacements(l, 3):
        assert count_directed_pms(g) == expected, sizes
        seen += 1
    assert seen == 4 ** (l + 2)


def test_each_a_vertex_gets_one_zero_edge():
    g = path_digraph(3)
    for j in range(1, 5):
        g = replace_loop_with_star(g, f"A{j}", 2, [f"{j}a", f"{j}b"])
    for j in range(1, 5):
        zeros = [e for e in g.incoming(f"A{j}") if e.state is LOGICAL0]
        assert len(zeros) == 1 and zeros[0].source == f"{j}a"


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_linear_graph(n):
    g = linear_graph_digraph(n)
    assert len(g.qubit_labels()) == n
    assert len(g.ancilla_labels()) == n + 1
    assert count_directed_pms(g) == 2 ** n
    sim = simulate(CompiledScheme.from_digraph(g))
    assert sim.no_bunching
    assert equal_up_to_scalar(sim.qubit_state, path_state(n)) is not None
