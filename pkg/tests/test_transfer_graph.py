import pytest
from hypothesis import given
from hypothesis import strategies as st

from partition_atlas import Partition, bfs_distances, build_graph, neighbors

small_partitions_st = st.lists(st.integers(1, 6), min_size=1, max_size=6).map(
    lambda xs: Partition(tuple(sorted(xs, reverse=True)))
)


def _edge_set(graph):
    return {
        (i, j) for i, row in enumerate(graph.adj) for j in row if j > i
    }


def test_neighbors_of_single_row():
    assert {p.parts for p in neighbors(Partition((7,)))} == {(6, 1)}


def test_neighbors_of_all_ones():
    assert {p.parts for p in neighbors(Partition((1, 1, 1, 1)))} == {(2, 1, 1)}


def test_neighbors_211_frozen():
    got = {p.parts for p in neighbors(Partition((2, 1, 1)))}
    assert got == {(3, 1), (2, 2), (1, 1, 1, 1)}


def test_neighbors_exclude_self():
    # moving the unit back and forth between equal parts reproduces the input
    assert Partition((2, 1)) not in neighbors(Partition((2, 1)))
    assert Partition((1,)) not in neighbors(Partition((1,)))
    assert neighbors(Partition((1,))) == set()


@given(small_partitions_st)
def test_neighbors_symmetric(p):
    for q in neighbors(p):
        assert p in neighbors(q)


@given(small_partitions_st)
def test_neighbors_preserve_total(p):
    for q in neighbors(p):
        assert q.n == p.n


def test_build_graph_n1():
    g = build_graph(1)
    assert len(g.vertices) == 1
    assert g.edge_count == 0
    assert g.is_connected()


def test_build_graph_n2():
    g = build_graph(2)
    assert [p.parts for p in g.vertices] == [(2,), (1, 1)]
    assert g.edge_count == 1
    assert g.is_connected()


def test_build_graph_n4_edges_frozen():
    g = build_graph(4)
    names = {i: str(p) for i, p in enumerate(g.vertices)}
    got = {tuple(sorted((names[i], names[j]))) for i, j in _edge_set(g)}
    expected = {
        ("3,1", "4"),
        ("2,2", "3,1"),
        ("2,1,1", "3,1"),
        ("2,1,1", "2,2"),
        ("1,1,1,1", "2,1,1"),
    }
    assert got == expected


def test_build_graph_rejects_nonpositive():
    with pytest.raises(ValueError):
        build_graph(0)


@pytest.mark.parametrize("n", range(2, 13))
def test_connected_small(n):
    assert build_graph(n).is_connected()


@pytest.mark.parametrize("n", range(2, 13))
def test_antenna_degrees(n):
    g = build_graph(n)
    assert g.degree(Partition((n,))) == 1
    assert g.degree(Partition((1,) * n)) == 1


def test_degree_examples():
    assert build_graph(1).degree(Partition((1,))) == 0
    assert build_graph(4).degree(Partition((3, 1))) == 3


def test_degree_rejects_foreign_partition():
    g = build_graph(4)
    with pytest.raises(ValueError):
        g.degree(Partition((5,)))
    with pytest.raises(ValueError):
        g.degree(Partition((3, 2)))


@pytest.mark.parametrize("n", range(2, 11))
def test_conjugation_is_automorphism(n):
    g = build_graph(n)
    sigma = g.conjugation_permutation()
    for i, row in enumerate(g.adj):
        assert tuple(sorted(sigma[j] for j in row)) == g.adj[sigma[i]]


@pytest.mark.parametrize("n", range(2, 13))
def test_left_boundary_is_path(n):
    g = build_graph(n)
    for k in range(1, n // 2):
        a = g.index_of(Partition((n - k, k)))
        b = g.index_of(Partition((n - k - 1, k + 1)))
        assert b in g.adj[a]


@pytest.mark.parametrize("n", range(1, 13))
def test_adjacency_shape(n):
    g = build_graph(n)
    for i, row in enumerate(g.adj):
        assert i not in row
        assert list(row) == sorted(set(row))
        for j in row:
            assert i in g.adj[j]
    assert sum(len(r) for r in g.adj) == 2 * g.edge_count


def test_bitrows_match_adjacency():
    g = build_graph(8)
    for i, row in enumerate(g.adj):
        bits = g.bitrows[i]
        members = []
        while bits:
            low = bits & -bits
            members.append(low.bit_length() - 1)
            bits ^= low
        assert members == list(row)


def test_dump_edges_n4():
    text = build_graph(4).dump_edges()
    lines = text.strip().split("\n")
    assert len(lines) == 5
    assert lines[0] == "4\t3,1"
    assert all("\t" in line for line in lines)


def test_dump_edges_n1_empty():
    assert build_graph(1).dump_edges() == ""


def test_bfs_distances():
    g = build_graph(4)
    dist = bfs_distances(g, (0,))  # from (4)
    by_name = {str(p): dist[i] for i, p in enumerate(g.vertices)}
    assert by_name == {"4": 0, "3,1": 1, "2,2": 2, "2,1,1": 2, "1,1,1,1": 3}
