import pytest

from aggression.graphs import Graph, GraphError, complete, cycle, generate, matching, parse_family, path, star


def test_matching_shape():
    g = matching(3)
    assert g.vertex_count == 6
    assert g.edges == ((0, 1), (2, 3), (4, 5))
    assert g.is_matching()
    assert all(g.degree(v) == 1 for v in range(6))


def test_cycle_shape():
    g = cycle(5)
    assert g.vertex_count == 5
    assert set(g.edges) == {(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)}
    assert all(g.degree(v) == 2 for v in range(5))


def test_path_and_star_and_complete():
    assert path(5).edges == ((0, 1), (1, 2), (2, 3), (3, 4))
    assert star(1).edges == ()  # degenerate single vertex
    assert star(4).edges == ((0, 1), (0, 2), (0, 3))
    assert len(complete(4).edges) == 6


def test_cycle_too_short_rejected():
    with pytest.raises(GraphError):
        cycle(2)


def test_self_loop_and_duplicate_rejected():
    with pytest.raises(GraphError):
        Graph(3, ((0, 0),))
    with pytest.raises(GraphError):
        Graph(3, ((0, 1), (1, 0)))
    with pytest.raises(GraphError):
        Graph(2, ((0, 5),))


def test_neighbors():
    g = path(3)
    assert g.neighbors == ((1,), (0, 2), (1,))


def test_generate_and_parse_family():
    assert generate("matching", 2).vertex_count == 4
    assert parse_family("cycle:5").vertex_count == 5
    with pytest.raises(GraphError):
        parse_family("blob:3")
    with pytest.raises(GraphError):
        parse_family("cycle")
    with pytest.raises(GraphError):
        parse_family("cycle:x")
