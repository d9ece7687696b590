import pytest

from aggression.codec import (
    CodecError,
    dumps,
    graph_from_doc,
    graph_to_doc,
    loads,
    move_from_doc,
    move_to_doc,
    moves_from_doc,
    moves_to_doc,
    parse_graph,
    placement_from_doc,
    placement_to_doc,
    serialize_graph,
)
from aggression.game import Move
from aggression.graphs import matching
from aggression.reduction import ColoredGraph, reduce_mcc


def test_graph_roundtrip_identity():
    g = matching(1)
    blob = serialize_graph(g)
    assert parse_graph(blob) == g
    assert serialize_graph(parse_graph(blob)) == blob  # byte-identical


def test_graph_doc_shape():
    doc = graph_to_doc(matching(1))
    assert doc == {"vertices": 2, "edges": [[0, 1]]}


def test_parse_errors_name_the_problem():
    with pytest.raises(CodecError, match="self-loop"):
        parse_graph(b'{"vertices": 2, "edges": [[0, 0]]}')
    with pytest.raises(CodecError, match="out of range"):
        parse_graph(b'{"vertices": 2, "edges": [[0, 5]]}')
    with pytest.raises(CodecError, match="duplicate"):
        parse_graph(b'{"vertices": 2, "edges": [[0, 1], [1, 0]]}')
    with pytest.raises(CodecError, match="line 1"):
        parse_graph(b"{nope")
    with pytest.raises(CodecError, match="missing field"):
        parse_graph(b'{"vertices": 2}')


def test_gadget_graph_roundtrip():
    classes = (tuple(range(0, 6)), tuple(range(6, 12)), tuple(range(12, 18)))
    edges = ((0, 6), (0, 12), (6, 12), (1, 7), (2, 8), (1, 13), (3, 9), (4, 14), (9, 15))
    h = reduce_mcc(ColoredGraph(classes, edges)).instance.graph
    assert h.vertex_count == 43
    assert parse_graph(serialize_graph(h)) == h


def test_move_codec():
    for m in (Move.place(3, 2), Move.pass_placement(), Move.attack(1), Move.pass_attack()):
        assert move_from_doc(move_to_doc(m)) == m
    with pytest.raises(CodecError, match="unknown move type"):
        move_from_doc({"type": "teleport"})
    with pytest.raises(CodecError):
        move_from_doc({"type": "place", "vertex": 1})  # count missing
    line = [Move.place(0, 1), Move.pass_placement()]
    assert moves_from_doc(moves_to_doc(line)) == line


def test_placement_codec():
    doc = placement_to_doc({3: 2, 1: 5})
    assert doc == {"1": 5, "3": 2}
    assert placement_from_doc(doc, 4, "f1") == {1: 5, 3: 2}
    with pytest.raises(CodecError, match="out of range"):
        placement_from_doc({"9": 1}, 4, "f1")
    with pytest.raises(CodecError, match="positive"):
        placement_from_doc({"0": 0}, 4, "f1")


def test_canonical_dumps_stable():
    doc = {"b": 1, "a": [1, 2]}
    assert dumps(doc) == dumps(loads(dumps(doc)))
