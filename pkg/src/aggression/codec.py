"""Canonical JSON codecs for every document the tools exchange.

One format, defined once: UTF-8 JSON with sorted keys, two-space indent and
a trailing newline, so that serialize -> parse -> serialize is
byte-identical and goldens diff cleanly.

Documents: graph, colored graph, Optimal Response instance, move, move log,
solve result, verification report, session snapshot.
"""

from __future__ import annotations

import json
from typing import Any

from .game import GameResult, Move, MoveKind, Outcome, PlayerId
from .graphs import Graph, GraphError


class CodecError(ValueError):
    """Malformed document; the message carries location or field context."""


def dumps(doc: Any) -> bytes:
    return (json.dumps(doc, indent=2, sort_keys=True) + "\n").encode("utf-8")


def loads(data: bytes | str) -> Any:
    try:
        return json.loads(data)
    except json.JSONDecodeError as exc:
        raise CodecError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc


def _require(doc: dict, key: str, kind: type, context: str) -> Any:
    if not isinstance(doc, dict):
        raise CodecError(f"{context}: expected an object, got {type(doc).__name__}")
    if key not in doc:
        raise CodecError(f"{context}: missing field {key!r}")
    value = doc[key]
    if kind is int and isinstance(value, bool):
        raise CodecError(f"{context}: field {key!r} must be an integer")
    if not isinstance(value, kind):
        raise CodecError(f"{context}: field {key!r} must be {kind.__name__}")
    return value


# -- graphs -----------------------------------------------------------------

def graph_to_doc(g: Graph) -> dict:
    return {"vertices": g.vertex_count, "edges": [list(e) for e in g.edges]}


def graph_from_doc(doc: Any, context: str = "graph") -> Graph:
    vertices = _require(doc, "vertices", int, context)
    edges_raw = _require(doc, "edges", list, context)
    edges = []
    for i, e in enumerate(edges_raw):
        if (not isinstance(e, list)) or len(e) != 2 or not all(isinstance(x, int) for x in e):
            raise CodecError(f"{context}: edge #{i} must be a pair of vertex ids, got {e!r}")
        edges.append((e[0], e[1]))
    try:
        return Graph(vertices, tuple(edges))
    except GraphError as exc:
        raise CodecError(f"{context}: {exc}") from exc


def serialize_graph(g: Graph) -> bytes:
    return dumps(graph_to_doc(g))


def parse_graph(data: bytes | str) -> Graph:
    return graph_from_doc(loads(data))


# -- moves ------------------------------------------------------------------

_MOVE_TYPES = {
    "place": MoveKind.PLACE,
    "pass_placement": MoveKind.PASS_PLACEMENT,
    "attack": MoveKind.ATTACK,
    "pass_attack": MoveKind.PASS_ATTACK,
}
_MOVE_NAMES = {v: k for k, v in _MOVE_TYPES.items()}


def move_to_doc(m: Move) -> dict:
    doc: dict[str, Any] = {"type": _MOVE_NAMES[m.kind]}
    if m.vertex is not None:
        doc["vertex"] = m.vertex
    if m.count is not None:
        doc["count"] = m.count
    return doc


def move_from_doc(doc: Any, context: str = "move") -> Move:
    type_name = _require(doc, "type", str, context)
    kind = _MOVE_TYPES.get(type_name)
    if kind is None:
        raise CodecError(f"{context}: unknown move type {type_name!r}")
    if kind is MoveKind.PLACE:
        return Move(kind, _require(doc, "vertex", int, context),
                    _require(doc, "count", int, context))
    if kind is MoveKind.ATTACK:
        return Move(kind, _require(doc, "vertex", int, context))
    return Move(kind)


def moves_to_doc(moves: list[Move]) -> list[dict]:
    return [move_to_doc(m) for m in moves]


def moves_from_doc(doc: Any, context: str = "moves") -> list[Move]:
    if not isinstance(doc, list):
        raise CodecError(f"{context}: expected a list of moves")
    return [move_from_doc(m, f"{context}[{i}]") for i, m in enumerate(doc)]


# -- troop placements (f1/f2 maps keyed by stringified vertex ids) ----------

def placement_to_doc(placement: dict[int, int]) -> dict:
    return {str(v): c for v, c in sorted(placement.items())}


def placement_from_doc(doc: Any, vertex_count: int, context: str) -> dict[int, int]:
    if not isinstance(doc, dict):
        raise CodecError(f"{context}: expected an object mapping vertex ids to counts")
    out: dict[int, int] = {}
    for key, val in doc.items():
        try:
            v = int(key)
        except ValueError:
            raise CodecError(f"{context}: key {key!r} is not a vertex id") from None
        if not (0 <= v < vertex_count):
            raise CodecError(f"{context}: vertex {v} out of range (< {vertex_count})")
        if not isinstance(val, int) or isinstance(val, bool) or val < 1:
            raise CodecError(f"{context}: troops on vertex {v} must be a positive integer")
        if v in out:
            raise CodecError(f"{context}: duplicate vertex {v}")
        out[v] = val
    return out


# -- outcomes ---------------------------------------------------------------

def outcome_to_doc(out: Outcome) -> dict:
    return {
        "territories": {"lata": out.territories[0], "raj": out.territories[1]},
        "troops": {"lata": out.surviving_troops[0], "raj": out.surviving_troops[1]},
        "result": out.result.value,
        "strong_win": out.strong_win,
    }


def outcome_from_doc(doc: Any, context: str = "outcome") -> Outcome:
    terrs = _require(doc, "territories", dict, context)
    troops = _require(doc, "troops", dict, context)
    result = GameResult(_require(doc, "result", str, context))
    return Outcome(
        (terrs["lata"], terrs["raj"]),
        (troops["lata"], troops["raj"]),
        result,
        _require(doc, "strong_win", bool, context),
    )


def player_name(p: PlayerId) -> str:
    return "lata" if p is PlayerId.LATA else "raj"


def player_from_name(name: str, context: str = "player") -> PlayerId:
    if name == "lata":
        return PlayerId.LATA
    if name == "raj":
        return PlayerId.RAJ
    raise CodecError(f"{context}: expected 'lata' or 'raj', got {name!r}")


# -- colored graphs and Optimal Response instances ---------------------------

def colored_graph_to_doc(g) -> dict:
    return {"classes": [list(c) for c in g.classes],
            "edges": [list(e) for e in g.edges]}


def colored_graph_from_doc(doc: Any, context: str = "colored graph"):
    from .reduction import ColoredGraph, ReductionError

    classes_raw = _require(doc, "classes", list, context)
    edges_raw = _require(doc, "edges", list, context)
    classes = []
    for i, cls in enumerate(classes_raw):
        if not isinstance(cls, list) or not all(isinstance(v, int) for v in cls):
            raise CodecError(f"{context}: class #{i} must be a list of vertex ids")
        classes.append(tuple(cls))
    edges = []
    for i, e in enumerate(edges_raw):
        if not isinstance(e, list) or len(e) != 2 or not all(isinstance(x, int) for x in e):
            raise CodecError(f"{context}: edge #{i} must be a pair of vertex ids")
        edges.append((e[0], e[1]))
    try:
        return ColoredGraph(tuple(classes), tuple(edges))
    except ReductionError as exc:
        raise CodecError(f"{context}: {exc}") from exc


def or_instance_to_doc(instance) -> dict:
    return {
        "graph": graph_to_doc(instance.graph),
        "f1": placement_to_doc(instance.lata_placement),
        "f2": placement_to_doc(instance.raj_placement),
        "sigma": list(instance.sigma),
    }


def or_instance_from_doc(doc: Any, context: str = "instance"):
    from .response import InstanceError, ORInstance

    graph = graph_from_doc(_require(doc, "graph", dict, context), f"{context}.graph")
    f1 = placement_from_doc(_require(doc, "f1", dict, context), graph.vertex_count,
                            f"{context}.f1")
    f2 = placement_from_doc(_require(doc, "f2", dict, context), graph.vertex_count,
                            f"{context}.f2")
    sigma_raw = _require(doc, "sigma", list, context)
    if not all(isinstance(i, int) and not isinstance(i, bool) for i in sigma_raw):
        raise CodecError(f"{context}.sigma: entries must be vertex ids")
    try:
        return ORInstance(graph, f1, f2, tuple(sigma_raw))
    except InstanceError as exc:
        raise CodecError(f"{context}: {exc}") from exc


def tau_to_doc(tau) -> list:
    return ["skip" if j is None else j for j in tau]


def tau_from_doc(doc: Any, context: str = "tau"):
    if not isinstance(doc, list):
        raise CodecError(f"{context}: expected a list")
    out = []
    for i, entry in enumerate(doc):
        if entry == "skip" or entry is None:
            out.append(None)
        elif isinstance(entry, int) and not isinstance(entry, bool):
            out.append(entry)
        else:
            raise CodecError(f"{context}[{i}]: expected a vertex id or 'skip'")
    return tuple(out)
