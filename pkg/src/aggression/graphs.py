"""Board graphs: an immutable simple-graph type and the generator families.

Vertex ids are dense integers starting at 0.  Family generators fix a
documented labeling so that strategy scripts can name vertices
deterministically:

* ``matching(m)``  -- 2m vertices, edge i joins ``2i`` and ``2i+1``
* ``cycle(n)``     -- edges ``(i, (i+1) mod n)``, needs n >= 3
* ``path(n)``      -- edges ``(i, i+1)``
* ``complete(n)``  -- all pairs
* ``star(n)``      -- centre 0 adjacent to 1..n-1
"""

from __future__ import annotations

from dataclasses import dataclass, field


class GraphError(ValueError):
    """Raised for malformed graphs (self-loops, out-of-range or duplicate edges)."""


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph over dense integer vertex ids."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    neighbors: tuple[tuple[int, ...], ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise GraphError(f"vertex_count must be non-negative, got {self.vertex_count}")
        seen: set[tuple[int, int]] = set()
        normalized: list[tuple[int, int]] = []
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise GraphError(f"edge ({u}, {v}) out of range for {self.vertex_count} vertices")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise GraphError(f"duplicate edge {e}")
            seen.add(e)
            normalized.append(e)
        normalized.sort()
        object.__setattr__(self, "edges", tuple(normalized))
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in normalized:
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(self, "neighbors", tuple(tuple(sorted(a)) for a in adj))

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def is_matching(self) -> bool:
        """True when every vertex has degree at most one."""
        return all(len(a) <= 1 for a in self.neighbors)


def matching(m: int) -> Graph:
    if m < 1:
        raise GraphError(f"matching size must be >= 1, got {m}")
    return Graph(2 * m, tuple((2 * i, 2 * i + 1) for i in range(m)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle length must be >= 3, got {n}")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"path length must be >= 1, got {n}")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"complete graph size must be >= 1, got {n}")
    return Graph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def star(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"star size must be >= 1, got {n}")
    return Graph(n, tuple((0, i) for i in range(1, n)))


_FAMILIES = {
    "matching": (matching, 1),
    "cycle": (cycle, 3),
    "path": (path, 1),
    "complete": (complete, 1),
    "star": (star, 1),
}


def generate(family: str, size: int) -> Graph:
    """Build a board from a family name and its size parameter."""
    try:
        builder, _ = _FAMILIES[family]
    except KeyError:
        raise GraphError(f"unknown graph family {family!r}; know {sorted(_FAMILIES)}") from None
    return builder(size)


def parse_family(spec: str) -> Graph:
    """Parse a ``family:size`` string such as ``matching:3`` or ``cycle:5``."""
    name, sep, raw = spec.partition(":")
    if not sep:
        raise GraphError(f"family spec must look like 'name:size', got {spec!r}")
    try:
        size = int(raw)
    except ValueError:
        raise GraphError(f"family size must be an integer, got {raw!r}") from None
    return generate(name, size)
