"""Multi-Colored Clique to Optimal Response reduction, plus the brute-force
clique oracle used to execute the equivalence on small instances.

Construction (for a colored graph with k classes of n vertices and m edges):

* one vertex ``u[i][j]`` per input vertex, holding m of the second player's
  troops;
* one vertex ``w_e`` per input edge, adjacent to the images of its two
  endpoints, holding 1 first-player troop;
* guard vertices ``g_i`` adjacent to all of class i, holding m+1;
* an isolated block Z of (n-1)k - C(k,2) + 1 vertices, 1 troop each;
* sigma = (g_1 .. g_k, w_{e_1} .. w_{e_m}).

Vertex numbering is deterministic: the U block first (class-major), then
the w_e in input edge order, then the guards, then Z.  The budgets satisfy
T_L = k(m+1) + m + (n-1)k - C(k,2) + 1 and T_R = m*n*k exactly.

Degenerate corner, documented: with m = 0 and k >= 2 the second player
places no troops at all and the reduced answer is trivially Yes while the
clique answer is No; the construction is only meaningful with at
least one edge.  Everything with m >= 1 is equivalence-faithful.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Optional

from .graphs import Graph
from .response import ORInstance
from .solver import LimitExceeded


class ReductionError(ValueError):
    pass


@dataclass(frozen=True)
class ColoredGraph:
    """k same-size color classes partitioning the vertex set, plus edges."""

    classes: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if not self.classes:
            raise ReductionError("at least one color class is required")
        sizes = {len(c) for c in self.classes}
        if len(sizes) != 1:
            raise ReductionError(f"classes must share one size, got sizes {sorted(sizes)}")
        if 0 in sizes:
            raise ReductionError("classes must be non-empty")
        all_vertices = [v for c in self.classes for v in c]
        if len(set(all_vertices)) != len(all_vertices):
            raise ReductionError("classes must be disjoint")
        if set(all_vertices) != set(range(len(all_vertices))):
            raise ReductionError("classes must partition the ids 0..N-1")
        normalized = []
        seen = set()
        for u, v in self.edges:
            if u == v or not (0 <= u < len(all_vertices)) or not (0 <= v < len(all_vertices)):
                raise ReductionError(f"bad edge ({u}, {v})")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ReductionError(f"duplicate edge {e}")
            seen.add(e)
            normalized.append(e)
        object.__setattr__(self, "classes", tuple(tuple(c) for c in self.classes))
        object.__setattr__(self, "edges", tuple(normalized))

    @property
    def k(self) -> int:
        return len(self.classes)

    @property
    def n(self) -> int:
        return len(self.classes[0])

    @property
    def m(self) -> int:
        return len(self.edges)

    def color_of(self, v: int) -> int:
        for i, cls in enumerate(self.classes):
            if v in cls:
                return i
        raise ReductionError(f"vertex {v} is in no class")

    def has_edge(self, u: int, v: int) -> bool:
        e = (u, v) if u < v else (v, u)
        return e in set(self.edges)


@dataclass(frozen=True)
class ReductionOutput:
    instance: ORInstance
    name_map: dict[str, int]
    params: tuple[int, int, int]  # (k, n, m)

    @property
    def budgets(self) -> tuple[int, int]:
        return self.instance.budgets


def expected_budgets(k: int, n: int, m: int) -> tuple[int, int]:
    """The closed-form budget pair (T_L, T_R) of the construction."""
    z = (n - 1) * k - k * (k - 1) // 2 + 1
    return (k * (m + 1) + m + z, m * n * k)


def reduce_mcc(g: ColoredGraph, equalize_budgets: bool = False) -> ReductionOutput:
    """Build the hardness-gadget instance; exact budget formulas audited."""
    k, n, m = g.k, g.n, g.m
    if n <= k + 2:
        raise ReductionError(
            f"need class size n > k+2 (got n={n}, k={k}); "
            "pad the classes with isolated vertices")
    z_count = (n - 1) * k - k * (k - 1) // 2 + 1

    # Numbering: U block (class-major), then w_e, then guards, then Z.
    name_map: dict[str, int] = {}
    u_id: dict[tuple[int, int], int] = {}
    next_id = 0
    for i in range(k):
        for j in range(n):
            u_id[(i, j)] = next_id
            name_map[f"u_{i + 1}_{j + 1}"] = next_id
            next_id += 1
    w_first = next_id
    for e_idx in range(m):
        name_map[f"w_{e_idx + 1}"] = next_id
        next_id += 1
    g_first = next_id
    for i in range(k):
        name_map[f"g_{i + 1}"] = next_id
        next_id += 1
    for t in range(z_count):
        name_map[f"z_{t + 1}"] = next_id
        next_id += 1
    total = next_id

    index_in_class = {v: (i, cls.index(v)) for i, cls in enumerate(g.classes) for v in cls}
    edges: list[tuple[int, int]] = []
    for e_idx, (x, y) in enumerate(g.edges):
        (i, p), (jc, q) = index_in_class[x], index_in_class[y]
        w = w_first + e_idx
        edges.append((w, u_id[(i, p)]))
        edges.append((w, u_id[(jc, q)]))
    for i in range(k):
        guard = g_first + i
        for j in range(n):
            edges.append((guard, u_id[(i, j)]))

    f1: dict[int, int] = {}
    f2: dict[int, int] = {}
    for i in range(k):
        f1[g_first + i] = m + 1
    for e_idx in range(m):
        f1[w_first + e_idx] = 1
    for t in range(z_count):
        f1[name_map[f"z_{t + 1}"]] = 1
    if m >= 1:
        for i in range(k):
            for j in range(n):
                f2[u_id[(i, j)]] = m

    sigma = tuple(g_first + i for i in range(k)) + tuple(w_first + e for e in range(m))

    t_l, t_r = expected_budgets(k, n, m)
    if equalize_budgets and t_l != t_r:
        if t_l < t_r:
            # Pile the deficit onto the first Z vertex: isolated, so neither
            # territories nor attack structure move; the tiebreak stays safe.
            f1[name_map["z_1"]] += t_r - t_l
        else:
            # Add one isolated vertex per side; both territory counts shift
            # by one, preserving every margin.
            name_map["z_pad"] = total
            f1[total] = 1
            name_map["r_pad"] = total + 1
            f2[total + 1] = t_l + 1 - t_r
            total += 2

    graph = Graph(total, tuple(edges))
    instance = ORInstance(graph, f1, f2, sigma)
    if not equalize_budgets:
        assert instance.budgets == (t_l, t_r), "closed-form budget audit"
    else:
        got = instance.budgets
        assert got[0] == got[1], "equalized budgets must match"
    return ReductionOutput(instance, name_map, (k, n, m))


def brute_force_mcc(g: ColoredGraph, max_configs: int = 2_000_000) -> Optional[tuple[int, ...]]:
    """Some multicolored clique (one vertex per class), or None.

    Plain enumeration of the n^k transversals; the independent oracle for
    the reduction equivalence.
    """
    if g.n ** g.k > max_configs:
        raise LimitExceeded(f"{g.n}^{g.k} transversals exceed the {max_configs} limit")
    edge_set = set(g.edges)

    def joined(u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in edge_set

    for combo in product(*g.classes):
        if all(joined(a, b) for a, b in combinations(combo, 2)):
            return tuple(combo)
    return None
