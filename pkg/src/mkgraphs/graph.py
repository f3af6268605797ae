"""Simple undirected graphs on 1-based vertex ids, plus the small families we need.

Edges are kept as a sorted tuple of ``(a, b)`` pairs with ``a < b`` so that two
graphs with the same edge set compare and serialize identically.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping

from .errors import InvalidInputError

Edge = tuple[int, int]


def _canon_edges(order: int, edges: Iterable[Iterable[int]]) -> tuple[Edge, ...]:
    out = set()
    for e in edges:
        a, b = e
        a, b = int(a), int(b)
        if a == b:
            raise InvalidInputError(f"loop at vertex {a}")
        if a > b:
            a, b = b, a
        if a < 1 or b > order:
            raise InvalidInputError(f"edge ({a}, {b}) outside [1, {order}]")
        out.add((a, b))
    return tuple(sorted(out))


@dataclass(frozen=True)
class Graph:
    order: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.order < 0:
            raise InvalidInputError(f"negative order {self.order}")
        object.__setattr__(self, "edges", _canon_edges(self.order, self.edges))

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[Iterable[int]]) -> Graph:
        return cls(order, tuple(tuple(e) for e in edges))

    @property
    def vertices(self) -> range:
        return range(1, self.order + 1)

    @property
    def size(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> dict[int, tuple[int, ...]]:
        """Sorted neighbor tuples keyed by vertex id."""
        nbrs: dict[int, list[int]] = {v: [] for v in self.vertices}
        for a, b in self.edges:
            nbrs[a].append(b)
            nbrs[b].append(a)
        return {v: tuple(sorted(ns)) for v, ns in nbrs.items()}

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def has_edge(self, a: int, b: int) -> bool:
        if a > b:
            a, b = b, a
        return (a, b) in self.edge_set

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])


@dataclass(frozen=True)
class FanLabeling:
    """Vertex naming for a fan graph: ids 1..n are v_1..v_n, ids n+1..n+m are w_1..w_m."""

    m: int
    n: int

    def __post_init__(self):
        if self.n < 1 or self.m < 0:
            raise InvalidInputError(f"bad fan labeling m={self.m}, n={self.n}")

    @property
    def order(self) -> int:
        return self.n + self.m

    def v(self, j: int) -> int:
        if not 1 <= j <= self.n:
            raise InvalidInputError(f"v_{j} outside 1..{self.n}")
        return j

    def w(self, i: int) -> int:
        if not 1 <= i <= self.m:
            raise InvalidInputError(f"w_{i} outside 1..{self.m}")
        return self.n + i

    def name(self, vid: int) -> str:
        if 1 <= vid <= self.n:
            return f"v{vid}"
        if self.n < vid <= self.order:
            return f"w{vid - self.n}"
        raise InvalidInputError(f"vertex id {vid} outside fan of order {self.order}")

    def parse(self, label: str) -> int:
        label = label.strip()
        if not label or label[0] not in "vw" or not label[1:].isdigit():
            raise InvalidInputError(f"bad fan vertex label {label!r}")
        idx = int(label[1:])
        return self.v(idx) if label[0] == "v" else self.w(idx)


BASE_KINDS = ("path", "cycle", "empty", "complete")


def make_base_graph(kind: str, size: int) -> Graph:
    if size < 1:
        raise InvalidInputError(f"{kind} graph needs size >= 1, got {size}")
    if kind == "path":
        return Graph.from_edges(size, [(i, i + 1) for i in range(1, size)])
    if kind == "cycle":
        if size < 3:
            raise InvalidInputError(f"cycle needs size >= 3, got {size}")
        return Graph.from_edges(size, [(i, i + 1) for i in range(1, size)] + [(1, size)])
    if kind == "empty":
        return Graph(size)
    if kind == "complete":
        return Graph.from_edges(size, combinations(range(1, size + 1), 2))
    raise InvalidInputError(f"unknown graph kind {kind!r}; expected one of {BASE_KINDS}")


def path_graph(n: int) -> Graph:
    return make_base_graph("path", n)


def cycle_graph(n: int) -> Graph:
    return make_base_graph("cycle", n)


def empty_graph(n: int) -> Graph:
    return make_base_graph("empty", n)


def complete_graph(n: int) -> Graph:
    return make_base_graph("complete", n)


def join(g1: Graph, g2: Graph) -> Graph:
    """Join of two graphs; ``g2``'s ids are shifted up by ``g1.order``."""
    if g1.order < 1 or g2.order < 1:
        raise InvalidInputError("join needs two nonempty graphs")
    s = g1.order
    edges = list(g1.edges)
    edges += [(a + s, b + s) for a, b in g2.edges]
    edges += [(a, b + s) for a in g1.vertices for b in g2.vertices]
    return Graph.from_edges(g1.order + g2.order, edges)


def fan_graph(m: int, n: int) -> tuple[Graph, FanLabeling]:
    """The generalized fan E_m + P_n with v-first ids (see FanLabeling)."""
    if m < 1 or n < 1:
        raise InvalidInputError(f"fan graph needs m >= 1 and n >= 1, got m={m}, n={n}")
    lab = FanLabeling(m, n)
    edges = [(lab.v(j), lab.v(j + 1)) for j in range(1, n)]
    edges += [(lab.w(i), lab.v(j)) for i in range(1, m + 1) for j in range(1, n + 1)]
    return Graph.from_edges(lab.order, edges), lab


def relabel(g: Graph, mapping: Mapping[int, int], order: int | None = None) -> Graph:
    """Apply an injective vertex map; unmapped vertices are dropped with their edges."""
    order = g.order if order is None else order
    edges = [(mapping[a], mapping[b]) for a, b in g.edges if a in mapping and b in mapping]
    return Graph.from_edges(order, edges)


def connected_components(g: Graph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by their smallest member."""
    seen: set[int] = set()
    comps = []
    adj = g.adjacency
    for root in g.vertices:
        if root in seen:
            continue
        seen.add(root)
        stack, comp = [root], [root]
        while stack:
            u = stack.pop()
            for x in adj[u]:
                if x not in seen:
                    seen.add(x)
                    comp.append(x)
                    stack.append(x)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.order <= 1 or len(connected_components(g)) == 1


@dataclass(frozen=True)
class Deletion:
    graph: Graph
    new_id: dict[int, int] = field(default_factory=dict)  # old id -> dense id
    old_id: dict[int, int] = field(default_factory=dict)  # dense id -> old id


def delete_vertices(g: Graph, s: Iterable[int]) -> Deletion:
    """Induced subgraph on the complement of ``s``, relabeled to dense ids in original order."""
    s = set(s)
    bad = [x for x in s if not 1 <= x <= g.order]
    if bad:
        raise InvalidInputError(f"vertex ids {sorted(bad)} outside [1, {g.order}]")
    keep = [v for v in g.vertices if v not in s]
    new_id = {v: i for i, v in enumerate(keep, start=1)}
    old_id = {i: v for v, i in new_id.items()}
    return Deletion(relabel(g, new_id, len(keep)), new_id, old_id)
