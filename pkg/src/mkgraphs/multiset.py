"""k-multiset graphs M_k(G) and k-token graphs F_k(G).

A vertex is a nondecreasing k-tuple of base-graph ids. Two vertices are adjacent
when their multiset symmetric difference is exactly an edge {x, y} of the base
graph, which is the same as saying one copy of x in A was swapped for y.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, combinations_with_replacement
from math import comb
from typing import Iterable, Sequence

from .errors import InvalidInputError
from .graph import Graph

MultisetVertex = tuple[int, ...]

KINDS = ("multiset", "subset")
MAX_K = 6
MAX_VERTICES = 10**6


def big_order(n: int, k: int, kind: str) -> int:
    if kind == "multiset":
        return comb(n + k - 1, k)
    if kind == "subset":
        return comb(n, k)
    raise InvalidInputError(f"unknown kind {kind!r}; expected one of {KINDS}")


def _check_params(n: int, k: int, kind: str):
    if kind not in KINDS:
        raise InvalidInputError(f"unknown kind {kind!r}; expected one of {KINDS}")
    if n < 1:
        raise InvalidInputError(f"base order must be >= 1, got {n}")
    if k < 1:
        raise InvalidInputError(f"token count must be >= 1, got {k}")
    if kind == "subset" and k > n - 1:
        raise InvalidInputError(f"k-subsets need 1 <= k <= n-1, got k={k}, n={n}")


def enumerate_k_multisets(n: int, k: int, kind: str = "multiset") -> list[MultisetVertex]:
    """All k-multisubsets (or k-subsets) of [n] in lexicographic order."""
    _check_params(n, k, kind)
    gen = combinations_with_replacement if kind == "multiset" else combinations
    return list(gen(range(1, n + 1), k))


def multiset_sym_diff(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    if len(a) != len(b):
        raise InvalidInputError(f"multisets of different sizes: {len(a)} vs {len(b)}")
    ca, cb = Counter(a), Counter(b)
    out = []
    for x in sorted(ca.keys() | cb.keys()):
        out.extend([x] * abs(ca[x] - cb[x]))
    return tuple(out)


def adjacent_by_sym_diff(g: Graph, a: Sequence[int], b: Sequence[int]) -> bool:
    """Adjacency straight from the definition; slow, used as a cross-check."""
    d = multiset_sym_diff(a, b)
    return len(d) == 2 and d[0] != d[1] and g.has_edge(d[0], d[1])


@dataclass(frozen=True)
class LabeledBigGraph:
    graph: Graph
    vertex_of: tuple[MultisetVertex, ...]  # dense id i -> vertex_of[i - 1]
    kind: str
    k: int
    base_order: int

    @cached_property
    def index_of(self) -> dict[MultisetVertex, int]:
        return {v: i for i, v in enumerate(self.vertex_of, start=1)}

    def dense(self, vertices: Iterable[Sequence[int]]) -> list[int]:
        idx = self.index_of
        out = []
        for v in vertices:
            key = tuple(sorted(v))
            if key not in idx:
                raise InvalidInputError(f"{key} is not a vertex of this {self.kind} graph")
            out.append(idx[key])
        return out

    def multisets(self, ids: Iterable[int]) -> list[MultisetVertex]:
        return [self.vertex_of[i - 1] for i in ids]


def build_big_graph(
    g: Graph,
    k: int,
    kind: str = "multiset",
    *,
    max_k: int = MAX_K,
    max_vertices: int = MAX_VERTICES,
) -> LabeledBigGraph:
    """Build M_k(g) (kind="multiset") or F_k(g) (kind="subset").

    Neighbors of A are generated by replacing one copy of some x in A with a
    neighbor y of x, so the cost is O(N * k * maxdeg) rather than O(N^2).
    """
    if g.order < 2:
        raise InvalidInputError(f"base graph must have order >= 2, got {g.order}")
    _check_params(g.order, k, kind)
    if k > max_k:
        raise InvalidInputError(f"k={k} exceeds cap {max_k}")
    N = big_order(g.order, k, kind)
    if N > max_vertices:
        raise InvalidInputError(f"{N} vertices exceeds cap {max_vertices}")

    verts = enumerate_k_multisets(g.order, k, kind)
    index = {v: i for i, v in enumerate(verts, start=1)}
    adj = g.adjacency
    edges = set()
    for ia, a in enumerate(verts, start=1):
        for pos, x in enumerate(a):
            if pos and a[pos - 1] == x:
                continue
            rest = a[:pos] + a[pos + 1:]
            for y in adj[x]:
                b = tuple(sorted(rest + (y,)))
                ib = index.get(b)  # None when y would repeat inside a k-subset
                if ib is not None and ia < ib:
                    edges.add((ia, ib))
    return LabeledBigGraph(Graph.from_edges(N, edges), tuple(verts), kind, k, g.order)


def multiset_graph(g: Graph, k: int = 2, **caps) -> LabeledBigGraph:
    return build_big_graph(g, k, "multiset", **caps)


def token_graph(g: Graph, k: int, **caps) -> LabeledBigGraph:
    return build_big_graph(g, k, "subset", **caps)
