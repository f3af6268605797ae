"""Scan small graphs for how Hamiltonicity of G relates to that of M_k(G).

Records go out as JSON lines with the fields
``graph, order, k, ham_g, ham_mk, elapsed_ms, budget_hit``. Timing is off by
default so repeated scans are byte-identical; ``elapsed_ms`` is then null.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .errors import InvalidInputError
from .graph import Graph, is_connected
from .graph6 import emit_graph6, parse_graph6
from .multiset import MAX_K, MAX_VERTICES, multiset_graph
from .oracle import DEFAULT_BUDGET, FOUND, INCONCLUSIVE, find_hamiltonian_cycle

YES, NO = "yes", "no"
MAX_ENUM_ORDER = 6


@dataclass(frozen=True)
class ScanConfig:
    k: int = 2
    budget: int = DEFAULT_BUDGET
    timing: bool = False
    jobs: int = 1
    max_k: int = MAX_K
    max_vertices: int = MAX_VERTICES


@dataclass(frozen=True)
class SearchRecord:
    graph: str  # graph6
    order: int
    k: int
    ham_g: str
    ham_mk: str
    elapsed_ms: float | None
    budget_hit: bool

    def to_json(self) -> str:
        return json.dumps(asdict(self))

    @classmethod
    def from_json(cls, line: str) -> SearchRecord:
        return cls(**json.loads(line))

    @property
    def inconclusive(self) -> bool:
        return INCONCLUSIVE in (self.ham_g, self.ham_mk)


def enumerate_labeled_graphs(order: int, connected_only: bool = False,
                             max_order: int = MAX_ENUM_ORDER) -> Iterator[Graph]:
    """Every simple graph on [order]; bit i of the mask selects the i-th pair in lex order."""
    if order < 1:
        raise InvalidInputError(f"order must be >= 1, got {order}")
    if order > max_order:
        raise InvalidInputError(f"order {order} exceeds enumeration cap {max_order}")
    pairs = list(combinations(range(1, order + 1), 2))
    for mask in range(1 << len(pairs)):
        g = Graph.from_edges(order, [p for i, p in enumerate(pairs) if mask >> i & 1])
        if connected_only and not is_connected(g):
            continue
        yield g


def dedup_key(g: Graph) -> tuple:
    """Isomorphism invariant; equal keys do not imply isomorphic graphs."""
    deg = {v: g.degree(v) for v in g.vertices}
    nbr_profile = sorted((deg[v], tuple(sorted(deg[u] for u in g.adjacency[v]))) for v in g.vertices)
    return g.order, g.size, tuple(nbr_profile)


def approximate_dedup(graphs: Iterable[Graph]) -> Iterator[Graph]:
    seen = set()
    for g in graphs:
        key = dedup_key(g)
        if key not in seen:
            seen.add(key)
            yield g


def _tri(status: str) -> str:
    if status == FOUND:
        return YES
    return INCONCLUSIVE if status == INCONCLUSIVE else NO


def scan_one(g: Graph, config: ScanConfig) -> SearchRecord:
    t0 = time.perf_counter()
    rg = find_hamiltonian_cycle(g, config.budget)
    if g.order < 2:
        # M_k of a single vertex is a single vertex.
        status_mk = "none"
    else:
        big = multiset_graph(g, config.k, max_k=config.max_k, max_vertices=config.max_vertices)
        status_mk = find_hamiltonian_cycle(big.graph, config.budget).status
    elapsed = round((time.perf_counter() - t0) * 1000, 3) if config.timing else None
    return SearchRecord(
        graph=emit_graph6(g),
        order=g.order,
        k=config.k,
        ham_g=_tri(rg.status),
        ham_mk=_tri(status_mk),
        elapsed_ms=elapsed,
        budget_hit=INCONCLUSIVE in (rg.status, status_mk),
    )


def _scan_g6(args):
    line, config = args
    return scan_one(parse_graph6(line), config)


def scan(graphs: Iterable[Graph], k: int = 2, config: ScanConfig | None = None) -> Iterator[SearchRecord]:
    """One record per input graph, in input order (also when run with several jobs)."""
    config = ScanConfig(k=k) if config is None else config
    if config.jobs <= 1:
        for g in graphs:
            yield scan_one(g, config)
        return
    payload = ((emit_graph6(g), config) for g in graphs)
    with ProcessPoolExecutor(max_workers=config.jobs) as pool:
        yield from pool.map(_scan_g6, payload, chunksize=16)


def write_records(records: Iterable[SearchRecord], fh) -> tuple[int, int]:
    """Write JSON lines; returns (record count, inconclusive count)."""
    total = bad = 0
    for rec in records:
        fh.write(rec.to_json() + "\n")
        total += 1
        bad += rec.inconclusive
    return total, bad
