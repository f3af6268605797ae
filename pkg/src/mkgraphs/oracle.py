"""Ground-truth checks: cycle verification, exhaustive Hamiltonian search, cut sets.

Nothing here knows about fans or multisets. The search works on a plain Graph
with bitmask adjacency; vertices are tried in ascending id so results are
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidInputError
from .graph import Graph, connected_components, delete_vertices

DEFAULT_BUDGET = 10**8

FOUND = "found"
NONE = "none"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class CycleCheck:
    ok: bool
    reason: str = ""
    position: int | None = None

    def __bool__(self):
        return self.ok


def is_hamiltonian_cycle(g: Graph, seq: Sequence[int]) -> CycleCheck:
    """Accept iff ``seq`` visits every vertex once along edges and closes up.

    On rejection, ``position`` is the index in ``seq`` where the first problem
    was seen.
    """
    seq = list(seq)
    seen: set[int] = set()
    for pos, v in enumerate(seq):
        if not 1 <= v <= g.order:
            return CycleCheck(False, f"vertex {v} not in graph", pos)
        if v in seen:
            return CycleCheck(False, f"vertex {v} repeated", pos)
        seen.add(v)
    if len(seq) != g.order:
        missing = sorted(set(g.vertices) - seen)
        return CycleCheck(False, f"{len(missing)} vertices missing, first {missing[0]}", len(seq))
    if g.order < 3:
        return CycleCheck(False, f"order {g.order} graph has no cycle", None)
    for pos in range(len(seq) - 1):
        a, b = seq[pos], seq[pos + 1]
        if not g.has_edge(a, b):
            return CycleCheck(False, f"pair ({a}, {b}) is not an edge", pos)
    if not g.has_edge(seq[-1], seq[0]):
        return CycleCheck(False, f"closing edge ({seq[-1]}, {seq[0]}) missing", len(seq) - 1)
    return CycleCheck(True)


def is_hamiltonian_path(g: Graph, seq: Sequence[int]) -> CycleCheck:
    seq = list(seq)
    if len(seq) != g.order or sorted(seq) != list(g.vertices):
        return CycleCheck(False, "sequence is not a permutation of the vertices", None)
    for pos in range(len(seq) - 1):
        if not g.has_edge(seq[pos], seq[pos + 1]):
            return CycleCheck(False, f"pair ({seq[pos]}, {seq[pos + 1]}) is not an edge", pos)
    return CycleCheck(True)


@dataclass(frozen=True)
class SearchResult:
    status: str  # FOUND, NONE or INCONCLUSIVE
    sequence: tuple[int, ...] | None = None
    expansions: int = 0

    @property
    def found(self) -> bool:
        return self.status == FOUND

    @property
    def conclusive(self) -> bool:
        return self.status != INCONCLUSIVE


class _BudgetExceeded(Exception):
    pass


def _popcount(x: int) -> int:
    return bin(x).count("1")


class _Search:
    """Bitmask backtracking over vertices 0..N-1 (ids shifted down by one)."""

    def __init__(self, g: Graph, budget: int):
        self.n = g.order
        self.adj = [0] * self.n
        for a, b in g.edges:
            self.adj[a - 1] |= 1 << (b - 1)
            self.adj[b - 1] |= 1 << (a - 1)
        self.full = (1 << self.n) - 1
        self.budget = budget
        self.expansions = 0

    def _tick(self):
        self.expansions += 1
        if self.expansions > self.budget:
            raise _BudgetExceeded

    def _reachable(self, start: int, allowed: int) -> int:
        reached = 1 << start
        frontier = reached
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= self.adj[low.bit_length() - 1]
                f ^= low
            nxt &= allowed & ~reached
            reached |= nxt
            frontier = nxt
        return reached

    def _viable(self, cur: int, remaining: int, ends: int, closed: bool) -> int | None:
        """Cheap necessary conditions for extending the path from ``cur``.

        ``remaining`` is the unvisited set; ``ends`` holds the vertices a
        remaining vertex may still attach to besides other unvisited ones (the
        current end, plus the start when closing a cycle). Returns None when
        the branch is dead, else the mask of moves still worth trying.
        """
        cand = self.adj[cur] & remaining
        if not remaining:
            return cand
        if self._reachable(cur, remaining | (1 << cur)) != remaining | (1 << cur):
            return None
        pool = remaining | ends
        single = remaining & (remaining - 1) == 0
        cur_bit = 1 << cur
        start_bit = ends & ~cur_bit
        forced = 0
        dead_ends = 0
        r = remaining
        while r:
            low = r & -r
            v = low.bit_length() - 1
            r ^= low
            nb = self.adj[v] & pool
            d = _popcount(nb)
            if closed:
                if single:
                    if nb & ends != ends:
                        return None
                elif d < 2:
                    return None
                elif d == 2 and nb & cur_bit and start_bit:
                    # Both cycle neighbors of v are fixed and one is cur: v comes next.
                    if nb & start_bit:
                        return None
                    forced |= low
            else:
                if d == 0:
                    return None
                if d == 1:
                    # A vertex with a single usable neighbor must be the path's far end.
                    dead_ends += 1
                    if dead_ends > 1:
                        return None
        if forced:
            if forced & (forced - 1):
                return None
            return forced
        return cand

    def cycle(self) -> tuple[int, ...] | None:
        if self.n < 3:
            return None
        if any(_popcount(a) < 2 for a in self.adj):
            return None
        path = [0]
        start_bit = 1

        def rec(cur: int, visited: int) -> bool:
            self._tick()
            remaining = self.full & ~visited
            if not remaining:
                return bool(self.adj[cur] & start_bit)
            cand = self._viable(cur, remaining, (1 << cur) | start_bit, True)
            if cand is None:
                return False
            while cand:
                low = cand & -cand
                cand ^= low
                v = low.bit_length() - 1
                path.append(v)
                if rec(v, visited | low):
                    return True
                path.pop()
            return False

        if rec(0, start_bit):
            return tuple(v + 1 for v in path)
        return None

    def path(self) -> tuple[int, ...] | None:
        if self.n == 0:
            return None
        if self.n == 1:
            return (1,)
        if any(a == 0 for a in self.adj):
            return None
        if sum(1 for a in self.adj if _popcount(a) == 1) > 2:
            return None
        for s in range(self.n):
            path = [s]

            def rec(cur: int, visited: int) -> bool:
                self._tick()
                remaining = self.full & ~visited
                if not remaining:
                    return True
                cand = self._viable(cur, remaining, 1 << cur, False)
                if cand is None:
                    return False
                while cand:
                    low = cand & -cand
                    cand ^= low
                    v = low.bit_length() - 1
                    path.append(v)
                    if rec(v, visited | low):
                        return True
                    path.pop()
                return False

            if rec(s, 1 << s):
                return tuple(v + 1 for v in path)
        return None


def _run(g: Graph, budget: int, which: str) -> SearchResult:
    s = _Search(g, budget)
    try:
        seq = s.cycle() if which == "cycle" else s.path()
    except _BudgetExceeded:
        return SearchResult(INCONCLUSIVE, None, s.expansions)
    if seq is None:
        return SearchResult(NONE, None, s.expansions)
    return SearchResult(FOUND, seq, s.expansions)


def find_hamiltonian_cycle(g: Graph, budget: int = DEFAULT_BUDGET) -> SearchResult:
    """Exhaustive search for a Hamiltonian cycle anchored at vertex 1."""
    return _run(g, budget, "cycle")


def find_hamiltonian_path(g: Graph, budget: int = DEFAULT_BUDGET) -> SearchResult:
    """Exhaustive search for a Hamiltonian path, trying start vertices in order."""
    return _run(g, budget, "path")


@dataclass(frozen=True)
class CutCheck:
    components: int
    cut_size: int
    refutes_hamiltonicity: bool


def check_cut_certificate(g: Graph, s: Iterable[int]) -> CutCheck:
    """Count components of g - s; more than |s| of them rules out a Hamiltonian cycle."""
    s = set(s)
    if not s:
        raise InvalidInputError("cut set must be nonempty")
    comps = connected_components(delete_vertices(g, s).graph)
    return CutCheck(len(comps), len(s), len(comps) > len(s))
