"""Explicit Hamiltonian cycles of M_2(F_{m,n}), and certificates when none exist.

Vertex ids follow FanLabeling: v_j is id j, w_i is id n + i. Every pair is
stored as a sorted 2-tuple of ids. The verdict for (m, n) is:

* n == 1: {w_1, w_1} has degree one, so no cycle;
* m > 2(n - 1): deleting every {w_i, v_j} leaves C(m+1, 2) + 1 components,
  more than the m*n deleted vertices;
* otherwise a cycle built from paths, one per regime (m == 1, m == 2(n - 1),
  and the middle range obtained by pruning the m == 2(n - 1) paths).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence, Union

from .errors import ConstructionError, InvalidInputError
from .graph import FanLabeling, Graph, fan_graph, join
from .multiset import LabeledBigGraph, MultisetVertex, multiset_graph
from .oracle import check_cut_certificate, is_hamiltonian_cycle, is_hamiltonian_path


def pair(a: int, b: int) -> MultisetVertex:
    return (a, b) if a <= b else (b, a)


@dataclass(frozen=True)
class CycleSeq:
    seq: tuple[MultisetVertex, ...]
    closed: bool = False

    def __post_init__(self):
        if len(set(self.seq)) != len(self.seq):
            raise ConstructionError("cycle sequence repeats a vertex")
        if self.closed and len(self.seq) < 3:
            raise ConstructionError("closed cycle needs at least 3 vertices")

    def __len__(self):
        return len(self.seq)

    def __iter__(self):
        return iter(self.seq)

    def reversed(self) -> CycleSeq:
        return CycleSeq(self.seq[::-1], self.closed)

    @property
    def first(self) -> MultisetVertex:
        return self.seq[0]

    @property
    def last(self) -> MultisetVertex:
        return self.seq[-1]


@dataclass(frozen=True)
class Hamiltonian:
    cycle: CycleSeq
    verdict: str = "hamiltonian"


@dataclass(frozen=True)
class NotHamiltonianDegreeOne:
    witness: MultisetVertex
    verdict: str = "not_hamiltonian_degree_one"


@dataclass(frozen=True)
class NotHamiltonianCutSet:
    s: frozenset[MultisetVertex]
    component_count: int
    verdict: str = "not_hamiltonian_cutset"

    @property
    def cut_size(self) -> int:
        return len(self.s)


Decision = Union[Hamiltonian, NotHamiltonianDegreeOne, NotHamiltonianCutSet]


def _concat(*parts: Sequence[MultisetVertex], closed: bool = False) -> CycleSeq:
    seq: list[MultisetVertex] = []
    for p in parts:
        seq.extend(p)
    return CycleSeq(tuple(seq), closed)


# ---------------------------------------------------------------------------
# m == 1
# ---------------------------------------------------------------------------

def path_T(i: int, n: int) -> CycleSeq:
    """{v_i,w_1} {v_i,v_i} {v_i,v_{i+1}} ... {v_i,v_n} inside M_2(F_{1,n})."""
    if n < 1 or not 1 <= i <= n:
        raise InvalidInputError(f"path_T needs 1 <= i <= n, got i={i}, n={n}")
    w1 = n + 1
    return CycleSeq((pair(i, w1),) + tuple(pair(i, j) for j in range(i, n + 1)))


def cycle_case_m1(n: int) -> CycleSeq:
    """Hamiltonian cycle of M_2(F_{1,n}) for n >= 2.

    Even n: T_1 rev(T_2) T_3 ... rev(T_n) {w_1,w_1}.
    Odd n:  rev(T_1) {w_1,w_1} T_2 rev(T_3) ... T_{n-1} rev(T_n).
    """
    if n < 2:
        raise InvalidInputError(f"cycle_case_m1 needs n >= 2, got {n}")
    ww = (n + 1, n + 1)
    T = [None] + [path_T(i, n) for i in range(1, n + 1)]
    if n % 2 == 0:
        parts = [T[i].seq if i % 2 else T[i].reversed().seq for i in range(1, n + 1)]
        parts.append((ww,))
    else:
        parts = [T[1].reversed().seq, (ww,)]
        parts += [T[i].seq if i % 2 == 0 else T[i].reversed().seq for i in range(2, n + 1)]
    return _concat(*parts, closed=True)


# ---------------------------------------------------------------------------
# m == 2(n - 1)
# ---------------------------------------------------------------------------

def _mod_rep(x: int, m: int) -> int:
    """x mod m with representatives 1..m."""
    return (x - 1) % m + 1


def path_P(i: int, m_eff: int, n: int) -> CycleSeq:
    """The path P_i (2 <= i <= m_eff) of the m_eff = 2(n-1) construction.

    For i <= n-1 the path is
        {w_i,v_n} {w_i,w_i} {w_i,v_{n-1}} {w_i,w_1} {w_i,v_j} {w_i,w_{i+j}}  (j = n-2 .. 1);
    for i >= n it is
        {w_i,v_n} {w_i,w_i} {w_i,v_j} {w_i,w_{i+j}}  (j = n-1 .. 1),
    with w-subscripts reduced into 1..m_eff.
    """
    if n < 2:
        raise InvalidInputError(f"path_P needs n >= 2, got {n}")
    if m_eff != 2 * (n - 1):
        raise InvalidInputError(f"path_P needs m_eff = 2(n-1) = {2 * (n - 1)}, got {m_eff}")
    if not 2 <= i <= m_eff:
        raise InvalidInputError(f"path_P needs 2 <= i <= {m_eff}, got {i}")

    def w(x: int) -> int:
        return n + x

    wi = w(i)
    seq = [pair(wi, n), (wi, wi)]
    if i <= n - 1:
        seq += [pair(wi, n - 1), pair(wi, w(1))]
        js = range(n - 2, 0, -1)
        if i + (n - 2) > m_eff:
            raise ConstructionError(f"subscript {i + n - 2} exceeds {m_eff} in the i <= n-1 branch")
    else:
        js = range(n - 1, 0, -1)
    for j in js:
        seq += [pair(wi, j), pair(wi, w(_mod_rep(i + j, m_eff)))]
    p = CycleSeq(tuple(seq))
    if p.first != pair(wi, n) or p.last != pair(wi, w(_mod_rep(i + 1, m_eff))):
        raise ConstructionError(f"P_{i} has unexpected endpoints {p.first}, {p.last}")
    return p


def path_P1(n: int) -> CycleSeq:
    """The m == 1 cycle opened at the edge {v_n,w_1} - {v_n,v_n}, running from {v_n,w_1}."""
    c = cycle_case_m1(n).seq
    start, end = pair(n, n + 1), (n, n)
    a, b = c.index(start), c.index(end)
    L = len(c)
    if (a + 1) % L == b:
        seq = tuple(c[(a - t) % L] for t in range(L))
    elif (a - 1) % L == b:
        seq = tuple(c[(a + t) % L] for t in range(L))
    else:
        raise ConstructionError("{v_n,w_1} and {v_n,v_n} are not consecutive in the m = 1 cycle")
    return CycleSeq(seq)


def _close_fan_cycle(parts: list[CycleSeq], n: int) -> CycleSeq:
    # Appending {v_n, w_1} closes P_1 ... P_m; that vertex is already P_1's
    # first vertex, so closing the cyclic sequence is enough.
    cyc = _concat(*(p.seq for p in parts), closed=True)
    if cyc.first != pair(n, n + 1):
        raise ConstructionError("cycle does not start at {v_n, w_1}")
    return cyc


def cycle_case_mmax(n: int) -> CycleSeq:
    """Hamiltonian cycle of M_2(F_{m,n}) with m = 2(n-1): P_1 P_2 ... P_m, closed."""
    if n < 2:
        raise InvalidInputError(f"cycle_case_mmax needs n >= 2, got {n}")
    m = 2 * (n - 1)
    parts = [path_P1(n)] + [path_P(i, m, n) for i in range(2, m + 1)]
    return _close_fan_cycle(parts, n)


# ---------------------------------------------------------------------------
# 1 < m < 2(n - 1)
# ---------------------------------------------------------------------------

def prune_path(p: CycleSeq, i: int, m: int, n: int) -> CycleSeq:
    """Turn P_i (built with modulus 2(n-1)) into P'_i for a fan with m < 2(n-1) w's.

    Drops every {w_i, w_j} with j > m. For i == m, first swaps the positions
    of {w_m, w_{m+1}} and {w_m, w_1} so that the path still ends next to
    {v_n, w_1}.
    """
    m_eff = 2 * (n - 1)
    if not 2 <= i <= m < m_eff:
        raise InvalidInputError(f"prune_path needs 2 <= i <= m < {m_eff}, got i={i}, m={m}")
    wi = n + i
    if len(p) < 2 or p.first != pair(wi, n) or p.seq[1] != (wi, wi):
        raise ConstructionError(f"P_{i} does not start with {{w_i,v_n}}, {{w_i,w_i}}")
    seq = list(p.seq)
    # After the first two vertices the path alternates {w_i, v_j}, {w_i, w_x}.
    for pos in range(2, len(seq)):
        other = seq[pos][0] if seq[pos][1] == wi else seq[pos][1]
        if (other <= n) != (pos % 2 == 0):
            raise ConstructionError(f"P_{i} breaks the alternating pattern at position {pos}")
    if i == m:
        a, b = pair(wi, n + m + 1), pair(wi, n + 1)
        if a not in seq or b not in seq:
            raise ConstructionError(f"P_{m} lacks {{w_m,w_(m+1)}} or {{w_m,w_1}}")
        ia, ib = seq.index(a), seq.index(b)
        seq[ia], seq[ib] = seq[ib], seq[ia]

    def keep(v: MultisetVertex) -> bool:
        other = v[0] if v[1] == wi else v[1]
        return other <= n + m

    return CycleSeq(tuple(v for v in seq if keep(v)))


def cycle_case_mid(m: int, n: int) -> CycleSeq:
    """Hamiltonian cycle of M_2(F_{m,n}) for 1 < m < 2(n-1): P_1 P'_2 ... P'_m, closed."""
    m_eff = 2 * (n - 1)
    if n < 3 or not 1 < m < m_eff:
        raise InvalidInputError(f"cycle_case_mid needs n >= 3 and 1 < m < 2(n-1), got m={m}, n={n}")
    parts = [path_P1(n)]
    for i in range(2, m + 1):
        parts.append(prune_path(path_P(i, m_eff, n), i, m, n))
    return _close_fan_cycle(parts, n)


# ---------------------------------------------------------------------------
# m > 2(n - 1)
# ---------------------------------------------------------------------------

def fan_vertex_classes(m: int, n: int) -> tuple[set, set, set]:
    """Split V(M_2(F_{m,n})) into mixed {w,v}, all-w and all-v pairs."""
    vs = range(1, n + 1)
    ws = range(n + 1, n + m + 1)
    mixed = {pair(v, w) for v in vs for w in ws}
    all_w = {pair(a, b) for a in ws for b in ws}
    all_v = {pair(a, b) for a in vs for b in vs}
    return mixed, all_w, all_v


def cut_certificate(m: int, n: int) -> tuple[frozenset[MultisetVertex], int]:
    """The cut set of all {w_i, v_j} and the component count it leaves: C(m+1, 2) + 1.

    The all-w pairs only touch mixed pairs, so each becomes isolated; the all-v
    pairs stay together as one more component.
    """
    if n < 2 or m <= 2 * (n - 1):
        raise InvalidInputError(f"cut_certificate needs n >= 2 and m > 2(n-1), got m={m}, n={n}")
    mixed, _, _ = fan_vertex_classes(m, n)
    return frozenset(mixed), comb(m + 1, 2) + 1


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------

def verify_fan_cycle(cycle: CycleSeq, m: int, n: int, big: LabeledBigGraph | None = None):
    """Raise ConstructionError unless ``cycle`` is a Hamiltonian cycle of M_2(F_{m,n})."""
    if big is None:
        g, _ = fan_graph(m, n)
        big = multiset_graph(g, 2)
    check = is_hamiltonian_cycle(big.graph, big.dense(cycle.seq))
    if not check:
        raise ConstructionError(f"cycle for m={m}, n={n} rejected: {check.reason} at {check.position}")


def fan_cycle(m: int, n: int) -> CycleSeq:
    """The constructive branch for 1 <= m <= 2(n-1), unverified."""
    if n < 2 or not 1 <= m <= 2 * (n - 1):
        raise InvalidInputError(f"no construction for m={m}, n={n}; need n >= 2, 1 <= m <= 2(n-1)")
    if m == 1:
        return cycle_case_m1(n)
    if m == 2 * (n - 1):
        return cycle_case_mmax(n)
    return cycle_case_mid(m, n)


def decide_fan(m: int, n: int, *, verify: bool = True) -> Decision:
    """Decide Hamiltonicity of M_2(F_{m,n}) and return the matching witness.

    With ``verify`` (default) a constructed cycle is checked against an
    independently built M_2(F_{m,n}) before it is returned.
    """
    if m < 1 or n < 1:
        raise InvalidInputError(f"decide_fan needs m >= 1 and n >= 1, got m={m}, n={n}")
    if n == 1:
        return NotHamiltonianDegreeOne((2, 2))
    if m > 2 * (n - 1):
        s, comps = cut_certificate(m, n)
        return NotHamiltonianCutSet(s, comps)
    cycle = fan_cycle(m, n)
    if verify:
        verify_fan_cycle(cycle, m, n)
    return Hamiltonian(cycle)


def check_fan_certificate(m: int, n: int):
    """Recount the cut certificate's components on the real graph."""
    g, _ = fan_graph(m, n)
    big = multiset_graph(g, 2)
    s, _ = cut_certificate(m, n)
    return check_cut_certificate(big.graph, big.dense(s))


# ---------------------------------------------------------------------------
# joins G1 + G2 with G2 traceable
# ---------------------------------------------------------------------------

def join_cycle(g1: Graph, g2: Graph, ham_path: Sequence[int], *, verify: bool = True) -> CycleSeq:
    """Hamiltonian cycle of M_2(g1 + g2) given a Hamiltonian path of g2.

    Labels in the result are those of ``join(g1, g2)``: g1 keeps 1..m and g2's
    vertex x becomes m + x. The fan F_{m,n} sits inside the join as a spanning
    subgraph (w_i -> i, v_j -> m + ham_path[j-1]), so its M_2 cycle carries over.
    """
    m, n = g1.order, g2.order
    if m < 1 or n < 2:
        raise InvalidInputError(f"join_cycle needs |G1| >= 1 and |G2| >= 2, got {m}, {n}")
    if m > 2 * (n - 1):
        raise InvalidInputError(f"join_cycle needs m <= 2(n-1), got m={m}, n={n}")
    check = is_hamiltonian_path(g2, list(ham_path))
    if not check:
        raise InvalidInputError(f"given path is not Hamiltonian in G2: {check.reason}")
    to_join = {j: m + ham_path[j - 1] for j in range(1, n + 1)}
    to_join.update({n + i: i for i in range(1, m + 1)})
    fan = fan_cycle(m, n)
    cyc = CycleSeq(tuple(pair(to_join[a], to_join[b]) for a, b in fan.seq), closed=True)
    if verify:
        big = multiset_graph(join(g1, g2), 2)
        res = is_hamiltonian_cycle(big.graph, big.dense(cyc.seq))
        if not res:
            raise ConstructionError(f"join cycle rejected: {res.reason}")
    return cyc


def format_pair(v: MultisetVertex, lab: FanLabeling) -> str:
    return ",".join(lab.name(x) for x in v)
