"""Exit criteria. Each test records one PASS/FAIL line, printed at the end of the run."""

import random
import time
from collections import Counter
from itertools import combinations, combinations_with_replacement
from math import comb

import pytest

from mkgraphs.explorer import (ScanConfig, SearchRecord, enumerate_labeled_graphs, scan,
                               write_records)
from mkgraphs.fan import (Hamiltonian, cut_certificate, decide_fan, fan_vertex_classes, join_cycle,
                          path_P, path_P1, path_T, prune_path)
from mkgraphs.graph import (Graph, complete_graph, connected_components, cycle_graph,
                            delete_vertices, empty_graph, fan_graph, join, path_graph)
from mkgraphs.graph6 import parse_graph6
from mkgraphs.multiset import build_big_graph, multiset_graph
from mkgraphs.oracle import (FOUND, INCONCLUSIVE, check_cut_certificate, find_hamiltonian_cycle,
                             is_hamiltonian_cycle)
from oracles import held_karp_has_ham_cycle

RESULTS: list[str] = []


@pytest.fixture
def criterion(request):
    def record(number, title, ok, detail=""):
        RESULTS.append(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}"
                       + (f" ({detail})" if detail else ""))
        print(RESULTS[-1])
        assert ok, RESULTS[-1]
    return record


def _fan_edges(m, n):
    es = {frozenset((j, j + 1)) for j in range(1, n)}
    es |= {frozenset((n + i, j)) for i in range(1, m + 1) for j in range(1, n + 1)}
    return es


def _direct_cycle_check(cycle, m, n) -> bool:
    """Check a 2-multiset cycle straight from the symmetric-difference definition."""
    es = _fan_edges(m, n)
    universe = set(combinations_with_replacement(range(1, m + n + 1), 2))
    seq = [tuple(sorted(v)) for v in cycle]
    if len(seq) != len(universe) or set(seq) != universe:
        return False
    for a, b in zip(seq, seq[1:] + seq[:1]):
        diff = (Counter(a) - Counter(b)) + (Counter(b) - Counter(a))
        elems = sorted(diff.elements())
        if len(elems) != 2 or frozenset(elems) not in es:
            return False
    return True


def test_c1_construction_sweep(criterion):
    t0 = time.perf_counter()
    failures = []
    count = 0
    for n in range(2, 13):
        for m in range(1, 2 * (n - 1) + 1):
            count += 1
            d = decide_fan(m, n)
            if not isinstance(d, Hamiltonian):
                failures.append((m, n, "verdict"))
                continue
            big = multiset_graph(fan_graph(m, n)[0])
            if not is_hamiltonian_cycle(big.graph, big.dense(d.cycle.seq)):
                failures.append((m, n, "verifier"))
            if not _direct_cycle_check(d.cycle.seq, m, n):
                failures.append((m, n, "direct"))
    elapsed = time.perf_counter() - t0
    criterion(1, "constructed cycles verify for 2<=n<=12, 1<=m<=2(n-1)",
              count == 132 and not failures and elapsed < 30,
              f"{count} instances, failures={failures[:3]}, {elapsed:.1f}s < 30s")


def test_c2_certificate_sweep(criterion):
    t0 = time.perf_counter()
    failures = []
    for n in range(2, 9):
        for m in range(2 * (n - 1) + 1, 2 * (n - 1) + 6):
            big = multiset_graph(fan_graph(m, n)[0])
            s, predicted = cut_certificate(m, n)
            res = check_cut_certificate(big.graph, big.dense(s))
            if not (res.components == comb(m + 1, 2) + 1 == predicted and res.refutes_hamiltonicity):
                failures.append((m, n, res))
            d = delete_vertices(big.graph, big.dense(s))
            _, all_w, _ = fan_vertex_classes(m, n)
            isolated = {d.new_id[big.index_of[v]] for v in all_w}
            if any(d.graph.degree(x) for x in isolated):
                failures.append((m, n, "T-vertex not isolated"))
    elapsed = time.perf_counter() - t0
    criterion(2, "cut certificates give C(m+1,2)+1 > mn components",
              not failures and elapsed < 30, f"failures={failures[:3]}, {elapsed:.1f}s < 30s")


def test_c3_oracle_matches_predicate(criterion):
    t0 = time.perf_counter()
    mismatches, inconclusive = [], []
    for m in range(1, 7):
        for n in range(1, 8 - m):
            res = find_hamiltonian_cycle(multiset_graph(fan_graph(m, n)[0]).graph)
            if res.status == INCONCLUSIVE:
                inconclusive.append((m, n))
            predicted = n >= 2 and m <= 2 * (n - 1)
            if res.found != predicted:
                mismatches.append((m, n))
    elapsed = time.perf_counter() - t0
    criterion(3, "brute force agrees with n>=2 and m<=2(n-1) for m+n<=7",
              not mismatches and not inconclusive and elapsed < 120,
              f"mismatches={mismatches}, inconclusive={inconclusive}, {elapsed:.1f}s < 120s")


def test_c4_m2_of_cycles(criterion):
    t0 = time.perf_counter()
    statuses = {n: find_hamiltonian_cycle(multiset_graph(cycle_graph(n)).graph).status
                for n in (4, 6)}
    elapsed = time.perf_counter() - t0
    criterion(4, "M_2(C_4) and M_2(C_6) are not Hamiltonian",
              statuses == {4: "none", 6: "none"} and elapsed < 60, f"{statuses}, {elapsed:.1f}s < 60s")


def test_c5_join_cycles(criterion):
    t0 = time.perf_counter()
    ok = True
    notes = []
    g2 = path_graph(3)
    for name, g1 in (("E4", empty_graph(4)), ("P4", path_graph(4)), ("K4", complete_graph(4))):
        cyc = join_cycle(g1, g2, [1, 2, 3], verify=False)
        big = multiset_graph(join(g1, g2))
        good = bool(is_hamiltonian_cycle(big.graph, big.dense(cyc.seq)))
        notes.append(f"{name}+P3 cycle {'ok' if good else 'BAD'}")
        ok &= good
    base = find_hamiltonian_cycle(join(empty_graph(4), g2))
    ok &= base.status == "none"
    notes.append(f"E4+P3 itself: {base.status}")
    elapsed = time.perf_counter() - t0
    criterion(5, "join cycles verify; F_{4,3} itself non-Hamiltonian", ok and elapsed < 60,
              ", ".join(notes) + f", {elapsed:.1f}s < 60s")


def _property_failures():
    fails = []
    for n in range(2, 11):
        sets = [set(path_T(i, n).seq) for i in range(1, n + 1)] + [{(n + 1, n + 1)}]
        if sum(map(len, sets)) != len(set().union(*sets)) or len(set().union(*sets)) != comb(n + 2, 2):
            fails.append(("T-partition", n))

        m = 2 * (n - 1)
        parts = {1: set(path_P1(n).seq)} | {i: set(path_P(i, m, n).seq) for i in range(2, m + 1)}
        union = set().union(*parts.values())
        if sum(map(len, parts.values())) != len(union) or len(union) != comb(m + n + 1, 2):
            fails.append(("P-partition", n))
        H = {v for v in fan_vertex_classes(m, n)[1] if v[0] != v[1]}
        if any(len(parts[ell] & H) != n - 1 for ell in range(2, m + 1)):
            fails.append(("H-count", n))
        for i, j in combinations(range(1, m + 1), 2):
            v = (n + i, n + j)
            home = j if (i == 1 or j - i > n - 2) else i
            if v not in parts[home]:
                fails.append(("H-membership", n, i, j))

        for mm in range(2, m):
            pp = [set(path_P1(n).seq)] + [set(prune_path(path_P(i, m, n), i, mm, n).seq)
                                          for i in range(2, mm + 1)]
            u = set().union(*pp)
            if sum(map(len, pp)) != len(u) or len(u) != comb(mm + n + 1, 2):
                fails.append(("P'-partition", mm, n))

    rng = random.Random(20261018)
    for n in range(2, 9):
        pairs = list(combinations(range(1, n + 1), 2))
        samples = [path_graph(n), complete_graph(n), Graph(n)]
        samples += [Graph.from_edges(n, [p for p in pairs if rng.random() < 0.5]) for _ in range(3)]
        for g in samples:
            for k in range(1, 4):
                mk = build_big_graph(g, k)
                if mk.graph.order != comb(n + k - 1, k):
                    fails.append(("M_k order", n, k))
                if k > n - 1:
                    continue
                fk = build_big_graph(g, k, "subset")
                if fk.graph.order != comb(n, k):
                    fails.append(("F_k order", n, k))
                strict = {i for i, v in enumerate(mk.vertex_of, 1) if len(set(v)) == k}
                induced = {(mk.vertex_of[a - 1], mk.vertex_of[b - 1])
                           for a, b in mk.graph.edges if a in strict and b in strict}
                tok = {(fk.vertex_of[a - 1], fk.vertex_of[b - 1]) for a, b in fk.graph.edges}
                if induced != tok:
                    fails.append(("F_k embedding", n, k, g.edges))
    return fails


def test_c6_property_suites(criterion):
    fails = _property_failures()
    criterion(6, "partition, H-set and M_k/F_k structural properties", not fails,
              f"failures={fails[:3]}")


def _is_four_cycle(g: Graph) -> bool:
    return (g.order == 4 and g.size == 4 and all(g.degree(v) == 2 for v in g.vertices)
            and len(connected_components(g)) == 1)


def test_c7_explorer(criterion, tmp_path):
    t0 = time.perf_counter()
    outputs = []
    for run in range(2):
        path = tmp_path / f"scan{run}.jsonl"
        with open(path, "w") as fh:
            write_records(scan(enumerate_labeled_graphs(4), 2, ScanConfig(k=2)), fh)
        outputs.append(path.read_bytes())
    identical = outputs[0] == outputs[1]

    recs = [SearchRecord.from_json(ln) for ln in outputs[0].decode().splitlines()]
    disagree = []
    c4_witness = False
    for rec in recs:
        g = parse_graph6(rec.graph)
        big = multiset_graph(g)
        want_g = "yes" if held_karp_has_ham_cycle(g.order, g.edges) else "no"
        want_mk = "yes" if held_karp_has_ham_cycle(big.graph.order, big.graph.edges) else "no"
        direct_g = "yes" if find_hamiltonian_cycle(g).status == FOUND else "no"
        if (rec.ham_g, rec.ham_mk) != (want_g, want_mk) or direct_g != want_g:
            disagree.append(rec.graph)
        if _is_four_cycle(g) and rec.ham_g == "yes" and rec.ham_mk == "no":
            c4_witness = True
    elapsed = time.perf_counter() - t0
    criterion(7, "order-4 scan is reproducible, correct, and finds C_4",
              len(recs) == 64 and identical and not disagree and c4_witness and elapsed < 120,
              f"{len(recs)} records, identical={identical}, disagreements={len(disagree)}, "
              f"C4 witness={c4_witness}, {elapsed:.1f}s < 120s")
