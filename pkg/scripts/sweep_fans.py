#!/usr/bin/env python3
"""Tabulate the M_2(F_{m,n}) verdict over a grid and re-check every witness.

Usage:
    python scripts/sweep_fans.py [--max-n 12] [--extra-m 5] [--oracle-max 7]

Constructed cycles are verified against a freshly built M_2; cut sets are
recounted on the real graph. For m + n <= --oracle-max the exhaustive search
is run as well.
"""

from __future__ import annotations

import argparse
import time

from mkgraphs.fan import Hamiltonian, NotHamiltonianCutSet, check_fan_certificate, decide_fan
from mkgraphs.graph import fan_graph
from mkgraphs.multiset import multiset_graph
from mkgraphs.oracle import find_hamiltonian_cycle


def symbol(d) -> str:
    if isinstance(d, Hamiltonian):
        return "H"
    if isinstance(d, NotHamiltonianCutSet):
        return "c"
    return "1"


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=12)
    ap.add_argument("--extra-m", type=int, default=5, help="columns past the 2(n-1) boundary")
    ap.add_argument("--oracle-max", type=int, default=7)
    args = ap.parse_args()

    max_m = 2 * (args.max_n - 1) + args.extra_m
    print("H = Hamiltonian cycle built and verified, c = cut-set certificate, 1 = degree-one vertex")
    print("n\\m " + "".join(f"{m:>3}" for m in range(1, max_m + 1)))
    disagreements = []
    t0 = time.perf_counter()
    for n in range(1, args.max_n + 1):
        row = []
        for m in range(1, max_m + 1):
            if m > 2 * (n - 1) + args.extra_m:
                row.append("  .")
                continue
            d = decide_fan(m, n)
            if isinstance(d, NotHamiltonianCutSet):
                assert check_fan_certificate(m, n).refutes_hamiltonicity
            if m + n <= args.oracle_max:
                res = find_hamiltonian_cycle(multiset_graph(fan_graph(m, n)[0]).graph)
                if res.found != isinstance(d, Hamiltonian):
                    disagreements.append((m, n))
            row.append(f"{symbol(d):>3}")
        print(f"{n:>3} " + "".join(row))
    print(f"\noracle disagreements: {disagreements or 'none'}")
    print(f"elapsed {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
