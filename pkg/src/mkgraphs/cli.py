"""Command line front end. Each subcommand just parses, calls the library and prints.

Exit codes: 0 ok, 1 rejected input / failed check, 2 usage, 3 inconclusive search.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import fan, io
from .errors import ConstructionError, Graph6Error, InvalidInputError
from .explorer import (ScanConfig, approximate_dedup, enumerate_labeled_graphs, scan,
                       write_records)
from .graph import BASE_KINDS, FanLabeling, Graph, fan_graph, join, make_base_graph
from .graph6 import emit_graph6, parse_graph6
from .multiset import build_big_graph
from .oracle import (DEFAULT_BUDGET, INCONCLUSIVE, check_cut_certificate,
                     find_hamiltonian_cycle, find_hamiltonian_path, is_hamiltonian_cycle,
                     is_hamiltonian_path)

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 1, 2, 3
FORMATS = ("el", "g6", "dot")


def _emit(text: str, out: str | None, stdout):
    if out and out != "-":
        with open(out, "w") as f:
            f.write(text)
    else:
        stdout.write(text)


def _load_graph(path: str, fmt: str, stdin) -> io.EdgeListDoc:
    text = io.read_text(path, stdin)
    if fmt == "g6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise InvalidInputError(f"expected one graph6 line, got {len(lines)}")
        return io.EdgeListDoc(parse_graph6(lines[0]))
    if fmt == "el":
        return io.read_edge_list(text)
    raise InvalidInputError(f"cannot read format {fmt!r}")


def _render(g: Graph, fmt: str, labeling: FanLabeling | None = None) -> str:
    if fmt == "el":
        return io.write_edge_list(g)
    if fmt == "g6":
        return emit_graph6(g) + "\n"
    return io.write_dot(g, labeling)


def _parse_path(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", ",").split(",") if x]
    except ValueError:
        raise InvalidInputError(f"bad vertex sequence {text!r}") from None


# --------------------------------------------------------------------------

def cmd_build(a, stdin, stdout):
    lab = None
    if a.kind == "fan":
        if a.m is None or a.n is None:
            raise InvalidInputError("build fan needs --m and --n")
        g, lab = fan_graph(a.m, a.n)
        if not a.fan_labels:
            lab = None
    elif a.kind == "join":
        if not (a.g1 and a.g2):
            raise InvalidInputError("build join needs --g1 and --g2")
        g = join(_load_graph(a.g1, a.format_in, stdin).graph,
                 _load_graph(a.g2, a.format_in, stdin).graph)
    else:
        if a.n is None:
            raise InvalidInputError(f"build {a.kind} needs --n")
        g = make_base_graph(a.kind, a.n)
    _emit(_render(g, a.format, lab), a.out, stdout)


def _cmd_big(kind):
    def run(a, stdin, stdout):
        g = _load_graph(a.graph, a.format, stdin).graph
        big = build_big_graph(g, a.k, kind, max_k=a.max_k, max_vertices=a.max_vertices)
        if a.json:
            doc = {"kind": kind, "k": a.k, "base_order": g.order, "order": big.graph.order,
                   "edges": [list(e) for e in big.graph.edges],
                   "vertices": [list(v) for v in big.vertex_of]}
            _emit(json.dumps(doc) + "\n", a.out, stdout)
        else:
            _emit(io.write_big_graph(big), a.out, stdout)
    return run


def cmd_fan_cycle(a, stdin, stdout):
    d = fan.decide_fan(a.m, a.n)
    if not isinstance(d, fan.Hamiltonian):
        raise InvalidInputError(f"M_2(F_{{{a.m},{a.n}}}) has no Hamiltonian cycle ({d.verdict})")
    if a.json:
        lab = FanLabeling(a.m, a.n)
        doc = {"m": a.m, "n": a.n, "length": len(d.cycle),
               "cycle": [fan.format_pair(v, lab) for v in d.cycle.seq]}
        _emit(json.dumps(doc) + "\n", a.out, stdout)
    else:
        _emit(io.write_fan_cycle(d.cycle, a.m, a.n), a.out, stdout)


def _decision_doc(d: fan.Decision, m: int, n: int) -> dict:
    doc = {"verdict": d.verdict}
    if isinstance(d, fan.Hamiltonian):
        doc["length"] = len(d.cycle)
    elif isinstance(d, fan.NotHamiltonianDegreeOne):
        doc["witness"] = fan.format_pair(d.witness, FanLabeling(m, n))
    else:
        doc["cut_size"] = d.cut_size
        doc["components"] = d.component_count
    return doc


def cmd_decide_fan(a, stdin, stdout):
    d = fan.decide_fan(a.m, a.n)
    _emit(json.dumps(_decision_doc(d, a.m, a.n)) + "\n", None, stdout)
    if a.out:
        if isinstance(d, fan.Hamiltonian):
            _emit(io.write_fan_cycle(d.cycle, a.m, a.n), a.out, stdout)
        elif isinstance(d, fan.NotHamiltonianCutSet):
            _emit(io.write_certificate(d, a.m, a.n), a.out, stdout)


def cmd_join_cycle(a, stdin, stdout):
    g1 = _load_graph(a.g1, a.format, stdin).graph
    g2 = _load_graph(a.g2, a.format, stdin).graph
    if a.path:
        path = _parse_path(a.path)
    else:
        res = find_hamiltonian_path(g2, a.budget)
        if res.status == INCONCLUSIVE:
            return EXIT_INCONCLUSIVE
        if not res.found:
            raise InvalidInputError("G2 has no Hamiltonian path")
        path = list(res.sequence)
    cyc = fan.join_cycle(g1, g2, path)
    header = f"M2 join m={g1.order} n={g2.order} path={','.join(map(str, path))}"
    _emit(io.write_cycle(cyc.seq, header), a.out, stdout)


def cmd_verify(a, stdin, stdout):
    doc = _load_graph(a.graph, a.format, stdin)
    seq = io.read_cycle(io.read_text(a.cycle, stdin))
    if seq and not isinstance(seq[0], int):
        if doc.vertex_table is None:
            raise InvalidInputError("cycle lists multisets but the graph has no vertex table")
        index = {v: i for i, v in enumerate(doc.vertex_table, start=1)}
        try:
            seq = [index[v] for v in seq]
        except KeyError as exc:
            raise InvalidInputError(f"{exc.args[0]} is not a vertex of the graph") from None
    check = (is_hamiltonian_path if a.path else is_hamiltonian_cycle)(doc.graph, seq)
    if a.json:
        stdout.write(json.dumps({"accept": check.ok, "reason": check.reason,
                                 "position": check.position}) + "\n")
    else:
        stdout.write("accept\n" if check else f"reject: {check.reason} at {check.position}\n")
    return EXIT_OK if check else EXIT_DOMAIN


def cmd_certify(a, stdin, stdout):
    if a.graph:
        doc = _load_graph(a.graph, a.format, stdin)
        s, claimed, _ = io.read_certificate(io.read_text(a.cert, stdin))
        if doc.vertex_table is None:
            raise InvalidInputError("certificate checking needs a graph with a vertex table")
        index = {v: i for i, v in enumerate(doc.vertex_table, start=1)}
        missing = [v for v in s if v not in index]
        if missing:
            raise InvalidInputError(f"{missing[0]} is not a vertex of the graph")
        res = check_cut_certificate(doc.graph, [index[v] for v in s])
    else:
        if a.m is None or a.n is None:
            raise InvalidInputError("certify needs --m/--n or --graph with a certificate")
        s, claimed = fan.cut_certificate(a.m, a.n)
        res = fan.check_fan_certificate(a.m, a.n)
        if a.out:
            _emit(io.write_certificate(fan.NotHamiltonianCutSet(s, claimed), a.m, a.n), a.out, stdout)
    stdout.write(json.dumps({"components": res.components, "cut_size": res.cut_size,
                             "refutes_hamiltonicity": res.refutes_hamiltonicity,
                             "claimed_components": claimed}) + "\n")
    if not res.refutes_hamiltonicity or res.components != claimed:
        return EXIT_DOMAIN
    return EXIT_OK


def cmd_brute(a, stdin, stdout):
    doc = _load_graph(a.graph, a.format, stdin)
    search = find_hamiltonian_path if a.path else find_hamiltonian_cycle
    res = search(doc.graph, a.budget)
    if a.json:
        stdout.write(json.dumps({"status": res.status, "expansions": res.expansions,
                                 "sequence": list(res.sequence) if res.sequence else None}) + "\n")
    elif res.found:
        if doc.vertex_table:
            stdout.write(io.write_cycle(doc.vertex_table[i - 1] for i in res.sequence))
        else:
            stdout.write(io.write_cycle(res.sequence))
    else:
        stdout.write(f"{res.status}\n")
    return EXIT_INCONCLUSIVE if res.status == INCONCLUSIVE else EXIT_OK


def cmd_scan(a, stdin, stdout):
    if a.input:
        text = io.read_text(a.input, stdin)
        graphs = [parse_graph6(ln) for ln in text.splitlines() if ln.strip()]
    elif a.order:
        graphs = enumerate_labeled_graphs(a.order, a.connected, max_order=a.max_order)
    else:
        raise InvalidInputError("scan needs --order or --input")
    if a.dedup:
        graphs = approximate_dedup(graphs)
    config = ScanConfig(k=a.k, budget=a.budget, timing=a.timing, jobs=a.jobs)
    records = scan(graphs, a.k, config)
    if a.out and a.out != "-":
        with open(a.out, "w") as fh:
            _, bad = write_records(records, fh)
    else:
        _, bad = write_records(records, stdout)
    if bad and not a.allow_inconclusive:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def cmd_convert(a, stdin, stdout):
    doc = _load_graph(a.graph, a.format, stdin)
    if a.to == "el" and doc.vertex_table:
        _emit(io.write_edge_list(doc.graph, doc.vertex_table), a.out, stdout)
    else:
        _emit(_render(doc.graph, a.to), a.out, stdout)


# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mkgraphs",
                                description="Token/multiset graphs and Hamiltonian cycles of M_2 of fans.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, graph_arg=False, out=True, json_flag=True, fmt_default="el"):
        if graph_arg:
            sp.add_argument("graph", nargs="?", default="-", help="graph file ('-' for stdin)")
        sp.add_argument("--format", choices=FORMATS, default=fmt_default)
        if out:
            sp.add_argument("--out", default=None)
        if json_flag:
            sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("build", help="write a base graph, fan or join")
    sp.add_argument("kind", choices=BASE_KINDS + ("fan", "join"))
    sp.add_argument("--m", type=int)
    sp.add_argument("--n", type=int)
    sp.add_argument("--g1")
    sp.add_argument("--g2")
    sp.add_argument("--format-in", choices=("el", "g6"), default="el")
    sp.add_argument("--fan-labels", action="store_true", help="name DOT nodes v1..vn, w1..wm")
    common(sp, json_flag=False)
    sp.set_defaults(func=cmd_build)

    for name, kind in (("mk", "multiset"), ("tk", "subset")):
        sp = sub.add_parser(name, help=f"build the k-{kind} graph of a graph")
        sp.add_argument("--k", type=int, default=2)
        sp.add_argument("--max-k", type=int, default=6)
        sp.add_argument("--max-vertices", type=int, default=10**6)
        common(sp, graph_arg=True)
        sp.set_defaults(func=_cmd_big(kind))

    sp = sub.add_parser("fan-cycle", help="Hamiltonian cycle of M_2(F_{m,n})")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    common(sp)
    sp.set_defaults(func=cmd_fan_cycle)

    sp = sub.add_parser("decide-fan", help="decide Hamiltonicity of M_2(F_{m,n}) (JSON)")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    common(sp)
    sp.set_defaults(func=cmd_decide_fan)

    sp = sub.add_parser("join-cycle", help="Hamiltonian cycle of M_2(G1 + G2)")
    sp.add_argument("--g1", required=True)
    sp.add_argument("--g2", required=True)
    sp.add_argument("--path", help="Hamiltonian path of G2, e.g. 1,2,3")
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    common(sp, json_flag=False)
    sp.set_defaults(func=cmd_join_cycle)

    sp = sub.add_parser("verify", help="check a cycle (or path) against a graph")
    sp.add_argument("--graph", required=True)
    sp.add_argument("cycle", nargs="?", default="-")
    sp.add_argument("--path", action="store_true", help="check a Hamiltonian path instead")
    common(sp, out=False)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("certify", help="build or check a cut-set certificate")
    sp.add_argument("--m", type=int)
    sp.add_argument("--n", type=int)
    sp.add_argument("--graph")
    sp.add_argument("cert", nargs="?", default="-")
    common(sp)
    sp.set_defaults(func=cmd_certify)

    sp = sub.add_parser("brute", help="exhaustive Hamiltonian cycle/path search")
    sp.add_argument("--path", action="store_true")
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    common(sp, graph_arg=True, out=False)
    sp.set_defaults(func=cmd_brute)

    sp = sub.add_parser("scan", help="scan graphs for Hamiltonicity of G and M_k(G)")
    sp.add_argument("--order", type=int)
    sp.add_argument("--input", help="file of graph6 lines")
    sp.add_argument("--k", type=int, default=2)
    sp.add_argument("--connected", action="store_true")
    sp.add_argument("--dedup", action="store_true", help="approximate isomorphism dedup")
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--timing", action="store_true", help="fill elapsed_ms (breaks byte-reproducibility)")
    sp.add_argument("--max-order", type=int, default=6)
    sp.add_argument("--allow-inconclusive", action="store_true")
    common(sp, json_flag=False)
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("convert", help="convert between edge list, graph6 and DOT")
    sp.add_argument("--to", choices=FORMATS, required=True)
    common(sp, graph_arg=True, json_flag=False)
    sp.set_defaults(func=cmd_convert)
    return p


def main(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        rc = args.func(args, stdin, stdout)
    except (InvalidInputError, Graph6Error, ConstructionError, OSError) as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_DOMAIN
    return EXIT_OK if rc is None else rc


if __name__ == "__main__":
    sys.exit(main())
