"""Text formats: edge lists (optionally with a multiset vertex table), DOT, cycle files.

Edge list::

    p <order> <edge-count>
    v <dense-id> <e1>,...,<ek>     (only for M_k / F_k graphs)
    e <a> <b>                      (1-based, a < b, sorted)
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence, TextIO

from .errors import InvalidInputError
from .fan import CycleSeq, NotHamiltonianCutSet
from .graph import FanLabeling, Graph
from .multiset import LabeledBigGraph, MultisetVertex


@dataclass(frozen=True)
class EdgeListDoc:
    graph: Graph
    vertex_table: tuple[MultisetVertex, ...] | None = None


def write_edge_list(g: Graph, vertex_table: Sequence[MultisetVertex] | None = None) -> str:
    lines = [f"p {g.order} {g.size}"]
    if vertex_table is not None:
        lines += [f"v {i} {','.join(map(str, v))}" for i, v in enumerate(vertex_table, start=1)]
    lines += [f"e {a} {b}" for a, b in g.edges]
    return "\n".join(lines) + "\n"


def write_big_graph(big: LabeledBigGraph) -> str:
    return write_edge_list(big.graph, big.vertex_of)


def read_edge_list(text: str) -> EdgeListDoc:
    order = count = None
    edges = []
    table: dict[int, MultisetVertex] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith(("#", "c ")):
            continue
        parts = line.split()
        try:
            if parts[0] == "p":
                order, count = int(parts[1]), int(parts[2])
            elif parts[0] == "e":
                edges.append((int(parts[1]), int(parts[2])))
            elif parts[0] == "v":
                table[int(parts[1])] = tuple(int(x) for x in parts[2].split(","))
            else:
                raise InvalidInputError(f"line {lineno}: unknown record {parts[0]!r}")
        except (IndexError, ValueError) as exc:
            if isinstance(exc, InvalidInputError):
                raise
            raise InvalidInputError(f"line {lineno}: malformed record {line!r}") from None
    if order is None:
        raise InvalidInputError("edge list has no 'p' header")
    g = Graph.from_edges(order, edges)
    if g.size != count:
        raise InvalidInputError(f"header says {count} edges, found {g.size}")
    vt = None
    if table:
        if sorted(table) != list(range(1, order + 1)):
            raise InvalidInputError("vertex table does not cover ids 1..order exactly")
        vt = tuple(table[i] for i in range(1, order + 1))
    return EdgeListDoc(g, vt)


def write_dot(g: Graph, labeling: FanLabeling | None = None, name: str = "G") -> str:
    def node(v: int) -> str:
        return f'"{labeling.name(v)}"' if labeling else f'"{v}"'

    lines = [f"graph {name} {{"]
    lines += [f"  {node(v)};" for v in g.vertices]
    lines += [f"  {node(a)} -- {node(b)};" for a, b in g.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_fan_cycle(cycle: CycleSeq, m: int, n: int) -> str:
    lab = FanLabeling(m, n)
    lines = [f"# M2 fan m={m} n={n}"]
    lines += [",".join(lab.name(x) for x in v) for v in cycle.seq]
    return "\n".join(lines) + "\n"


def write_cycle(seq: Iterable[Sequence[int] | int], header: str | None = None) -> str:
    lines = [f"# {header}"] if header else []
    for v in seq:
        lines.append(str(v) if isinstance(v, int) else ",".join(map(str, v)))
    return "\n".join(lines) + "\n"


_FAN_HEADER = re.compile(r"#\s*M2 fan m=(\d+) n=(\d+)")


def read_cycle(text: str) -> list[int] | list[MultisetVertex]:
    """Parse a cycle file into dense ids or multiset vertices.

    Lines holding a single integer are plain vertex ids. Lines with commas are
    multisets; fan labels like ``v3,w1`` need the ``# M2 fan`` header to map
    names back to ids.
    """
    lab = None
    out: list = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            mt = _FAN_HEADER.match(line)
            if mt:
                lab = FanLabeling(int(mt.group(1)), int(mt.group(2)))
            continue
        toks = [t.strip() for t in line.split(",")]
        if len(toks) == 1 and toks[0].isdigit():
            out.append(int(toks[0]))
            continue
        elems = []
        for t in toks:
            if t.isdigit():
                elems.append(int(t))
            elif lab is not None:
                elems.append(lab.parse(t))
            else:
                raise InvalidInputError(f"label {t!r} needs a '# M2 fan m=.. n=..' header")
        out.append(tuple(sorted(elems)))
    kinds = {isinstance(x, int) for x in out}
    if len(kinds) > 1:
        raise InvalidInputError("cycle file mixes plain ids and multisets")
    return out


def write_certificate(cert: NotHamiltonianCutSet, m: int, n: int) -> str:
    lab = FanLabeling(m, n)
    lines = [f"# M2 fan m={m} n={n} certificate"]
    lines += [f"S {','.join(lab.name(x) for x in v)}" for v in sorted(cert.s)]
    lines.append(f"components={cert.component_count} |S|={cert.cut_size}")
    return "\n".join(lines) + "\n"


def read_certificate(text: str) -> tuple[list[MultisetVertex], int, int]:
    """Return (S, components, |S|) from a certificate file."""
    lab = None
    s: list[MultisetVertex] = []
    comps = size = None
    for raw in text.splitlines():
        line = raw.strip()
        mt = _FAN_HEADER.match(line)
        if mt:
            lab = FanLabeling(int(mt.group(1)), int(mt.group(2)))
        elif line.startswith("S "):
            toks = [t.strip() for t in line[2:].split(",")]
            if lab is None and not all(t.isdigit() for t in toks):
                raise InvalidInputError("fan labels in certificate need a '# M2 fan' header")
            s.append(tuple(sorted(int(t) if t.isdigit() else lab.parse(t) for t in toks)))
        elif line.startswith("components="):
            mt2 = re.match(r"components=(\d+) \|S\|=(\d+)", line)
            if not mt2:
                raise InvalidInputError(f"bad certificate trailer {line!r}")
            comps, size = int(mt2.group(1)), int(mt2.group(2))
    if comps is None:
        raise InvalidInputError("certificate has no trailer line")
    return s, comps, size


def read_text(path: str, stdin: TextIO) -> str:
    if path == "-":
        return stdin.read()
    with open(path) as f:
        return f.read()
