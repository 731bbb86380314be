"""
Graph input/output: edge-list text, JSON documents and DOT export.
"""
import json
import math
import sys
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import graphviz

from .errors import DuplicateEdgeError, GraphParseError, NegativeLoadError, SelfLoopError
from .graph import CONGESTION_STRICT, Graph, LoadedGraph, is_congested

FORMATS = ("edges", "json")


def _parse_load(token: str, line: Optional[int], field: str) -> float:
    try:
        load = float(token)
    except (TypeError, ValueError):
        raise GraphParseError(f"load is not a number: {token!r}", line=line, field=field) from None
    if not math.isfinite(load):
        raise GraphParseError(f"load must be finite: {token!r}", line=line, field=field)
    if load < 0:
        raise NegativeLoadError(f"negative load {token}", line=line, field=field)
    return load


class _EdgeCollector:
    """Assigns indices in order of first appearance and rejects bad edges."""

    def __init__(self):
        self.labels: List[str] = []
        self.index: Dict[str, int] = {}
        self.edges: Dict[Tuple[int, int], float] = {}

    def node(self, label: str) -> int:
        if label not in self.index:
            self.index[label] = len(self.labels)
            self.labels.append(label)
        return self.index[label]

    def edge(self, u_label: str, v_label: str, load: float, line: Optional[int], field: Optional[str]):
        if u_label == v_label:
            raise SelfLoopError(f"self-loop on '{u_label}'", line=line, field=field)
        u, v = self.node(u_label), self.node(v_label)
        key = (min(u, v), max(u, v))
        if key in self.edges:
            raise DuplicateEdgeError(f"duplicate edge '{u_label}'-'{v_label}'", line=line, field=field)
        self.edges[key] = load

    def build(self) -> LoadedGraph:
        graph = Graph.from_edges(self.labels, self.edges.keys())
        return LoadedGraph(graph=graph, loads=tuple(self.edges[e] for e in graph.edges))


def _valid_label(label) -> bool:
    return isinstance(label, str) and bool(label) and not any(c.isspace() for c in label)


def parse_edge_list(text: str) -> LoadedGraph:
    """`<u> <v> <load>` per line, `#` starts a comment."""
    collector = _EdgeCollector()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 3:
            raise GraphParseError(f"expected '<u> <v> <load>', got {len(tokens)} fields", line=lineno)
        u, v, token = tokens
        collector.edge(u, v, _parse_load(token, lineno, "load"), lineno, None)
    return collector.build()


def parse_json(text: str) -> LoadedGraph:
    """`{"nodes": [...], "edges": [{"u":, "v":, "load":}, ...]}`"""
    try:
        doc = json.loads(text) if text.strip() else {}
    except json.JSONDecodeError as e:
        raise GraphParseError(e.msg, line=e.lineno) from None
    if not isinstance(doc, dict):
        raise GraphParseError("top level must be an object")

    collector = _EdgeCollector()
    nodes = doc.get("nodes", [])
    if not isinstance(nodes, list):
        raise GraphParseError("must be a list", field="nodes")
    for i, label in enumerate(nodes):
        if not _valid_label(label):
            raise GraphParseError("node label must be a non-empty string without whitespace",
                                  field=f"nodes[{i}]")
        if label in collector.index:
            raise GraphParseError(f"duplicate node '{label}'", field=f"nodes[{i}]")
        collector.node(label)

    edges = doc.get("edges", [])
    if not isinstance(edges, list):
        raise GraphParseError("must be a list", field="edges")
    for i, edge in enumerate(edges):
        where = f"edges[{i}]"
        if not isinstance(edge, dict):
            raise GraphParseError("edge must be an object", field=where)
        for key in ("u", "v", "load"):
            if key not in edge:
                raise GraphParseError("missing key", field=f"{where}.{key}")
        u, v = edge["u"], edge["v"]
        for key, label in (("u", u), ("v", v)):
            if not _valid_label(label):
                raise GraphParseError("node label must be a non-empty string without whitespace",
                                      field=f"{where}.{key}")
        load = edge["load"]
        if isinstance(load, bool) or not isinstance(load, (int, float, str)):
            raise GraphParseError("load must be a number", field=f"{where}.load")
        collector.edge(u, v, _parse_load(load, None, f"{where}.load"), None, where)
    return collector.build()


def parse_graph(text: str, fmt: str = "edges") -> LoadedGraph:
    if fmt == "edges":
        return parse_edge_list(text)
    if fmt == "json":
        return parse_json(text)
    raise ValueError(f"unknown graph format: {fmt}")


def detect_format(path: Optional[str]) -> str:
    if path and Path(path).suffix.lower() == ".json":
        return "json"
    return "edges"


def read_graph(path: Optional[str], fmt: Optional[str] = None) -> LoadedGraph:
    """Read a graph from `path`, or stdin when path is None or '-'."""
    if path in (None, "-"):
        text = sys.stdin.read()
    else:
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as e:
            raise GraphParseError(f"cannot read {path}: {e.strerror}") from None
    return parse_graph(text, fmt or detect_format(path))


def _format_load(load: float) -> str:
    return repr(float(load))


def serialize_edge_list(g: LoadedGraph) -> str:
    labels = g.graph.labels
    lines = [f"{labels[u]} {labels[v]} {_format_load(load)}" for (u, v), load in g.edge_loads()]
    return "\n".join(lines) + ("\n" if lines else "")


def serialize_json(g: LoadedGraph) -> str:
    labels = g.graph.labels
    doc = {
        "nodes": list(labels),
        "edges": [{"u": labels[u], "v": labels[v], "load": load} for (u, v), load in g.edge_loads()],
    }
    return json.dumps(doc, indent=2)


def to_dot(graph: Graph,
           loads: Optional[Sequence[float]] = None,
           threshold: Optional[float] = None,
           strict: bool = CONGESTION_STRICT,
           shaded: Iterable[int] = (),
           path: Sequence[int] = (),
           name: str = "capnet") -> str:
    """
    DOT text for a graph.

    Nodes are named `n<index>` and carry their label as `label`. Congested
    edges (load above `threshold`) get `congested=true`; `shaded` nodes are
    filled grey; edges along `path` are drawn bold.
    """
    shaded = set(shaded)
    on_path = {(min(a, b), max(a, b)) for a, b in zip(path, path[1:])}
    dot = graphviz.Graph(name=name)
    for v in graph.nodes():
        attrs = {"label": graphviz.nohtml(graph.labels[v])}
        if v in shaded:
            attrs.update(style="filled", fillcolor="gray70")
        if v in path:
            attrs["penwidth"] = "2"
        dot.node(f"n{v}", **attrs)
    for i, (u, v) in enumerate(graph.edges):
        attrs = {}
        if loads is not None:
            attrs["load"] = _format_load(loads[i])
            if threshold is None or is_congested(loads[i], threshold, strict):
                attrs.update(congested="true", color="red")
        if (u, v) in on_path:
            attrs.update(style="bold", penwidth="3")
        dot.edge(f"n{u}", f"n{v}", **attrs)
    return dot.source
