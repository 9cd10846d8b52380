"""Finite labeled simplicial graphs and the structural tests built on them.

A graph is given by ordered vertices and edges carrying integer labels >= 2.
The text format (conventionally ``.artin``) is line based::

    # comment
    v a          # declare vertex "a"
    v b
    e a b 4      # edge between declared vertices, label 4
    c a 1/2      # optional character value, consumed by the character parser

Blank lines are ignored; endpoints must be declared before use.

>>> g = parse_graph("v a\\nv b\\ne a b 4\\n")
>>> g.vertices
('a', 'b')
>>> cycle_rank(g)
0
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property, lru_cache

import networkx as nx

from .errors import InputError

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class LabeledGraph:
    vertices: tuple
    edges: tuple

    def __post_init__(self):
        vertices = tuple(self.vertices)
        seen = set()
        for v in vertices:
            if not isinstance(v, str) or not _NAME_RE.match(v):
                raise InputError(f"bad vertex name {v!r}")
            if v in seen:
                raise InputError(f"duplicate vertex {v!r}")
            seen.add(v)
        index = {v: i for i, v in enumerate(vertices)}
        norm = []
        pairs = set()
        for edge in self.edges:
            try:
                u, v, label = edge
            except (TypeError, ValueError):
                raise InputError(f"bad edge {edge!r}") from None
            if u not in index or v not in index:
                raise InputError(f"edge ({u!r}, {v!r}) uses an undeclared vertex")
            if u == v:
                raise InputError(f"loop at {u!r} is not allowed")
            if not isinstance(label, int) or label < 2:
                raise InputError(f"edge label must be an integer >= 2, got {label!r}")
            if index[u] > index[v]:
                u, v = v, u
            if (u, v) in pairs:
                raise InputError(f"duplicate edge ({u!r}, {v!r})")
            pairs.add((u, v))
            norm.append((u, v, label))
        norm.sort(key=lambda e: (index[e[0]], index[e[1]]))
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", tuple(norm))

    @cached_property
    def index(self) -> dict:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def adjacency(self) -> dict:
        adj = {v: [] for v in self.vertices}
        for u, v, _ in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return {v: tuple(ns) for v, ns in adj.items()}

    @cached_property
    def _labels(self) -> dict:
        return {(u, v): l for u, v, l in self.edges}

    def neighbors(self, v: str) -> tuple:
        try:
            return self.adjacency[v]
        except KeyError:
            raise InputError(f"unknown vertex {v!r}") from None

    def has_edge(self, u: str, v: str) -> bool:
        if self.index[u] > self.index[v]:
            u, v = v, u
        return (u, v) in self._labels

    def label(self, u: str, v: str) -> int:
        if u not in self.index or v not in self.index:
            raise InputError("unknown vertex")
        if self.index[u] > self.index[v]:
            u, v = v, u
        try:
            return self._labels[(u, v)]
        except KeyError:
            raise InputError(f"no edge between {u!r} and {v!r}") from None


def parse_artin(text: str):
    """Parse the line format; returns (graph, character-spec-or-None).

    Character lines ``c name value`` are collected into the inline spec
    syntax ``name=value,...`` understood by the character parser.
    """
    vertices = []
    edges = []
    char_parts = []
    declared = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kind = parts[0]
        if kind == "v":
            if len(parts) != 2:
                raise InputError(f"line {lineno}: vertex line needs exactly one name")
            name = parts[1]
            if not _NAME_RE.match(name):
                raise InputError(f"line {lineno}: bad vertex name {name!r}")
            if name in declared:
                raise InputError(f"line {lineno}: duplicate vertex {name!r}")
            declared.add(name)
            vertices.append(name)
        elif kind == "e":
            if len(parts) != 4:
                raise InputError(f"line {lineno}: edge line needs two names and a label")
            u, v, label_text = parts[1], parts[2], parts[3]
            for name in (u, v):
                if name not in declared:
                    raise InputError(f"line {lineno}: vertex {name!r} used before declaration")
            try:
                label = int(label_text)
            except ValueError:
                raise InputError(f"line {lineno}: bad label {label_text!r}") from None
            if label < 2:
                raise InputError(f"line {lineno}: label must be >= 2")
            edges.append((u, v, label))
        elif kind == "c":
            if len(parts) != 3:
                raise InputError(f"line {lineno}: character line needs a name and a value")
            if parts[1] not in declared:
                raise InputError(f"line {lineno}: vertex {parts[1]!r} used before declaration")
            char_parts.append(f"{parts[1]}={parts[2]}")
        else:
            raise InputError(f"line {lineno}: unknown directive {kind!r}")
    graph = LabeledGraph(tuple(vertices), tuple(edges))
    return graph, (",".join(char_parts) if char_parts else None)


def parse_graph(text: str) -> LabeledGraph:
    return parse_artin(text)[0]


def full_subgraph(graph: LabeledGraph, vertex_set) -> LabeledGraph:
    """Induced subgraph on the given vertices, keeping declaration order."""
    wanted = set(vertex_set)
    unknown = wanted - set(graph.vertices)
    if unknown:
        raise InputError(f"unknown vertices {sorted(unknown)}")
    vertices = tuple(v for v in graph.vertices if v in wanted)
    edges = tuple(e for e in graph.edges if e[0] in wanted and e[1] in wanted)
    return LabeledGraph(vertices, edges)


def is_connected(graph: LabeledGraph) -> bool:
    """Breadth-first connectivity; the empty graph counts as connected."""
    verts = graph.vertices
    if len(verts) <= 1:
        return True
    adj = graph.adjacency
    seen = {verts[0]}
    frontier = [verts[0]]
    while frontier:
        nxt = []
        for v in frontier:
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return len(seen) == len(verts)


def is_dominant(graph: LabeledGraph, vertex_set) -> bool:
    """True iff every vertex outside the set has a neighbor inside it.

    Depends only on the vertex set, never on edges of any subgraph spanned
    by it.
    """
    inside = set(vertex_set)
    unknown = inside - set(graph.vertices)
    if unknown:
        raise InputError(f"unknown vertices {sorted(unknown)}")
    for v in graph.vertices:
        if v in inside:
            continue
        if not any(w in inside for w in graph.adjacency[v]):
            return False
    return True


def connected_components(graph: LabeledGraph) -> list:
    adj = graph.adjacency
    seen = set()
    comps = []
    for start in graph.vertices:
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        frontier = [start]
        while frontier:
            nxt = []
            for v in frontier:
                for w in adj[v]:
                    if w not in seen:
                        seen.add(w)
                        comp.append(w)
                        nxt.append(w)
            frontier = nxt
        comps.append(tuple(sorted(comp, key=graph.index.__getitem__)))
    return comps


def cycle_rank(graph: LabeledGraph) -> int:
    """First Betti number |E| - |V| + number of components."""
    return len(graph.edges) - len(graph.vertices) + len(connected_components(graph))


@dataclass(frozen=True)
class Block:
    """One biconnected component: its vertex set and its edge set."""

    vertices: tuple
    edges: tuple


def blocks(graph: LabeledGraph) -> list:
    """Biconnected components in canonical order; they partition the edges.

    Isolated vertices span no edges and therefore appear in no block.
    """
    if not graph.edges:
        return []
    g = nx.Graph()
    g.add_nodes_from(graph.vertices)
    for u, v, _ in graph.edges:
        g.add_edge(u, v)
    idx = graph.index
    out = []
    for comp in nx.biconnected_component_edges(g):
        edge_list = []
        verts = set()
        for u, v in comp:
            if idx[u] > idx[v]:
                u, v = v, u
            edge_list.append((u, v, graph.label(u, v)))
            verts.update((u, v))
        edge_list.sort(key=lambda e: (idx[e[0]], idx[e[1]]))
        vertices = tuple(sorted(verts, key=idx.__getitem__))
        out.append(Block(vertices, tuple(edge_list)))
    out.sort(key=lambda b: tuple(idx[v] for v in b.vertices) + (len(b.edges),))
    return out


def all_labels_even(graph: LabeledGraph) -> bool:
    return all(label % 2 == 0 for _, _, label in graph.edges)


def high_label_subgraph(graph: LabeledGraph) -> LabeledGraph:
    """Subgraph spanned by edges with label > 2 (all vertices kept)."""
    return LabeledGraph(graph.vertices, tuple(e for e in graph.edges if e[2] > 2))


SIMPLE_CYCLE = "simple-cycle"
STRICT = "strict"
HYPOTHESIS_MODES = (SIMPLE_CYCLE, STRICT)


@lru_cache(maxsize=4096)
def check_hypothesis(graph: LabeledGraph, mode: str = SIMPLE_CYCLE) -> bool:
    """Structural test on the subgraph H spanned by label>2 edges.

    ``simple-cycle``: no simple cycle of even length exists in H, decided by
    the block criterion (every block is a single edge or an odd cycle).
    ``strict``: H is a forest.  strict implies simple-cycle.
    """
    if mode not in HYPOTHESIS_MODES:
        raise InputError(f"unknown hypothesis mode {mode!r}")
    high = high_label_subgraph(graph)
    if mode == STRICT:
        return cycle_rank(high) == 0
    for block in blocks(high):
        if len(block.edges) == 1:
            continue
        if len(block.edges) == len(block.vertices) and len(block.vertices) % 2 == 1:
            continue
        return False
    return True


def _canonical_cycle(cycle, idx):
    """Rotate/orient a vertex cycle deterministically: smallest vertex first,
    then the smaller neighbor second."""
    k = len(cycle)
    start = min(range(k), key=lambda i: idx[cycle[i]])
    fwd = [cycle[(start + i) % k] for i in range(k)]
    bwd = [cycle[(start - i) % k] for i in range(k)]
    return min(fwd, bwd, key=lambda c: [idx[v] for v in c])


def hypothesis_witness(graph: LabeledGraph, mode: str = SIMPLE_CYCLE):
    """A cycle demonstrating failure of check_hypothesis, None when it holds.

    For ``simple-cycle`` the witness is an even simple cycle in the label>2
    subgraph; for ``strict`` it is any simple cycle there.  Deterministic:
    the shortest qualifying cycle in canonical rotation.
    """
    if check_hypothesis(graph, mode):
        return None
    high = high_label_subgraph(graph)
    g = nx.Graph()
    g.add_nodes_from(high.vertices)
    for u, v, _ in high.edges:
        g.add_edge(u, v)
    idx = graph.index
    best = None
    for cycle in nx.simple_cycles(g):
        if len(cycle) < 3:
            continue
        if mode == SIMPLE_CYCLE and len(cycle) % 2 == 1:
            continue
        cand = _canonical_cycle(list(cycle), idx)
        key = (len(cand), [idx[v] for v in cand])
        if best is None or key < best[0]:
            best = (key, cand)
    return tuple(best[1]) if best else None
