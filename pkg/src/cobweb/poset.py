"""Cobweb posets as graded DAGs, their layers, and checks on arbitrary DAGs.

Nodes are ``(level, ordinal)`` pairs with ordinals starting at 1 and are
rendered as ``"s:j"``.  Cover arcs of a cobweb poset are complete bipartite
between consecutive levels and are only materialized on request.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Hashable, Iterable, Iterator

import networkx as nx

from .errors import CyclicInput, InvalidRange, MissingLevels, ZeroLevel
from .sequences import FSequence, value

Node = tuple[int, int]


def node_label(v: Node) -> str:
    return f"{v[0]}:{v[1]}"


def parse_node(label: str) -> Hashable:
    """``"s:j"`` -> ``(s, j)``; anything else is kept as an opaque string."""
    s, sep, j = label.partition(":")
    if sep and s.lstrip("-").isdigit() and j.isdigit():
        return int(s), int(j)
    return label


@dataclass(frozen=True)
class CobwebPoset:
    sequence: FSequence
    n: int
    level_sizes: tuple[int, ...]

    def layer(self, k: int, n: int) -> Layer:
        return layer(self, k, n)

    @property
    def node_count(self) -> int:
        return sum(self.level_sizes)

    def nodes(self) -> Iterator[Node]:
        for s, size in enumerate(self.level_sizes):
            for j in range(1, size + 1):
                yield s, j


@dataclass(frozen=True)
class Layer:
    """The levels ``k..n`` of a cobweb poset (or of bare level sizes)."""

    k: int
    n: int
    level_sizes: tuple[int, ...]
    poset: CobwebPoset | None = None

    def __post_init__(self):
        if self.k > self.n:
            raise InvalidRange(f"layer needs k <= n, got k={self.k}, n={self.n}")
        if len(self.level_sizes) != self.n - self.k + 1:
            raise InvalidRange("level_sizes does not match the level range")

    @classmethod
    def from_sizes(cls, sizes: Iterable[int], k: int = 0) -> Layer:
        sizes = tuple(sizes)
        if not sizes:
            raise InvalidRange("a layer has at least one level")
        if any(s < 1 for s in sizes):
            raise ZeroLevel(f"empty level in {sizes}")
        return cls(k, k + len(sizes) - 1, sizes)

    @property
    def levels(self) -> range:
        return range(self.k, self.n + 1)

    @property
    def node_count(self) -> int:
        return sum(self.level_sizes)

    @property
    def arc_count(self) -> int:
        return sum(a * b for a, b in zip(self.level_sizes, self.level_sizes[1:]))

    def size(self, s: int) -> int:
        return self.level_sizes[s - self.k]

    def level_nodes(self, s: int) -> list[Node]:
        return [(s, j) for j in range(1, self.size(s) + 1)]

    def nodes(self) -> Iterator[Node]:
        for s in self.levels:
            yield from self.level_nodes(s)

    def cover_arcs(self) -> Iterator[tuple[Node, Node]]:
        for s in range(self.k, self.n):
            for j in range(1, self.size(s) + 1):
                for i in range(1, self.size(s + 1) + 1):
                    yield (s, j), (s + 1, i)


def build_cobweb(F: FSequence, n: int) -> CobwebPoset:
    """The cobweb poset with levels of sizes ``F_0..F_n``.

    A level-0 value of 0 or 1 gives a single root.
    """
    if n < 0:
        raise InvalidRange(f"top level must be nonnegative, got {n}")
    sizes = [max(value(F, 0), 1)]
    for s in range(1, n + 1):
        f = value(F, s)
        if f == 0:
            raise ZeroLevel(f"level {s} would be empty")
        sizes.append(f)
    return CobwebPoset(F, n, tuple(sizes))


def layer(P: CobwebPoset, k: int, n: int) -> Layer:
    if not 0 <= k <= n <= P.n:
        raise InvalidRange(f"layer <{k} -> {n}> is not within levels 0..{P.n}")
    return Layer(k, n, P.level_sizes[k : n + 1], P)


def _as_layer(P: CobwebPoset | Layer) -> Layer:
    return P if isinstance(P, Layer) else layer(P, 0, P.n)


# -- arbitrary DAGs -----------------------------------------------------------


class InputDag:
    """A DAG given by its cover arcs, optionally with a level for every node."""

    def __init__(self, arcs: Iterable[tuple[Hashable, Hashable]], nodes: Iterable[Hashable] = (), levels: dict | None = None):
        g = nx.DiGraph()
        g.add_nodes_from(nodes)
        g.add_edges_from(arcs)
        if not nx.is_directed_acyclic_graph(g):
            raise CyclicInput(f"input contains a cycle: {nx.find_cycle(g)}")
        self.graph = g
        self.levels = dict(levels) if levels is not None else None

    @property
    def node_count(self) -> int:
        return self.graph.number_of_nodes()

    @property
    def arc_count(self) -> int:
        return self.graph.number_of_edges()

    def without_arc(self, u, v) -> InputDag:
        arcs = [e for e in self.graph.edges if e != (u, v)]
        return InputDag(arcs, self.graph.nodes, self.levels)

    @classmethod
    def from_text(cls, text: str) -> InputDag:
        """Parse the edge-list format.

        An optional first line ``levels: s_0 s_1 ...`` declares the level
        sizes (creating nodes ``s:1..s:s_s``); every other non-blank line is
        an arc ``u v``.  Nodes written as ``s:j`` carry level ``s``.
        """
        nodes: list = []
        arcs = []
        lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
        lines = [ln for ln in lines if ln]
        if lines and lines[0].startswith("levels:"):
            sizes = [int(t) for t in lines[0][len("levels:") :].split()]
            nodes = [(s, j) for s, size in enumerate(sizes) for j in range(1, size + 1)]
            lines = lines[1:]
        for ln in lines:
            parts = ln.split()
            if len(parts) != 2:
                raise ValueError(f"bad arc line {ln!r}")
            arcs.append((parse_node(parts[0]), parse_node(parts[1])))
        allnodes = set(nodes) | {v for a in arcs for v in a}
        levels = None
        if allnodes and all(isinstance(v, tuple) for v in allnodes):
            levels = {v: v[0] for v in allnodes}
        return cls(arcs, nodes, levels)

    def to_text(self) -> str:
        lines = []
        if self.levels is not None and all(isinstance(v, tuple) for v in self.graph.nodes):
            top = max(self.levels.values(), default=-1)
            counts = [0] * (top + 1)
            for s in self.levels.values():
                counts[s] += 1
            lines.append("levels: " + " ".join(map(str, counts)))
        for u, v in sorted(self.graph.edges, key=lambda e: (_key(e[0]), _key(e[1]))):
            lines.append(f"{_label(u)} {_label(v)}")
        return "\n".join(lines) + "\n"


def _label(v) -> str:
    return node_label(v) if isinstance(v, tuple) else str(v)


def _key(v):
    return (0, v) if isinstance(v, tuple) else (1, str(v))


def hasse(P: CobwebPoset | Layer) -> InputDag:
    """Materialize the cover relation as an :class:`InputDag`."""
    L = _as_layer(P)
    nodes = list(L.nodes())
    return InputDag(L.cover_arcs(), nodes, {v: v[0] for v in nodes})


def is_cobweb(D: InputDag) -> tuple[bool, tuple | None]:
    """Whether all cross-level node pairs are comparable.

    Comparability is reachability along cover arcs in either direction.
    Returns ``(True, None)`` or ``(False, (x, y))`` for the first
    incomparable pair in (level, node) order.
    """
    if D.levels is None or any(v not in D.levels for v in D.graph.nodes):
        raise MissingLevels("is_cobweb needs a level label on every node")
    order = sorted(D.graph.nodes, key=lambda v: (D.levels[v], _key(v)))
    below = {v: nx.descendants(D.graph, v) for v in order}
    for x, y in combinations(order, 2):
        if D.levels[x] == D.levels[y]:
            continue
        if y not in below[x] and x not in below[y]:
            return False, (x, y)
    return True, None


def is_graded(D: InputDag) -> bool:
    """Whether every cover arc raises a consistent rank by exactly one.

    Ranks are assigned per weakly connected component with the minimal
    elements on rank 0.
    """
    g = D.graph
    for comp in nx.weakly_connected_components(g):
        start = next(iter(comp))
        local = {start: 0}
        todo = deque([start])
        while todo:
            u = todo.popleft()
            for v in g.successors(u):
                r = local[u] + 1
                if v not in local:
                    local[v] = r
                    todo.append(v)
                elif local[v] != r:
                    return False
            for v in g.predecessors(u):
                r = local[u] - 1
                if v not in local:
                    local[v] = r
                    todo.append(v)
                elif local[v] != r:
                    return False
        low = min(local.values())
        for v, r in local.items():
            if g.in_degree(v) == 0 and r != low:
                return False
    return True


def comparability_graph(P: CobwebPoset | Layer) -> nx.Graph:
    """Undirected graph joining every pair of nodes on distinct levels."""
    L = _as_layer(P)
    g = nx.Graph()
    g.add_nodes_from(L.nodes())
    for s, t in combinations(L.levels, 2):
        g.add_edges_from((x, y) for x in L.level_nodes(s) for y in L.level_nodes(t))
    for v in g.nodes:
        g.nodes[v]["level"] = v[0]
    return g


def comparability_edge_count(P: CobwebPoset | Layer) -> int:
    L = _as_layer(P)
    return sum(a * b for a, b in combinations(L.level_sizes, 2))


def to_dot(P: CobwebPoset | Layer, name: str = "cobweb") -> str:
    """DOT text: one ``rank=same`` subgraph per level, bottom-to-top."""
    L = _as_layer(P)
    out = [f'digraph "{name}" {{', "  rankdir=BT;", "  node [shape=circle];"]
    for s in L.levels:
        ids = " ".join(f'"{node_label(v)}";' for v in L.level_nodes(s))
        out.append(f"  subgraph level_{s} {{ rank=same; {ids} }}")
    for u, v in L.cover_arcs():
        out.append(f'  "{node_label(u)}" -> "{node_label(v)}";')
    out.append("}")
    return "\n".join(out) + "\n"
