"""Maximal chains of cobweb layers and the chain-partition certificate."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import islice, product
from math import prod
from typing import Iterator

import networkx as nx

from .errors import EnumerationCapExceeded, InvalidRange, NotAdmissible
from .fnomial import fnomial, is_admissible_upto
from .poset import Layer, build_cobweb, node_label
from .sequences import FSequence, f_factorial

DEFAULT_CAP = 10**7


@dataclass(frozen=True)
class MaximalChain:
    layer: Layer
    selection: tuple[int, ...]

    @property
    def nodes(self) -> list[tuple[int, int]]:
        return [(s, j) for s, j in zip(self.layer.levels, self.selection)]

    def label(self) -> str:
        return "->".join(node_label(v) for v in self.nodes)


def count_max_chains(L: Layer) -> int:
    """One free choice of node per level."""
    return prod(L.level_sizes)


def _selections(sizes) -> Iterator[tuple[int, ...]]:
    return product(*(range(1, s + 1) for s in sizes))


def enumerate_max_chains(L: Layer, cap: int = DEFAULT_CAP) -> Iterator[MaximalChain]:
    """All maximal chains of ``L`` in lexicographic order of their ordinals.

    Raises EnumerationCapExceeded up front when the count is above ``cap``.
    """
    count = count_max_chains(L)
    if count > cap:
        raise EnumerationCapExceeded(count, cap)
    return (MaximalChain(L, sel) for sel in _selections(L.level_sizes))


def chain_rank(selection: tuple[int, ...], sizes: tuple[int, ...]) -> int:
    """Mixed-radix index of a selection; raises on out-of-range ordinals."""
    r = 0
    for j, size in zip(selection, sizes, strict=True):
        if not 1 <= j <= size:
            raise ValueError(f"ordinal {j} outside 1..{size}")
        r = r * size + (j - 1)
    return r


@dataclass
class PartitionCertificate:
    n: int
    k: int
    m: int
    chain_count: int
    block_size: int
    block_count: int
    verified: bool
    blocks: list[tuple[int, int]] | None = None
    cap_exceeded: bool = False
    problems: list[str] = field(default_factory=list)

    @property
    def blocks_materialized(self) -> bool:
        return self.blocks is not None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "m": self.m,
            "chain_count": self.chain_count,
            "block_size": self.block_size,
            "block_count": self.block_count,
            "verified": self.verified,
            "blocks_materialized": self.blocks_materialized,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def _chunk_and_check(L: Layer, block_size: int, expected_blocks: int, cap: int) -> tuple[list[tuple[int, int]], list[str]]:
    """Cut the chain stream into consecutive blocks and check the partition.

    Every chain is mapped to its own mixed-radix index, so disjointness and
    coverage are checked against the index space, not against the chunking.
    """
    sizes = L.level_sizes
    total = count_max_chains(L)
    seen = bytearray(total)
    stream = (c.selection for c in enumerate_max_chains(L, cap))
    blocks = []
    problems = []
    start = 0
    while True:
        chunk = list(islice(stream, block_size))
        if not chunk:
            break
        if len(chunk) != block_size:
            problems.append(f"block {len(blocks)} has {len(chunk)} chains, expected {block_size}")
        for sel in chunk:
            r = chain_rank(sel, sizes)
            if seen[r]:
                problems.append(f"chain {sel} appears in more than one block")
            seen[r] = 1
        blocks.append((start, start + len(chunk)))
        start += len(chunk)
    missing = total - sum(seen)
    if missing:
        problems.append(f"{missing} chains not covered by any block")
    if len(blocks) != expected_blocks:
        problems.append(f"{len(blocks)} blocks built, F-nomial says {expected_blocks}")
    return blocks, problems


def verify_partition_theorem(F: FSequence, n: int, k: int, materialize: bool = False, cap: int = DEFAULT_CAP) -> PartitionCertificate:
    """Certify that the (n, k) F-nomial counts an equipotent partition.

    The chains of the layer ``<Phi_{k+1} -> Phi_n>`` are split into blocks
    of size ``m_F!`` (the maximal-chain count of ``P_m``, levels
    ``F_1..F_m``), ``m = n - k``.  The block count must equal the F-nomial.
    With ``materialize`` the blocks are built explicitly (if within ``cap``)
    and checked for disjointness, cardinality and coverage.
    """
    if not 0 <= k <= n:
        raise InvalidRange(f"need 0 <= k <= n, got n={n}, k={k}")
    adm = is_admissible_upto(F, n)
    if not adm.admissible_upto_N:
        raise NotAdmissible(f"{F.name} is not admissible up to {n}", adm.first_failure)
    m = n - k
    P = build_cobweb(F, n)
    block_size = count_max_chains(P.layer(1, m)) if m > 0 else 1
    # k == n: empty level range, one empty chain
    chains_layer = P.layer(k + 1, n) if k < n else None
    chain_count = count_max_chains(chains_layer) if chains_layer else 1
    block_count = fnomial(F, n, k).value.numerator

    problems = []
    if block_size != f_factorial(F, m):
        problems.append("P_m chain count differs from m_F!")
    if block_count * block_size != chain_count:
        problems.append(f"{block_count} * {block_size} != {chain_count}")

    cert = PartitionCertificate(n, k, m, chain_count, block_size, block_count, False)
    if materialize:
        if chain_count > cap:
            cert.cap_exceeded = True
        elif chains_layer is None:
            cert.blocks = [(0, 1)]
        else:
            cert.blocks, more = _chunk_and_check(chains_layer, block_size, block_count, cap)
            problems += more
    cert.problems = problems
    cert.verified = not problems
    return cert


def count_monotone_max_paths(G: nx.Graph, cap: int = DEFAULT_CAP) -> int:
    """Brute-force count of simple paths taking one node per level upward.

    Walks the graph's adjacency; nodes carry their level either as a
    ``level`` attribute or as the first entry of a ``(level, j)`` node id.
    """
    level = {v: G.nodes[v].get("level", v[0] if isinstance(v, tuple) else None) for v in G.nodes}
    if not level:
        return 0
    lo, hi = min(level.values()), max(level.values())
    count = 0
    for start in sorted(v for v in G.nodes if level[v] == lo):
        stack = [(start, frozenset([start]))]
        while stack:
            u, visited = stack.pop()
            if level[u] == hi:
                count += 1
                if count > cap:
                    raise EnumerationCapExceeded(count, cap)
                continue
            for w in G.adj[u]:
                if w not in visited and level[w] == level[u] + 1:
                    stack.append((w, visited | {w}))
    return count
