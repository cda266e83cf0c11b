"""The unit-transfer graph on all partitions of a fixed total."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .partitions import Partition, canonical_index, enumerate_partitions, format_partition


def neighbors(p: Partition) -> set[Partition]:
    """All partitions reachable from ``p`` by moving a single unit.

    A move removes one unit from a source part (deleting the part when it
    drops to zero) and either adds it to a different existing part or
    opens a new part of size one; the result is re-sorted. Outcomes equal
    to ``p`` itself are discarded, and duplicates collapse.
    """
    return {Partition(t) for t in _neighbor_tuples(p.parts)}


def _neighbor_tuples(parts: tuple[int, ...]) -> set[tuple[int, ...]]:
    counts: dict[int, int] = {}
    for v in parts:
        counts[v] = counts.get(v, 0) + 1
    out: set[tuple[int, ...]] = set()
    for v in counts:
        base = dict(counts)
        base[v] -= 1
        if base[v] == 0:
            del base[v]
        if v > 1:
            base[v - 1] = base.get(v - 1, 0) + 1
        res = dict(base)
        res[1] = res.get(1, 0) + 1
        out.add(_expand(res))
        for w in counts:
            # the target must be a part other than the source instance
            if w == v and counts[v] == 1:
                continue
            res = dict(base)
            res[w] -= 1
            if res[w] == 0:
                del res[w]
            res[w + 1] = res.get(w + 1, 0) + 1
            out.add(_expand(res))
    out.discard(parts)
    return out


def _expand(counts: dict[int, int]) -> tuple[int, ...]:
    out: list[int] = []
    for v in sorted(counts, reverse=True):
        out.extend([v] * counts[v])
    return tuple(out)


@dataclass(frozen=True)
class TransferGraph:
    """Immutable adjacency structure over all partitions of one total.

    ``vertices`` follows the canonical enumeration order. ``adj`` holds
    sorted neighbor indices per vertex, and ``bitrows`` the same rows as
    integer bitmasks (bit j set when j is adjacent), which makes the
    neighborhood intersections inside the clique search word-parallel.
    """

    n: int
    vertices: tuple[Partition, ...]
    adj: tuple[tuple[int, ...], ...]
    bitrows: tuple[int, ...]
    parts_index: dict[tuple[int, ...], int] = field(repr=False, compare=False)

    def index_of(self, p: Partition) -> int:
        idx = self.parts_index.get(p.parts)
        if idx is None:
            raise ValueError(f"{format_partition(p)} is not a partition of {self.n}")
        return idx

    def degree(self, p: Partition) -> int:
        return len(self.adj[self.index_of(p)])

    def neighbors_of(self, p: Partition) -> tuple[Partition, ...]:
        return tuple(self.vertices[j] for j in self.adj[self.index_of(p)])

    @property
    def edge_count(self) -> int:
        return sum(len(row) for row in self.adj) // 2

    def is_connected(self) -> bool:
        """True when every vertex is reachable from vertex 0."""
        seen = bytearray(len(self.vertices))
        seen[0] = 1
        reached = 1
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for w in self.adj[u]:
                if not seen[w]:
                    seen[w] = 1
                    reached += 1
                    queue.append(w)
        return reached == len(self.vertices)

    def conjugation_permutation(self) -> tuple[int, ...]:
        """Vertex permutation induced by conjugating every partition."""
        return tuple(self.parts_index[v.conjugate().parts] for v in self.vertices)

    def dump_edges(self) -> str:
        """Edge list, one ``"a<TAB>b"`` line per edge, in canonical order."""
        lines = []
        for i, row in enumerate(self.adj):
            left = format_partition(self.vertices[i])
            for j in row:
                if j > i:
                    lines.append(f"{left}\t{format_partition(self.vertices[j])}")
        return "\n".join(lines) + ("\n" if lines else "")


def build_graph(n: int) -> TransferGraph:
    """Build the transfer graph on all partitions of ``n``.

    Adjacency is generated independently from both endpoints of every
    edge and checked for symmetry and irreflexivity before freezing.
    """
    verts = enumerate_partitions(n)
    index = canonical_index(n)
    adj_sets = [frozenset(index[t] for t in _neighbor_tuples(p.parts)) for p in verts]
    for i, row in enumerate(adj_sets):
        if i in row:
            raise AssertionError(f"self-loop at vertex {i} of G_{n}")
        for j in row:
            if i not in adj_sets[j]:
                raise AssertionError(f"asymmetric adjacency {i}/{j} in G_{n}")
    adj = tuple(tuple(sorted(row)) for row in adj_sets)
    bitrows = []
    for row in adj:
        bits = 0
        for j in row:
            bits |= 1 << j
        bitrows.append(bits)
    return TransferGraph(
        n=n, vertices=verts, adj=adj, bitrows=tuple(bitrows), parts_index=index
    )


def bfs_distances(graph: TransferGraph, sources: Iterable[int]) -> list[int]:
    """Graph distance from the nearest source vertex; -1 where unreachable."""
    dist = [-1] * len(graph.vertices)
    queue: deque[int] = deque()
    for s in sources:
        if dist[s] == -1:
            dist[s] = 0
            queue.append(s)
    while queue:
        u = queue.popleft()
        for w in graph.adj[u]:
            if dist[w] == -1:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist
