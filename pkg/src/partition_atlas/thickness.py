"""Exact per-vertex clique thickness of a transfer graph.

The thickness of a vertex is the size of the largest clique through it,
minus one. Every clique through a vertex is that vertex plus a clique
inside its neighborhood, so each value reduces to an exact maximum-clique
computation on the subgraph induced on the neighbors. Neighborhoods stay
small relative to the graph, which keeps exhaustive search cheap.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Sequence

from .partitions import (
    Partition,
    canonical_index,
    enumerate_partitions,
    format_partition,
    parse_partition,
)
from .transfer_graph import TransferGraph


@dataclass(frozen=True)
class ThicknessProfile:
    """Thickness of every vertex of one transfer graph.

    ``tau[i]`` is one less than the largest clique size through vertex
    ``i``; ``max_locus`` lists the indices attaining ``tau_max``.
    """

    n: int
    tau: tuple[int, ...]
    tau_max: int
    max_locus: tuple[int, ...]


def local_simplex_dimension(graph: TransferGraph, p: Partition) -> int:
    """Largest clique size through ``p``, minus one; 0 for an isolated vertex."""
    return _neighborhood_clique_size(graph, graph.index_of(p))


def thickness_profile(graph: TransferGraph) -> ThicknessProfile:
    """Thickness of every vertex, computed independently per vertex.

    No value is shortcut from another vertex's result, so the profile is
    identical for any evaluation order.
    """
    tau = tuple(_neighborhood_clique_size(graph, v) for v in range(len(graph.vertices)))
    tau_max = max(tau)
    locus = tuple(v for v, t in enumerate(tau) if t == tau_max)
    return ThicknessProfile(n=graph.n, tau=tau, tau_max=tau_max, max_locus=locus)


def max_thickness_locus(graph: TransferGraph, profile: ThicknessProfile) -> tuple[Partition, ...]:
    """The partitions attaining ``tau_max``, in canonical order."""
    if graph.n != profile.n:
        raise ValueError("graph and profile must describe the same n")
    return tuple(graph.vertices[i] for i in profile.max_locus)


def brute_force_local_dimension(graph: TransferGraph, p: Partition) -> int:
    """Reference value for :func:`local_simplex_dimension`.

    Grows every clique of the neighborhood subgraph one vertex at a time,
    with no ordering, bounding, or pivoting, and records the largest size
    reached. Exponential by design; intended for cross-checks at small n.
    Shares no search code with the production path.
    """
    v = graph.index_of(p)
    members = list(graph.adj[v])
    if not members:
        return 0
    nbr = {u: set(graph.adj[u]) for u in members}
    best = 0

    def extend(size: int, candidates: list[int]) -> None:
        nonlocal best
        if size > best:
            best = size
        for i, u in enumerate(candidates):
            extend(size + 1, [w for w in candidates[i + 1 :] if w in nbr[u]])

    extend(0, members)
    return best


def max_clique_through(graph: TransferGraph, p: Partition) -> tuple[Partition, ...]:
    """One largest clique containing ``p``, for figure annotation.

    Deterministic for fixed inputs; the members come back in canonical
    vertex order.
    """
    v = graph.index_of(p)
    members = graph.adj[v]
    if not members:
        return (graph.vertices[v],)
    rows = _local_rows(graph, members)
    rows, old_of_new = _reorder_by_degeneracy(rows)
    _, mask = _max_clique(rows, want_witness=True)
    chosen = [v]
    while mask:
        bit = mask & -mask
        mask ^= bit
        chosen.append(members[old_of_new[bit.bit_length() - 1]])
    return tuple(graph.vertices[i] for i in sorted(chosen))


def _neighborhood_clique_size(graph: TransferGraph, v: int) -> int:
    members = graph.adj[v]
    k = len(members)
    if k <= 1:
        return k
    rows = _local_rows(graph, members)
    rows, _ = _reorder_by_degeneracy(rows)
    size, _ = _max_clique(rows)
    return size


def _local_rows(graph: TransferGraph, members: Sequence[int]) -> list[int]:
    """Bitmask adjacency of the subgraph induced on ``members``."""
    pos = {u: i for i, u in enumerate(members)}
    rows = [0] * len(members)
    for i, u in enumerate(members):
        bits = 0
        for w in graph.adj[u]:
            j = pos.get(w)
            if j is not None:
                bits |= 1 << j
        rows[i] = bits
    return rows


def _reorder_by_degeneracy(rows: list[int]) -> tuple[list[int], list[int]]:
    """Renumber so the densest-core vertices come first.

    Repeatedly removing a minimum-degree vertex yields a degeneracy order;
    reversing it fronts the core, which tightens the greedy coloring used
    as the search bound. Returns the renumbered rows and the old index of
    each new position.
    """
    k = len(rows)
    deg = [r.bit_count() for r in rows]
    alive = [True] * k
    removal: list[int] = []
    for _ in range(k):
        best = -1
        for u in range(k):
            if alive[u] and (best < 0 or deg[u] < deg[best]):
                best = u
        removal.append(best)
        alive[best] = False
        r = rows[best]
        while r:
            bit = r & -r
            r ^= bit
            u = bit.bit_length() - 1
            if alive[u]:
                deg[u] -= 1
    old_of_new = removal[::-1]
    new_of_old = [0] * k
    for new, old in enumerate(old_of_new):
        new_of_old[old] = new
    out = [0] * k
    for old in range(k):
        r = rows[old]
        bits = 0
        while r:
            bit = r & -r
            r ^= bit
            bits |= 1 << new_of_old[bit.bit_length() - 1]
        out[new_of_old[old]] = bits
    return out, old_of_new


def _max_clique(rows: list[int], want_witness: bool = False) -> tuple[int, int]:
    """Exact maximum clique size of the bitmask graph ``rows``.

    Branch and bound with a greedy-coloring upper bound: the candidate set
    is colored in index order, then explored from the highest color down,
    so a branch is cut as soon as clique-so-far plus color cannot beat the
    best clique found. Returns (size, member mask); the mask stays 0
    unless ``want_witness``.
    """
    best = 0
    best_mask = 0
    stack: list[int] = []

    def expand(size: int, cand: int) -> None:
        nonlocal best, best_mask
        seq: list[int] = []
        bound: list[int] = []
        uncolored = cand
        color = 0
        while uncolored:
            color += 1
            cls = uncolored
            while cls:
                bit = cls & -cls
                v = bit.bit_length() - 1
                cls &= ~rows[v]
                cls ^= bit
                uncolored ^= bit
                seq.append(v)
                bound.append(color)
        for idx in range(len(seq) - 1, -1, -1):
            if size + bound[idx] <= best:
                return
            v = seq[idx]
            bit = 1 << v
            if want_witness:
                stack.append(v)
            nxt = cand & rows[v]
            if size + 1 > best:
                best = size + 1
                if want_witness:
                    mask = 0
                    for u in stack:
                        mask |= 1 << u
                    best_mask = mask
            if nxt:
                expand(size + 1, nxt)
            if want_witness:
                stack.pop()
            cand ^= bit

    expand(0, (1 << len(rows)) - 1)
    return best, best_mask


def profile_csv(graph: TransferGraph, profile: ThicknessProfile) -> str:
    """CSV export, header ``partition,tau``, rows in canonical order.

    Partition text carries commas, so that field is quoted whenever the
    partition has more than one part.
    """
    if graph.n != profile.n:
        raise ValueError("graph and profile must describe the same n")
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["partition", "tau"])
    for i, p in enumerate(graph.vertices):
        writer.writerow([format_partition(p), profile.tau[i]])
    return buffer.getvalue()


def profile_json(graph: TransferGraph, profile: ThicknessProfile) -> str:
    """JSON export with the full map plus ``tau_max`` and the maximal locus."""
    if graph.n != profile.n:
        raise ValueError("graph and profile must describe the same n")
    doc = {
        "n": profile.n,
        "tau_max": profile.tau_max,
        "max_locus": [format_partition(graph.vertices[i]) for i in profile.max_locus],
        "tau": {format_partition(p): profile.tau[i] for i, p in enumerate(graph.vertices)},
    }
    return json.dumps(doc, indent=2) + "\n"


def profile_from_json(text: str) -> ThicknessProfile:
    """Rebuild a profile from :func:`profile_json` output, with validation."""
    doc = json.loads(text)
    n = doc["n"]
    verts = enumerate_partitions(n)
    tau_map = doc["tau"]
    if len(tau_map) != len(verts):
        raise ValueError(f"profile for n={n} must list {len(verts)} vertices")
    tau = tuple(tau_map[format_partition(p)] for p in verts)
    tau_max = max(tau)
    locus = tuple(v for v, t in enumerate(tau) if t == tau_max)
    index = canonical_index(n)
    stated_locus = tuple(sorted(index[parse_partition(s).parts] for s in doc["max_locus"]))
    if doc["tau_max"] != tau_max or stated_locus != locus:
        raise ValueError(f"inconsistent profile document for n={n}")
    return ThicknessProfile(n=n, tau=tau, tau_max=tau_max, max_locus=locus)
