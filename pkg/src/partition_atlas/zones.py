"""Threshold thick zones and their shell/core split against the framework."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .framework import FrameworkSet
from .partitions import format_partition
from .thickness import ThicknessProfile
from .transfer_graph import TransferGraph


class UnionFind:
    """Union-find over an arbitrary set of vertex indices.

    Roots are kept minimal, so each component's representative is its
    smallest member and component identities are stable across runs.
    """

    def __init__(self, items: Iterable[int]):
        self.parent = {v: v for v in items}

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra


@dataclass(frozen=True)
class ZoneComponent:
    vertices: frozenset[int]
    boundary_attached: bool


@dataclass(frozen=True)
class ZoneDecomposition:
    """One threshold zone split into boundary shell and interior core.

    ``components`` are the connected components of the subgraph induced on
    the zone, ordered by smallest member; a component is boundary-attached
    when it intersects the framework vertex set. The shell collects the
    attached components, the core everything else.
    """

    n: int
    r: int
    threshold: frozenset[int]
    exact: frozenset[int]
    components: tuple[ZoneComponent, ...]
    shell: frozenset[int]
    core: frozenset[int]


def threshold_zone(profile: ThicknessProfile, r: int) -> frozenset[int]:
    """Vertices of thickness at least ``r``; everything at r=0."""
    if r < 0:
        raise ValueError(f"r must be nonnegative, got {r}")
    return frozenset(v for v, t in enumerate(profile.tau) if t >= r)


def exact_regime(profile: ThicknessProfile, r: int) -> frozenset[int]:
    """Vertices of thickness exactly ``r``."""
    if r < 0:
        raise ValueError(f"r must be nonnegative, got {r}")
    return frozenset(v for v, t in enumerate(profile.tau) if t == r)


def decompose(
    graph: TransferGraph,
    framework: FrameworkSet,
    profile: ThicknessProfile,
    r: int,
) -> ZoneDecomposition:
    """Split the threshold zone at ``r`` relative to the framework."""
    if not (graph.n == framework.n == profile.n):
        raise ValueError("graph, framework and profile must describe the same n")
    zone = threshold_zone(profile, r)
    uf = UnionFind(zone)
    for i in zone:
        for j in graph.adj[i]:
            if j > i and j in zone:
                uf.union(i, j)
    groups: dict[int, list[int]] = {}
    for i in sorted(zone):
        groups.setdefault(uf.find(i), []).append(i)
    components = []
    shell: set[int] = set()
    core: set[int] = set()
    for root in sorted(groups):
        vs = frozenset(groups[root])
        attached = not vs.isdisjoint(framework.all_indices)
        components.append(ZoneComponent(vertices=vs, boundary_attached=attached))
        (shell if attached else core).update(vs)
    return ZoneDecomposition(
        n=graph.n,
        r=r,
        threshold=zone,
        exact=exact_regime(profile, r),
        components=tuple(components),
        shell=frozenset(shell),
        core=frozenset(core),
    )


@dataclass(frozen=True)
class FirstOccurrenceTable:
    """Smallest n realizing each thickness order within a computed range.

    Orders not realized by any n up to ``range_max`` are simply absent;
    absence is a truncation fact, not a value.
    """

    entries: dict[int, int]
    range_max: int


def first_occurrences(profiles: Sequence[ThicknessProfile]) -> FirstOccurrenceTable:
    """First n at which each order r >= 2 appears, over profiles for 1..N."""
    if not profiles:
        raise ValueError("at least one profile is required")
    for i, prof in enumerate(profiles):
        if prof.n != i + 1:
            raise ValueError("profiles must cover a contiguous range starting at 1")
    entries: dict[int, int] = {}
    for prof in profiles:
        for r in range(2, prof.tau_max + 1):
            entries.setdefault(r, prof.n)
    return FirstOccurrenceTable(entries=dict(sorted(entries.items())), range_max=len(profiles))


def first_occurrences_csv(table: FirstOccurrenceTable) -> str:
    """CSV export, header ``r,n_r``; explains itself when empty."""
    lines = ["r,n_r"]
    if not table.entries:
        lines.append(f"# no vertex reaches thickness 2 for any n <= {table.range_max}")
    for r, n_r in table.entries.items():
        lines.append(f"{r},{n_r}")
    return "\n".join(lines) + "\n"


def zone_json(graph: TransferGraph, decomposition: ZoneDecomposition) -> str:
    """JSON export of one decomposition, partitions in canonical text form."""
    if graph.n != decomposition.n:
        raise ValueError("graph and decomposition must describe the same n")

    def names(idxs: Iterable[int]) -> list[str]:
        return [format_partition(graph.vertices[i]) for i in sorted(idxs)]

    doc = {
        "n": decomposition.n,
        "r": decomposition.r,
        "threshold": names(decomposition.threshold),
        "exact": names(decomposition.exact),
        "shell": names(decomposition.shell),
        "core": names(decomposition.core),
        "components": [
            {"vertices": names(c.vertices), "boundary_attached": c.boundary_attached}
            for c in decomposition.components
        ],
    }
    return json.dumps(doc, indent=2) + "\n"
