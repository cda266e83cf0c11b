"""Deterministic layout, SVG rendering, table export, locus statistics."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Optional, Sequence

from .framework import FrameworkSet, boundary_framework, self_conjugate_axis
from .partitions import Partition, PartitionIndex, enumerate_partitions, format_partition
from .thickness import ThicknessProfile
from .transfer_graph import TransferGraph, bfs_distances
from .zones import decompose, exact_regime, first_occurrences, first_occurrences_csv

# glyph geometry, in SVG user units
CELL = 28.0
MARGIN = 36.0
RADIUS = 7.0
RING_OFFSET = 0.3  # cell fraction; must stay below 0.5 to keep cells apart

# fill per thickness value 0..8; values past the end reuse the last entry
THICKNESS_PALETTE = (
    "#bdbdbd",
    "#dadaeb",
    "#9ecae1",
    "#fdae6b",
    "#e6550d",
    "#e31a1c",
    "#a50f15",
    "#54278f",
    "#252525",
)

# zone-view fills: exactly-one-dimensional gray, order-2 shell blue,
# order-3 core red, anything else in the residual tone
ZONE_FILLS = {
    "exact1": "#b5b5b5",
    "skin2": "#3182bd",
    "core3": "#de2d26",
    "rest": "#fee6ce",
}

EDGE_STYLE = 'stroke="#c8c8c8" stroke-width="1.00"'
OUTLINE_STROKE = ('#000000', "2.50")
PLAIN_STROKE = ('#606060', "0.80")


@dataclass(frozen=True)
class LayoutPoint:
    """Grid placement of one vertex at (largest part, number of parts).

    ``dx``/``dy`` are small ring offsets, nonzero only when several
    partitions share the same cell.
    """

    vertex: PartitionIndex
    x: int
    y: int
    dx: float
    dy: float


def layout(n: int) -> tuple[LayoutPoint, ...]:
    """One point per partition of ``n``, in canonical order.

    Partitions landing on the same cell are spread on a small circle
    around it in canonical order, so placement is a pure function of the
    enumeration. Conjugation transposes the base cell.
    """
    verts = enumerate_partitions(n)
    cells: dict[tuple[int, int], list[int]] = {}
    for i, p in enumerate(verts):
        cells.setdefault((p.largest, p.length), []).append(i)
    points: list[Optional[LayoutPoint]] = [None] * len(verts)
    for (x, y), group in cells.items():
        m = len(group)
        for k, i in enumerate(group):
            if m == 1:
                dx, dy = 0.0, 0.0
            else:
                angle = 2.0 * math.pi * k / m
                dx = round(RING_OFFSET * math.cos(angle), 4)
                dy = round(RING_OFFSET * math.sin(angle), 4)
            points[i] = LayoutPoint(vertex=PartitionIndex(n, i), x=x, y=y, dx=dx, dy=dy)
    return tuple(points)  # type: ignore[arg-type]


def _coord(value: float) -> str:
    return f"{value:.2f}"


def render_atlas(
    graph: TransferGraph,
    profile: ThicknessProfile,
    mode: str,
    highlight: Optional[Iterable[Partition]] = None,
) -> str:
    """SVG drawing of one transfer graph.

    ``mode="thickness"`` fills vertices from the thickness palette.
    ``mode="zones"`` paints the exactly-one-dimensional regime gray, the
    order-2 shell blue and the order-3 core red (red wins where shell and
    core overlap), with the residual tone elsewhere; each glyph's class
    attribute records every zone it belongs to. Highlighted vertices are
    outlined in black. Output is byte-deterministic for fixed inputs.
    """
    if mode not in ("thickness", "zones"):
        raise ValueError(f"unknown atlas mode {mode!r}")
    if graph.n != profile.n:
        raise ValueError("graph and profile must describe the same n")
    n = graph.n
    outlined: set[int] = set()
    if highlight is not None:
        outlined = {graph.index_of(p) for p in highlight}

    if mode == "zones":
        fw = boundary_framework(n)
        exact1 = exact_regime(profile, 1)
        skin2 = decompose(graph, fw, profile, 2).shell
        core3 = decompose(graph, fw, profile, 3).core

    points = layout(n)
    coords = [
        (MARGIN + (p.x - 1 + p.dx) * CELL, MARGIN + (p.y - 1 + p.dy) * CELL)
        for p in points
    ]
    side = _coord(2 * MARGIN + (n - 1) * CELL)

    out = ['<?xml version="1.0" encoding="UTF-8"?>']
    out.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{side}" height="{side}" viewBox="0 0 {side} {side}">'
    )
    out.append(f"<desc>{mode} atlas, n={n}</desc>")
    out.append('<g id="edges">')
    for i in range(len(coords)):
        x1, y1 = coords[i]
        for j in graph.adj[i]:
            if j > i:
                x2, y2 = coords[j]
                out.append(
                    f'<line x1="{_coord(x1)}" y1="{_coord(y1)}" '
                    f'x2="{_coord(x2)}" y2="{_coord(y2)}" {EDGE_STYLE}/>'
                )
    out.append("</g>")
    out.append('<g id="vertices">')
    for i, p in enumerate(graph.vertices):
        classes = ["v"]
        if mode == "thickness":
            t = profile.tau[i]
            classes.append(f"t{t}")
            fill = THICKNESS_PALETTE[min(t, len(THICKNESS_PALETTE) - 1)]
        else:
            if i in exact1:
                classes.append("exact1")
            if i in skin2:
                classes.append("skin2")
            if i in core3:
                classes.append("core3")
            if len(classes) == 1:
                classes.append("rest")
            if "core3" in classes:
                fill = ZONE_FILLS["core3"]
            elif "skin2" in classes:
                fill = ZONE_FILLS["skin2"]
            elif "exact1" in classes:
                fill = ZONE_FILLS["exact1"]
            else:
                fill = ZONE_FILLS["rest"]
        if i in outlined:
            classes.append("hl")
            stroke, stroke_width = OUTLINE_STROKE
        else:
            stroke, stroke_width = PLAIN_STROKE
        cx, cy = coords[i]
        out.append(
            f'<circle class="{" ".join(classes)}" cx="{_coord(cx)}" cy="{_coord(cy)}" '
            f'r="{_coord(RADIUS)}" fill="{fill}" stroke="{stroke}" '
            f'stroke-width="{stroke_width}"><title>{format_partition(p)}</title></circle>'
        )
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def export_tables(profiles: Sequence[ThicknessProfile], out_dir: Path) -> dict[str, Path]:
    """Write the first-occurrence, per-n summary and max-locus files.

    ``profiles`` must cover 1..N contiguously. Returns the written paths
    keyed by table name.
    """
    if not profiles or any(prof.n != i + 1 for i, prof in enumerate(profiles)):
        raise ValueError("profiles must cover a contiguous range starting at 1")
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    table = first_occurrences(profiles)
    first_path = out_dir / "first_occurrences.csv"
    first_path.write_text(first_occurrences_csv(table))

    lines = ["n,p(n),tau_max,|M_n|"]
    for prof in profiles:
        lines.append(f"{prof.n},{len(prof.tau)},{prof.tau_max},{len(prof.max_locus)}")
    summary_path = out_dir / "summary.csv"
    summary_path.write_text("\n".join(lines) + "\n")

    loci: dict[str, list[str]] = {}
    for n_r in table.entries.values():
        prof = profiles[n_r - 1]
        verts = enumerate_partitions(n_r)
        loci[str(n_r)] = [format_partition(verts[i]) for i in prof.max_locus]
    locus_path = out_dir / "max_locus_members.json"
    locus_path.write_text(json.dumps(loci, indent=2) + "\n")

    return {"first_occurrences": first_path, "summary": summary_path, "max_locus": locus_path}


@dataclass(frozen=True)
class LocusStats:
    """Descriptive placement statistics of a vertex set.

    Balance is largest part minus number of parts; distances are graph
    distances to the nearest antenna and to the boundary framework.
    """

    n: int
    size: int
    balance_mean: float
    balance_min: int
    balance_max: int
    antenna_distance_mean: float
    antenna_distance_min: int
    antenna_distance_max: int
    framework_distance_mean: float
    framework_distance_min: int
    framework_distance_max: int
    axis_fraction: float


def locus_statistics(
    graph: TransferGraph,
    framework: FrameworkSet,
    members: Iterable[Partition],
) -> LocusStats:
    """Placement statistics of ``members`` inside one graph."""
    if graph.n != framework.n:
        raise ValueError("graph and framework must describe the same n")
    idxs = sorted(graph.index_of(p) for p in members)
    if not idxs:
        raise ValueError("the vertex set must be nonempty")
    front = bfs_distances(graph, (graph.index_of(framework.antennas[0]),))
    rear = bfs_distances(graph, (graph.index_of(framework.antennas[1]),))
    border = bfs_distances(graph, sorted(framework.all_indices))
    axis = {graph.parts_index[p.parts] for p in self_conjugate_axis(graph.n).members}

    balances = [graph.vertices[i].largest - graph.vertices[i].length for i in idxs]
    antenna_d = [min(front[i], rear[i]) for i in idxs]
    framework_d = [border[i] for i in idxs]

    def mean(xs: list[int]) -> float:
        return sum(xs) / len(xs)

    return LocusStats(
        n=graph.n,
        size=len(idxs),
        balance_mean=mean(balances),
        balance_min=min(balances),
        balance_max=max(balances),
        antenna_distance_mean=mean(antenna_d),
        antenna_distance_min=min(antenna_d),
        antenna_distance_max=max(antenna_d),
        framework_distance_mean=mean(framework_d),
        framework_distance_min=min(framework_d),
        framework_distance_max=max(framework_d),
        axis_fraction=sum(1 for i in idxs if i in axis) / len(idxs),
    )
