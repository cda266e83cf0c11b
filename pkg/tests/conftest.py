import time
from dataclasses import dataclass

import pytest

from partition_atlas import ThicknessProfile, TransferGraph, build_graph, thickness_profile

RANGE_MAX = 30


@dataclass(frozen=True)
class PipelineData:
    graphs: dict[int, TransferGraph]
    profiles: dict[int, ThicknessProfile]
    build_seconds: float


@pytest.fixture(scope="session")
def full_range() -> PipelineData:
    """Graphs and thickness profiles for n = 1..30, built once per session."""
    start = time.time()
    graphs = {}
    profiles = {}
    for n in range(1, RANGE_MAX + 1):
        g = build_graph(n)
        graphs[n] = g
        profiles[n] = thickness_profile(g)
    return PipelineData(graphs=graphs, profiles=profiles, build_seconds=time.time() - start)
