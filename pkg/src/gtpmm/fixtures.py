"""Packaged example data: the ten-PoI walkthrough network and a tiny GTFS feed.

The walkthrough network has PoIs v01..v10 in five stages: v01/v02 are the
agents' sources, v03..v08 form three intermediate categories of two PoIs
each, and v09/v10 are the destinations. Every PoI pair on the grid is linked
by two parallel mode edges. Fares are rigged so that an edge's cost in cents
is exactly ``100 * time_min`` (:data:`WALKTHROUGH_UNIT` cents per cost
unit), which makes hand-checked totals easy to read.
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .ingest import load_edge_list, load_fare_config, resolve_fares
from .network import FareTable, MultiModalNetwork
from .planner import QueryInstance

WALKTHROUGH_UNIT = 100  # cents per walkthrough cost unit


def data_path(*parts: str) -> Path:
    """Filesystem path of a packaged data file."""
    return Path(resources.files("gtpmm").joinpath("data", *parts))


def walkthrough_fare_table() -> FareTable:
    return resolve_fares(load_fare_config(data_path("walkthrough_fares.csv")))


def walkthrough_network() -> MultiModalNetwork:
    """The walkthrough network (10 PoIs, 16 links, 32 mode edges)."""
    return load_edge_list(data_path("walkthrough_edges.csv"), walkthrough_fare_table())


def walkthrough_poi(label: str) -> int:
    """Internal id for a walkthrough label like ``"v3"`` or ``"v10"``."""
    return int(label.lstrip("v")) - 1  # external ids v01..v10 sort in order


def walkthrough_instance() -> QueryInstance:
    """Two agents (v1 -> v10, v2 -> v9) through categories {v3,v4}, {v5,v6}, {v7,v8}."""
    v = walkthrough_poi
    return QueryInstance(
        agents=[(v("v1"), v("v10")), (v("v2"), v("v9"))],
        categories=[[v("v3"), v("v4")], [v("v5"), v("v6")], [v("v7"), v("v8")]],
    )


def default_fare_ranges():
    """Seven-mode fare bands covering the standard GTFS transit modes."""
    return load_fare_config(data_path("default_fares.csv"))


def gtfs_minimal_dir() -> Path:
    """Three stops on one bus trip; yields edges of 5 and 7 minutes."""
    return data_path("gtfs_minimal")
