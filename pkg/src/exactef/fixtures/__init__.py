"""Bundled Example 1 data: the segment X, the slab U, the map A, and the
reduction instance assembled from them."""
from __future__ import annotations

import json
from importlib import resources

NAMES = (
    "example1_X_vrep",
    "example1_X_hrep_eq10",
    "example1_U",
    "example1_mapA",
    "example1_reduction",
)


def text(name: str) -> str:
    if name not in NAMES:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(NAMES)}")
    return resources.files(__name__).joinpath(f"{name}.json").read_text()


def raw(name: str):
    return json.loads(text(name))


def load(name: str):
    """Parsed fixture: a Polyhedron, an AffineMap or a ReductionInstance."""
    from .. import io

    obj = raw(name)
    if name.endswith("mapA"):
        return io.map_from_obj(obj, name)
    if name.endswith("reduction"):
        return io.instance_from_obj(obj, name)
    return io.polyhedron_from_obj(obj, name)
