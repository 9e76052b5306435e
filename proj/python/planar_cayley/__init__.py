"""Python front end for the pcl library. JSON results come back as dicts."""

import json

from . import _core
from ._core import (
    PclError,
    catalog,
    classify_ends,
    cut_space_rank,
    default_radii,
    element_names,
    group_order,
    orientation_table,
    vertex_connectivity,
)

__all__ = [
    "PclError",
    "ball",
    "catalog",
    "cayley_graph",
    "classify_ends",
    "corpus_verify",
    "cut_space_rank",
    "default_radii",
    "element_names",
    "group_order",
    "orientation_table",
    "planarity",
    "vertex_connectivity",
]


def cayley_graph(presentation, gens):
    return json.loads(_core.cayley_json(presentation, gens))


def ball(family, radius):
    return json.loads(_core.ball_json(family, radius))


def planarity(presentation, gens):
    return json.loads(_core.planarity_json(presentation, gens))


def corpus_verify(case=""):
    return json.loads(_core.corpus_json(case))
