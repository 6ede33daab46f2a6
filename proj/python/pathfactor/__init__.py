"""P>=3-factor existence, coveredness and uniformity for small graphs."""

import json

from ._core import (
    BudgetExhausted,
    Graph,
    GraphError,
    InconsistencyError,
    complete_bipartite,
    complete_graph,
    components,
    copies,
    covered_check_bruteforce,
    covered_check_criterion,
    cycle_graph,
    delete_edge,
    delete_vertices,
    disjoint_union,
    edge_connectivity_at_least,
    epsilon,
    find_p3_factor,
    has_perfect_matching,
    independence_number,
    is_factor_critical,
    is_uniform,
    join,
    kaneko_check,
    maximum_matching,
    min_degree,
    path_graph,
    remark1_graph,
    remark2_graph,
    sun_count,
    sun_kind,
    vertex_connectivity,
)
from . import _core


def check_thm13(g):
    return json.loads(_core._check_thm13(g))


def check_thm14(g, k=1, gamma="1/3"):
    return json.loads(_core._check_thm14(g, k, str(gamma)))


def analyze(g, budget=0):
    return json.loads(_core._analyze(g, budget))


def remark1_demo(t=0):
    return json.loads(_core._remark1_demo(t))


def remark2_demo(k=1, b=1):
    return json.loads(_core._remark2_demo(k, b))
