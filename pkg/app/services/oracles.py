import logging
from collections import deque
from dataclasses import dataclass
from typing import Dict, List

import networkx as nx
import pandas as pd

from app.core.config import settings
from app.core.errors import UnknownStatisticError
from app.services.colored_group import (
    ColoredPermutation,
    apply_transposition,
    check_cap,
    coxeter_generators,
    coxeter_generators_D,
    even_signed_order,
    group_order,
    identity,
    multiply,
    reflection_generators,
    reflection_generators_D,
)
from app.utils.constants import GeneratingSet

logger = logging.getLogger(__name__)


def generators_for(genset: GeneratingSet, r: int, n: int) -> List[ColoredPermutation]:
    if genset == GeneratingSet.CoxeterG:
        return coxeter_generators(r, n)
    if genset == GeneratingSet.ReflectionsT:
        return reflection_generators(r, n)
    if genset == GeneratingSet.CoxeterD:
        return coxeter_generators_D(n)
    if genset == GeneratingSet.ReflectionsTD:
        return reflection_generators_D(n)
    raise UnknownStatisticError(f"Unknown generating set '{genset}'")


def cayley_graph(genset: GeneratingSet, r: int, n: int, cap: int = None) -> nx.DiGraph:
    """
    Right-multiplication Cayley graph, explored from the identity. Edges carry the index of the
    generator that produced them.
    """
    genset = GeneratingSet(genset)
    type_d = genset in (GeneratingSet.CoxeterD, GeneratingSet.ReflectionsTD)
    if type_d:
        r = 2
    order = even_signed_order(n) if type_d else group_order(r, n)
    label = f"D({n})" if type_d else f"G({r},{n})"
    check_cap(order, cap or settings.BFS_CAP, f"Cayley graph of {label}")

    generators = generators_for(genset, r, n)
    start = identity(r, n)
    graph = nx.DiGraph(identity=start)
    graph.add_node(start)
    frontier = deque([start])
    while frontier:
        element = frontier.popleft()
        for index, generator in enumerate(generators):
            neighbour = multiply(element, generator)
            if neighbour not in graph:
                graph.add_node(neighbour)
                frontier.append(neighbour)
            graph.add_edge(element, neighbour, generator=index)
    logger.debug(f"Cayley graph for {genset.value}: {graph.number_of_nodes()} nodes, {graph.number_of_edges()} edges")
    return graph


def bfs_lengths(genset: GeneratingSet, r: int, n: int, cap: int = None) -> Dict[ColoredPermutation, int]:
    """Geodesic distance from the identity for every element reachable by the generators."""
    graph = cayley_graph(genset, r, n, cap)
    return dict(nx.single_source_shortest_path_length(graph, graph.graph["identity"]))


def distance_histogram(distances: Dict[ColoredPermutation, int]) -> pd.Series:
    """Number of elements at each distance, indexed by distance."""
    return pd.Series(list(distances.values()), dtype="int64").value_counts().sort_index()


@dataclass(frozen=True)
class SortStep:
    letter: int
    column: int
    row: int
    distance: int

    def to_dict(self) -> dict:
        return {"letter": self.letter, "column": self.column, "row": self.row, "distance": self.distance}


def sor_graph_trace(pi: ColoredPermutation) -> List[SortStep]:
    """
    Sort on the comb graph: for j = n, ..., 1 find letter j at column i and row d = -z_i, travel
    j - i when d = 0 and i + j - 2 + d otherwise, then put j in place with (i^d j).
    """
    current = pi
    steps = []
    for j in range(pi.n, 0, -1):
        column = current.positions[j - 1]
        row = (-current.colors[column - 1]) % pi.r
        distance = j - column if row == 0 else column + j - 2 + row
        steps.append(SortStep(j, column, row, distance))
        if distance:
            current = apply_transposition(current, column, row, j)
    return steps


def sor_graph_oracle(pi: ColoredPermutation) -> int:
    return sum(step.distance for step in sor_graph_trace(pi))
