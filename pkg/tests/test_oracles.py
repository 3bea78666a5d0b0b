import pytest

from app.core.errors import CapExceededError
from app.services.colored_group import enumerate_group, identity
from app.services.oracles import bfs_lengths, cayley_graph, distance_histogram, sor_graph_oracle, sor_graph_trace
from app.services.permutation_codes import sorting_index
from app.services.polynomial import histogram
from app.services.generating_functions import gf_length_dist
from app.utils.constants import GeneratingSet


def test_coxeter_distances_match_length_distribution():
    distances = bfs_lengths(GeneratingSet.CoxeterG, 3, 2)
    assert len(distances) == 18
    assert list(distance_histogram(distances)) == [1, 2, 3, 4, 4, 3, 1]
    assert histogram(distances.values()) == gf_length_dist(3, 2)


def test_generator_word_distance(p1, q1):
    distances = bfs_lengths(GeneratingSet.CoxeterG, 3, 4)
    assert distances[q1] == 8
    assert distances[p1] == 7


@pytest.mark.parametrize("genset, r", [
    (GeneratingSet.CoxeterG, 3),
    (GeneratingSet.ReflectionsT, 3),
    (GeneratingSet.CoxeterD, 2),
    (GeneratingSet.ReflectionsTD, 2),
])
def test_identity_is_at_distance_zero(genset, r):
    distances = bfs_lengths(genset, r, 3)
    assert distances[identity(r, 3)] == 0


def test_type_d_graph_stays_in_d():
    graph = cayley_graph(GeneratingSet.CoxeterD, 2, 4)
    assert graph.number_of_nodes() == 192
    # s_0^D, s_1, s_2, s_3
    assert graph.number_of_edges() == 192 * 4


def test_bfs_respects_cap():
    with pytest.raises(CapExceededError):
        bfs_lengths(GeneratingSet.CoxeterG, 3, 4, cap=1000)


def test_sorting_trace(p2):
    steps = sor_graph_trace(p2)
    assert [step.letter for step in steps] == [5, 4, 3, 2, 1]
    assert [step.distance for step in steps] == [10, 5, 1, 3, 2]
    assert sor_graph_oracle(p2) == 21
    assert sor_graph_oracle(identity(3, 5)) == 0


def test_sorting_oracle_agrees_on_g34():
    for pi in enumerate_group(3, 4):
        assert sor_graph_oracle(pi) == sorting_index(pi)
