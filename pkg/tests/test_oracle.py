#
# tests/test_oracle.py
#

import pytest

import networkx as nx
import numpy as np

from surjvcsp.config import settings
from surjvcsp.core import INF, Assignment, Instance
from surjvcsp.core.library import RHO_0, RHO_1
from surjvcsp.errors import ArgumentError, ResourceGuardError
from surjvcsp.gmc import DenseTable, GmcInstance
from surjvcsp.oracle import (
    brute_gmc,
    brute_gmc_alpha,
    brute_max_surjective,
    brute_maxcut,
    brute_min_distance,
    brute_vcsp,
    brute_vcsp_surjective,
    brute_vcsp_surjective_all,
)
from surjvcsp.results import Path, SolveStatus

from corpus import cycle_edges, mincut_instance, nand_triangle, reward_chain, zero_f


def test_surjective_min_cut():
    result = brute_vcsp_surjective(mincut_instance(4, cycle_edges(4)))
    assert result.value == 2
    assert result.assignment == Assignment('0001')
    assert result.path is Path.BRUTE_FORCE
    assert result.candidates_examined == 14


def test_surjective_single_variable():
    result = brute_vcsp_surjective(Instance(1))
    assert result.status is SolveStatus.INFEASIBLE
    assert result.candidates_examined == 0
    assert brute_vcsp_surjective_all(Instance(1)) == []


def test_surjective_without_constraints():
    assert brute_vcsp_surjective(Instance(2)).value == 0
    assert brute_vcsp_surjective_all(Instance(2)) == [Assignment('01'), Assignment('10')]


def test_plain_minimum():
    assert brute_vcsp(Instance(2, [(1, RHO_1, (1, ))])) == (0, Assignment('10'))
    infeasible = Instance(1, [(1, RHO_0, (1, )), (1, RHO_1, (1, ))])
    assert brute_vcsp(infeasible) == (INF, None)


def test_gmc():
    value, solutions = brute_gmc(nand_triangle())
    assert value == 2
    assert len(solutions) == 5
    blocked = GmcInstance.build(2, [(1, 2, 1)], DenseTable(2, [0, INF, INF, INF]))
    assert brute_gmc(blocked) == (INF, [])
    assert brute_gmc_alpha(blocked, 2) == []


def test_gmc_alpha():
    square = GmcInstance.build(4, cycle_edges(4), zero_f(4))
    assert len(brute_gmc_alpha(square, 1)) == 12
    assert len(brute_gmc_alpha(square, 2)) == 14
    with pytest.raises(ArgumentError):
        brute_gmc_alpha(square, 0)


def test_max_surjective():
    assert brute_max_surjective(reward_chain(4))[0] == 2
    assert brute_max_surjective(Instance(1)) == (None, None)
    with pytest.raises(ArgumentError):
        brute_max_surjective(Instance(2, [(1, RHO_0, (1, ))]))


def test_min_distance():
    assert brute_min_distance([[1, 1]]) == 2
    assert brute_min_distance([[1, 1, 0], [0, 1, 1]]) == 3
    assert brute_min_distance(np.eye(2, dtype=int)) is None


@pytest.mark.parametrize("graph, expected", [
    (nx.complete_graph(3), 2),
    (nx.cycle_graph(4), 4),
    (nx.path_graph(3), 2),
])
def test_maxcut(graph, expected):
    assert brute_maxcut(graph) == expected


def test_guards(monkeypatch):
    monkeypatch.setitem(settings.config, 'brute_force_limit', 2)
    monkeypatch.setitem(settings.config, 'gmc_brute_limit', 2)
    with pytest.raises(ResourceGuardError):
        brute_vcsp(Instance(3))
    with pytest.raises(ResourceGuardError):
        brute_vcsp_surjective(Instance(3))
    with pytest.raises(ResourceGuardError):
        brute_gmc(nand_triangle())
    with pytest.raises(ResourceGuardError):
        brute_maxcut(nx.complete_graph(3))
