#
# tests/test_solver.py
#

import pytest
import random
from fractions import Fraction
from itertools import product
from unittest import mock

import networkx as nx

from surjvcsp import oracle
from surjvcsp.config import settings
from surjvcsp.core import INF, Assignment, Constraint, Instance
from surjvcsp.core.library import A3, GAMMA_EQ, RHO_0, RHO_LEQ, equality_reward, mu
from surjvcsp.errors import ArgumentError, NoSolutionError, ResourceGuardError
from surjvcsp.gadgets import encode_maxcut, pad_surjective
from surjvcsp.oracle import (
    brute_max_surjective,
    brute_vcsp,
    brute_vcsp_surjective,
    brute_vcsp_surjective_all,
)
from surjvcsp.results import Path, SolveStatus
from surjvcsp.solver import (
    enumerate_optimal_surjective,
    fixup_surjective,
    min_closed_enumerate,
    select_path,
    solve_surjective,
)

from corpus import (
    cycle_edges,
    mincut_instance,
    random_eds_instance,
    random_eds_relation,
    random_max_instance,
    reward_chain,
)


@pytest.fixture
def square():
    return mincut_instance(4, cycle_edges(4))


def bits(*texts):
    return [Assignment.from_string(t) for t in texts]


def test_solve_min_cut(square):
    result = solve_surjective(square)
    assert result.status is SolveStatus.OPTIMAL
    assert result.value == 2
    assert str(result.assignment) == '0001'
    assert result.path is Path.EDS_LAMBDA_FINITE
    assert result.candidates_examined == 14


def test_enumerate_min_cut(square):
    found = list(enumerate_optimal_surjective(square))
    assert len(found) == 12
    assert sorted(found) == brute_vcsp_surjective_all(square)


def test_solve_max_cut_gadget():
    instance = encode_maxcut(nx.complete_graph(3), 7)
    result = solve_surjective(instance)
    assert result.value == 4
    assert instance.evaluate(result.assignment) == 4


def test_solve_constant():
    result = solve_surjective(Instance(2, [(1, RHO_0, (1, ))]))
    assert result.value == 0
    assert result.assignment == Assignment('01')
    assert result.path is Path.EDS_LAMBDA_ZERO


def test_enumerate_leq():
    instance = Instance(2, [(1, RHO_LEQ, (1, 2))])
    assert list(enumerate_optimal_surjective(instance)) == bits('01')


def test_infeasible():
    instance = Instance(2, [(1, RHO_0, (1, )), (1, RHO_0, (2, ))])
    result = solve_surjective(instance)
    assert result.status is SolveStatus.INFEASIBLE
    assert result.value is INF
    assert result.assignment is None
    assert result.path is Path.EDS_LAMBDA_INFINITE
    assert list(enumerate_optimal_surjective(instance)) == []


def test_single_variable_is_infeasible():
    result = solve_surjective(Instance(1))
    assert result.status is SolveStatus.INFEASIBLE
    assert list(enumerate_optimal_surjective(Instance(1))) == []


def test_result_record(square):
    record = solve_surjective(square).to_record()
    assert record == {
        'status': 'optimal',
        'value': '2',
        'assignment': [0, 0, 0, 1],
        'path': 'eds-lambda-finite',
        'candidates_examined': 14,
    }


def test_select_path(square):
    assert select_path(square) == 'eds'
    assert select_path(Instance(3, [(1, mu(5).negate(), (1, 2, 3))])) == 'neg-eds'
    assert select_path(Instance(3, [(1, A3, (1, 2, 3))])) == 'brute'
    assert select_path(square, 'brute') == 'brute'


def test_select_path_errors(square):
    with pytest.raises(ArgumentError):
        select_path(square, 'fast')
    with pytest.raises(ArgumentError):
        solve_surjective(Instance(3, [(1, A3, (1, 2, 3))]), mode='eds')


def test_brute_guard(monkeypatch):
    monkeypatch.setitem(settings.config, 'brute_force_limit', 3)
    with pytest.raises(ResourceGuardError):
        solve_surjective(Instance(4, [(1, A3, (1, 2, 3))]))


def test_brute_path():
    instance = Instance(3, [(1, A3, (1, 2, 3))])
    result = solve_surjective(instance)
    assert result.path is Path.BRUTE_FORCE
    assert result.value == 0
    assert list(enumerate_optimal_surjective(instance)) == bits('011', '101', '110')


def test_neg_eds_path():
    instance = Instance(3, [(1, mu(5).negate(), (1, 2, 3)), (1, GAMMA_EQ, (1, 3))])
    result = solve_surjective(instance)
    assert result.path is Path.NEG_EDS
    assert result.value == brute_vcsp_surjective(instance).value


@pytest.mark.parametrize("seed", range(300))
def test_eds_matches_brute_force(seed):
    instance = random_eds_instance(random.Random(seed))
    result = solve_surjective(instance)
    expected = brute_vcsp_surjective(instance)
    assert (result.status, result.value) == (expected.status, expected.value)
    if result.is_optimal:
        assert result.assignment.is_surjective
        assert instance.evaluate(result.assignment) == result.value
    found = list(enumerate_optimal_surjective(instance))
    assert len(set(found)) == len(found)
    assert sorted(found) == brute_vcsp_surjective_all(instance)


@pytest.mark.parametrize("seed", range(100))
def test_neg_eds_matches_brute_force(seed):
    instance = random_eds_instance(random.Random(seed), negated=True)
    result = solve_surjective(instance)
    expected = brute_vcsp_surjective(instance)
    assert (result.status, result.value) == (expected.status, expected.value)
    found = sorted(enumerate_optimal_surjective(instance))
    assert found == brute_vcsp_surjective_all(instance)


@pytest.mark.parametrize("seed", range(60))
def test_padding_reaches_lambda_zero(seed):
    rng = random.Random(seed)
    instance = random_eds_instance(rng, n=rng.randint(1, 8))
    padded = pad_surjective(instance)
    result = solve_surjective(padded)
    assert result.path is Path.EDS_LAMBDA_ZERO
    assert result.value == brute_vcsp(instance)[0]
    assert sorted(enumerate_optimal_surjective(padded)) == brute_vcsp_surjective_all(padded)


@pytest.mark.parametrize("seed", range(20))
def test_negation_keeps_optimum(seed):
    instance = random_eds_instance(random.Random(seed))
    flipped = solve_surjective(instance.negate())
    assert flipped.value == solve_surjective(instance).value
    if flipped.is_optimal:
        assert instance.evaluate(flipped.assignment.flipped()) == flipped.value


def test_min_closed_enumerate():
    leq = Instance(2, [(1, RHO_LEQ, (1, 2))])
    assert list(min_closed_enumerate(leq)) == bits('00', '01', '11')
    assert len(list(min_closed_enumerate(Instance(2)))) == 4
    with pytest.raises(ArgumentError):
        list(min_closed_enumerate(Instance(3, [(1, A3, (1, 2, 3))])))


@pytest.mark.parametrize("seed", range(30))
def test_min_closed_enumerate_matches_brute_force(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 6)
    constraints = []
    for _ in range(rng.randint(0, 4)):
        relation = random_eds_relation(rng, rng.randint(1, 3)).feas().to_weighted()
        scope = [rng.randint(1, n) for _ in range(relation.arity)]
        constraints.append(Constraint(1, relation, scope))
    instance = Instance(n, constraints)
    everything = product((0, 1), repeat=n)
    expected = [Assignment(s) for s in everything if instance.evaluate(s) != INF]
    assert list(min_closed_enumerate(instance)) == expected


def test_fixup_small_instance_is_exact():
    chain = reward_chain(4)
    fixed = fixup_surjective(chain, Assignment('0000'), 1, Fraction(1, 2))
    assert fixed.is_surjective
    assert chain.evaluate(fixed) == 2


def test_fixup_star():
    reward = equality_reward()
    star = Instance(10, [(1, reward, (1, leaf)) for leaf in range(2, 11)])
    fixed = fixup_surjective(star, Assignment('0' * 10), 1, Fraction(1, 2))
    assert str(fixed) == '0010000000'
    assert star.evaluate(fixed) == 8
    assert star.evaluate(fixed) >= Fraction(1, 2) * brute_max_surjective(star)[0]


def test_fixup_keeps_surjective_input():
    chain = reward_chain(10)
    s = Assignment('0000011111')
    assert fixup_surjective(chain, s, 1, Fraction(1, 2)) == s


@pytest.mark.parametrize("epsilon", [Fraction(1, 4), Fraction(1, 2)])
@pytest.mark.parametrize("seed", range(50))
def test_fixup_guarantee(seed, epsilon):
    rng = random.Random(seed)
    instance = random_max_instance(rng)
    best = max(product((0, 1), repeat=instance.num_vars), key=instance.evaluate)
    fixed = fixup_surjective(instance, best, 1, epsilon)
    assert fixed.is_surjective
    assert instance.evaluate(fixed) >= (1 - epsilon) * brute_max_surjective(instance)[0]


@pytest.mark.parametrize("epsilon", [Fraction(1, 4), Fraction(1, 2)])
@pytest.mark.parametrize("seed", range(60))
def test_fixup_relabelling(seed, epsilon, monkeypatch):
    rng = random.Random(seed)
    n = rng.randint(8, 12)
    # large enough that fix-up relabels instead of solving exactly
    instance = random_max_instance(rng, n, max_arity=2 if n * epsilon >= 4 else 1)
    sopt = brute_max_surjective(instance)[0]
    best = max(product((0, 1), repeat=n), key=instance.evaluate)
    exact = mock.Mock(side_effect=AssertionError)
    monkeypatch.setattr(oracle, 'brute_max_surjective', exact)
    fixed = fixup_surjective(instance, best, 1, epsilon)
    assert not exact.called
    assert fixed.is_surjective
    assert instance.evaluate(fixed) >= (1 - epsilon) * sopt


@pytest.mark.parametrize("r, epsilon", [(1, 0), (Fraction(1, 2), 1), (2, 1)])
def test_fixup_checks_ratio(r, epsilon):
    with pytest.raises(ArgumentError):
        fixup_surjective(reward_chain(3), Assignment('000'), r, epsilon)


def test_fixup_errors():
    with pytest.raises(ArgumentError):
        fixup_surjective(reward_chain(3), Assignment('00'), 1, Fraction(1, 2))
    with pytest.raises(ArgumentError):
        fixup_surjective(Instance(2, [(1, RHO_0, (1, ))]), Assignment('00'), 1, Fraction(1, 2))
    with pytest.raises(NoSolutionError):
        fixup_surjective(Instance(1), Assignment('0'), 1, Fraction(1, 2))
