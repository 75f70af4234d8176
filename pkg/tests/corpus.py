#
# tests/corpus.py
#
"""
Fixture relations, instances and seeded random generators shared by the
test modules.
"""

from fractions import Fraction
from itertools import product

import networkx as nx

from surjvcsp.core import INF, Constraint, Instance, Relation, WeightedRelation
from surjvcsp.core.library import GAMMA_EQ, equality_reward
from surjvcsp.gmc import DenseTable, GmcInstance
from surjvcsp.utils import mask_of


def cycle_edges(n, weight=1):
    return [(i, i % n + 1, weight) for i in range(1, n + 1)]


def path_edges(n, weight=1):
    return [(i, i + 1, weight) for i in range(1, n)]


def mincut_instance(n, edges):
    """Soft equality on every edge: the surjective optimum is the min cut."""
    return Instance(n, [Constraint(w, GAMMA_EQ, (u, v)) for u, v, w in edges])


def zero_f(n):
    return DenseTable.zero(n)


def nand_triangle():
    """Unit triangle with f = 1 exactly when {1, 2} is inside X."""
    f = DenseTable.from_mapping(3, {0b011: 1, 0b111: 1})
    return GmcInstance.build(3, cycle_edges(3), f)


def reward_chain(n):
    reward = equality_reward()
    return Instance(n, [Constraint(1, reward, (i, i + 1)) for i in range(1, n)])


def all_relations(arity):
    """Every crisp relation of the given arity, as member sets."""
    tuples = list(product((0, 1), repeat=arity))
    for mask in range(1 << len(tuples)):
        yield Relation(arity, (t for i, t in enumerate(tuples) if mask >> i & 1))


def random_relation(rng, arity, density=0.5):
    rows = product((0, 1), repeat=arity)
    return Relation(arity, (x for x in rows if rng.random() < density))


def random_table(rng, arity, infinite=0.25):
    return WeightedRelation(arity, [
        INF if rng.random() < infinite else rng.randint(0, 4)
        for _ in range(1 << arity)
    ])


def _downward_closure(k, tops):
    return {
        bits for bits in product((0, 1), repeat=k)
        if any(all(b <= t for b, t in zip(bits, top)) for top in tops)
    }


def random_eds_relation(rng, arity, shift=True):
    """
    A weighted relation whose Feas and Opt are downsets on a random
    grouping of the coordinates, with duplicate coordinates per group.
    """
    k = rng.randint(1, arity)
    group = [rng.randrange(k) for _ in range(arity)]
    feas = _downward_closure(k, [
        tuple(rng.randint(0, 1) for _ in range(k)) for _ in range(rng.randint(1, 3))
    ])
    opt = _downward_closure(k, [rng.choice(sorted(feas)) for _ in range(rng.randint(1, 2))])
    base = rng.choice([0, 0, 1, Fraction(1, 2)]) if shift else 0
    table = [INF] * (1 << arity)
    for y in product((0, 1), repeat=k):
        if y not in feas:
            continue
        x = tuple(y[group[j]] for j in range(arity))
        index = int(''.join(map(str, x)), 2)
        table[index] = base if y in opt else base + rng.randint(1, 4)
    return WeightedRelation(arity, table)


def random_eds_instance(rng, n=None, negated=False, max_arity=3):
    n = n or rng.randint(2, 12)
    pool = [
        random_eds_relation(rng, rng.randint(1, max_arity))
        for _ in range(rng.randint(1, 3))
    ]
    if negated:
        pool = [gamma.negate() for gamma in pool]
    constraints = []
    # enough constraints to connect larger instances
    for _ in range(rng.randint(max(1, n // 2), n + 3)):
        gamma = rng.choice(pool)
        scope = tuple(rng.randint(1, n) for _ in range(gamma.arity))
        weight = rng.choice([0, 1, 1, 2, 3, Fraction(1, 2)])
        constraints.append(Constraint(weight, gamma, scope))
    return Instance(n, constraints)


def random_max_instance(rng, n=None, max_arity=2):
    n = n or rng.randint(2, 8)
    constraints = []
    for _ in range(rng.randint(1, 6)):
        arity = rng.randint(1, max_arity)
        gamma = WeightedRelation(arity, [rng.randint(0, 3) for _ in range(1 << arity)])
        scope = tuple(rng.randint(1, n) for _ in range(arity))
        constraints.append(Constraint(rng.randint(1, 2), gamma, scope))
    return Instance(n, constraints)


def random_superadditive(rng, n, infinite=0.0):
    """
    A nonnegative combination of the indicators [T subset of X] (each
    superadditive) plus a nonnegative modular part.
    """
    terms = []
    for _ in range(rng.randint(0, 4)):
        size = rng.randint(1, n)
        T = mask_of(rng.sample(range(1, n + 1), size))
        weight = INF if rng.random() < infinite else rng.randint(1, 3)
        terms.append((T, weight))
    modular = [rng.randint(0, 2) for _ in range(n)]
    table = []
    for x in range(1 << n):
        value = sum(c for i, c in enumerate(modular) if x >> i & 1)
        for T, weight in terms:
            if x & T == T:
                value = value + weight
        table.append(value)
    return DenseTable(n, table)


def random_graph(rng, n, p=0.5, connected=True):
    """Edge list over 1..n with weights in 1..3."""
    edges = {}
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            if rng.random() < p:
                edges[u, v] = rng.randint(1, 3)
    if connected:
        for u in range(1, n):
            edges.setdefault((u, u + 1), rng.randint(1, 3))
    return [(u, v, w) for (u, v), w in sorted(edges.items())]


def random_gmc(rng, n=None, infinite=0.0, connected=True):
    n = n or rng.randint(2, 8)
    return GmcInstance.build(n, random_graph(rng, n, connected=connected),
                             random_superadditive(rng, n, infinite))


def random_nx_graph(rng, n):
    """A networkx graph on 1..n without isolated vertices."""
    graph = nx.gnp_random_graph(n, 0.5, seed=rng.randrange(1 << 30))
    graph = nx.relabel_nodes(graph, {v: v + 1 for v in graph.nodes})
    for v in list(graph.nodes):
        if graph.degree(v) == 0:
            graph.add_edge(v, v % n + 1)
    return graph
