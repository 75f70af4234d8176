#
# surjvcsp/mincut.py
#
"""
Weighted undirected graphs and their cut function.

Solutions are vertex sets X with 0 < |X| < n; the cut value g(X) is the
total weight of edges with exactly one end in X. Every listing is
returned in canonical order (size, then sorted members).
"""

import logging
from fractions import Fraction

import networkx as nx
from networkx.utils import UnionFind

from surjvcsp.config import settings
from surjvcsp.core import INF, as_value, value_sum
from surjvcsp.errors import ArgumentError, DisconnectedGraphError
from surjvcsp.utils import canonical_key, canonical_sorted, mask_of, subset_of

logger = logging.getLogger(__name__)


class Graph:
    """
    An undirected graph on vertices 1..n with positive finite weights.

    The constructor normalizes its edge list: parallel edges are summed,
    zero weights dropped, and the two ends of every infinite edge are
    identified. ``groups[i - 1]`` holds the original vertices merged into
    vertex i; vertices are numbered by their smallest original member.
    """

    def __init__(self, n, edges=()):
        if not isinstance(n, int) or n < 1:
            raise ArgumentError("a graph needs at least one vertex")
        edges = [(u, v, as_value(w)) for u, v, w in edges]
        for u, v, w in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ArgumentError("edge (%r, %r) outside [1, %d]" % (u, v, n))
            if u == v:
                raise ArgumentError("self-loop at vertex %r" % u)
            if w < 0:
                raise ArgumentError("negative edge weight %s" % w)

        merged = UnionFind(range(1, n + 1))
        for u, v, w in edges:
            if w is INF:
                merged.union(u, v)
        groups = sorted((frozenset(g) for g in merged.to_sets()), key=min)
        index = {v: i for i, group in enumerate(groups, 1) for v in group}

        graph = nx.Graph()
        graph.add_nodes_from(range(1, len(groups) + 1))
        for u, v, w in edges:
            a, b = index[u], index[v]
            if w is INF or a == b or w == 0:
                continue
            if graph.has_edge(a, b):
                graph[a][b]['weight'] += w
            else:
                graph.add_edge(a, b, weight=w)

        self._setup(graph, tuple(groups), n)

    @classmethod
    def _from_parts(cls, graph, groups, original_size):
        self = cls.__new__(cls)
        self._setup(graph, groups, original_size)
        return self

    def _setup(self, graph, groups, original_size):
        self._graph = graph
        self.groups = groups
        self.original_size = original_size
        self._index = {v: i for i, group in enumerate(groups, 1) for v in group}

    def __repr__(self):
        return "<Graph n=%d edges=%d>" % (self.n, self._graph.number_of_edges())

    @property
    def n(self):
        return len(self.groups)

    @property
    def vertices(self):
        return frozenset(range(1, self.n + 1))

    @property
    def nx_graph(self):
        """A copy of the underlying networkx graph."""
        return self._graph.copy()

    def edges(self):
        return sorted((min(u, v), max(u, v), d['weight'])
                      for u, v, d in self._graph.edges(data=True))

    def weight(self, u, v):
        data = self._graph.get_edge_data(u, v)
        return data['weight'] if data else Fraction(0)

    def neighbours(self, u):
        return {v: d['weight'] for v, d in self._graph[u].items()}

    def is_connected(self):
        return nx.is_connected(self._graph)

    def components(self):
        return canonical_sorted(nx.connected_components(self._graph))

    def induced(self, vertices):
        """
        Subgraph induced on ``vertices``, relabelled 1..k in increasing
        order; groups are carried along so ``expand`` still reaches the
        original vertices.
        """
        keep = sorted(vertices)
        relabel = {v: i for i, v in enumerate(keep, 1)}
        graph = nx.relabel_nodes(self._graph.subgraph(keep), relabel, copy=True)
        groups = tuple(self.groups[v - 1] for v in keep)
        return Graph._from_parts(graph, groups, self.original_size)

    def vertex_of(self, v):
        """The merged vertex holding original vertex v."""
        return self._index[v]

    def expand(self, subset):
        """Original vertices covered by a set of (merged) vertices."""
        return frozenset().union(*(self.groups[i - 1] for i in subset))

    def contract(self, subset):
        """
        Merged vertex set for a set of original vertices, or None when
        the set splits a group (and so cuts an infinite edge).
        """
        merged = frozenset(self._index[v] for v in subset)
        if self.expand(merged) != frozenset(subset):
            return None
        return merged


def cut_value(graph, subset):
    subset = frozenset(subset)
    return value_sum(
        w for u, v, w in graph.edges() if (u in subset) != (v in subset)
    )


def _min_cut_value(graph):
    if not graph.is_connected():
        return Fraction(0)
    value, _ = nx.stoer_wagner(graph._graph)
    return as_value(value)


def global_min_cut(graph):
    """
    The minimum cut value and the canonically least optimal solution.

    Raises:
        ArgumentError: fewer than two vertices
    """
    if graph.n < 2:
        raise ArgumentError("a cut needs at least two vertices")
    if not graph.is_connected():
        return Fraction(0), graph.components()[0]
    value = _min_cut_value(graph)
    best = min(enumerate_cuts_below(graph, value), key=canonical_key)
    return value, best


def _search_order(graph):
    """Vertices in breadth-first order from vertex 1, neighbours sorted."""
    order, seen = [1], {1}
    for u in order:
        for v in sorted(graph.neighbours(u)):
            if v not in seen:
                seen.add(v)
                order.append(v)
    return order


def enumerate_cuts_below(graph, budget):
    """
    All solutions X with g(X) <= budget, canonically sorted.

    Vertices are placed on vertex 1's side or the other side in
    breadth-first order; a branch dies as soon as the weight between
    already placed vertices on opposite sides exceeds the budget.

    Raises:
        ArgumentError: the budget is infinite
        DisconnectedGraphError: the graph is disconnected and too large to
            enumerate by brute force
    """
    budget = as_value(budget)
    if budget is INF:
        raise ArgumentError("cut budget must be finite")
    n = graph.n
    if n < 2 or budget < 0:
        return []

    if not graph.is_connected():
        limit = settings['cut_brute_limit']
        if n > limit:
            raise DisconnectedGraphError(
                "cut enumeration on a disconnected graph with %d > %d vertices" % (n, limit))
        logger.debug("disconnected graph, enumerating %d subsets", 2 ** n - 2)
        return [subset_of(mask) for mask in _brute_masks(graph, budget)]

    order = _search_order(graph)
    adjacency = {u: graph.neighbours(u) for u in order}
    side = {1: 0}
    found = []
    everything = graph.vertices

    def place(k, crossing):
        if k == n:
            other = frozenset(v for v, s in side.items() if s)
            if other:
                found.append(other)
                found.append(everything - other)
            return
        v = order[k]
        for s in (0, 1):
            extra = value_sum(w for u, w in adjacency[v].items()
                              if u in side and side[u] != s)
            if crossing + extra <= budget:
                side[v] = s
                place(k + 1, crossing + extra)
                del side[v]

    place(1, Fraction(0))
    return canonical_sorted(found)


def _brute_masks(graph, budget):
    full = (1 << graph.n) - 1
    edges = [(mask_of((u, )), mask_of((v, )), w) for u, v, w in graph.edges()]
    masks = []
    for mask in range(1, full):
        total = value_sum(w for a, b, w in edges if bool(mask & a) != bool(mask & b))
        if total <= budget:
            masks.append(mask)
    return sorted(masks, key=lambda m: canonical_key(subset_of(m)))


def minimal_optimal_solutions(graph):
    """
    Inclusion-minimal optimal solutions; these are pairwise disjoint. For
    a disconnected graph they are its connected components.
    """
    if graph.n < 2:
        raise ArgumentError("a cut needs at least two vertices")
    if not graph.is_connected():
        return graph.components()
    optimal = enumerate_cuts_below(graph, _min_cut_value(graph))
    return [X for X in optimal if not any(Y < X for Y in optimal)]


def optimal_cut_solutions(graph):
    """All optimal solutions of a connected graph."""
    return enumerate_cuts_below(graph, _min_cut_value(graph))
