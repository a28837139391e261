"""Shared builders and independent oracles for the test suite.

The oracles deliberately use different algorithms than the library:
Floyd-Warshall for hop distances (the library does BFS per source) and
permutation averaging for Shapley values (the library sums over subsets).
"""

from fractions import Fraction
from itertools import permutations
from math import factorial

from symbicost import (
    CharacteristicGame,
    RandomGraphSpec,
    SymbiosisGraph,
    build_graph,
    random_graph,
)

FIG1_FIRMS = ("1", "2", "3", "4", "5", "6")
FIG1_EDGES = (
    ("1", "2", 4),
    ("1", "3", 2),
    ("1", "4", 8),
    ("2", "4", 2),
    ("3", "4", 6),
    ("4", "5", 4),
    ("4", "6", 8),
)


def fig1_graph() -> SymbiosisGraph:
    return build_graph(FIG1_FIRMS, FIG1_EDGES)


def path3_graph() -> SymbiosisGraph:
    return build_graph(("A", "B", "C"), (("A", "B", 4), ("B", "C", 2)))


def two_firm_graph(weight=10) -> SymbiosisGraph:
    return build_graph(("A", "B"), (("A", "B", weight),))


def cycle_graph(n: int, weight=1) -> SymbiosisGraph:
    firms = tuple(f"c{i}" for i in range(n))
    edges = [(firms[i], firms[(i + 1) % n], weight) for i in range(n)]
    return build_graph(firms, edges)


def complete_graph(n: int, weight=1) -> SymbiosisGraph:
    firms = tuple(f"k{i}" for i in range(n))
    edges = [
        (firms[i], firms[j], weight) for i in range(n) for j in range(i + 1, n)
    ]
    return build_graph(firms, edges)


def relabel(graph: SymbiosisGraph, order) -> SymbiosisGraph:
    """New graph whose firm k is the old firm order[k]."""
    firms = tuple(graph.firms[o] for o in order)
    weights = tuple(tuple(graph.weights[a][b] for b in order) for a in order)
    return SymbiosisGraph(firms, weights)


def seeded_graphs(count, sizes, base_seed, densities=(Fraction(3, 10), Fraction(1, 2), Fraction(7, 10), Fraction(1))):
    """Deterministic family of random graphs cycling sizes and densities."""
    for k in range(count):
        n = sizes[k % len(sizes)]
        spec = RandomGraphSpec(n, densities[k % len(densities)], seed=base_seed + k)
        yield random_graph(spec)


def floyd_warshall_hops(graph: SymbiosisGraph):
    """All-pairs hop distances without BFS."""
    n = graph.firm_count
    inf = n + 1
    dist = [
        [0 if i == j else (1 if graph.weights[i][j] else inf) for j in range(n)]
        for i in range(n)
    ]
    for k in range(n):
        dk = dist[k]
        for i in range(n):
            dik = dist[i][k]
            if dik >= inf:
                continue
            row = dist[i]
            for j in range(n):
                alt = dik + dk[j]
                if alt < row[j]:
                    row[j] = alt
    return tuple(tuple(row) for row in dist)


def shapley_by_permutations(game: CharacteristicGame):
    """Average marginal contribution over every join order."""
    n = game.firm_count
    totals = [Fraction(0)] * n
    evaluate = game.evaluate
    for order in permutations(range(n)):
        mask = 0
        previous = evaluate(0)
        for i in order:
            mask |= 1 << i
            current = evaluate(mask)
            totals[i] += current - previous
            previous = current
    orders = factorial(n)
    return tuple(t / orders for t in totals)
