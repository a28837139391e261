"""Exact Shapley values and the per-firm symbiosis index.

Two routes produce the same numbers:

* enumeration — sum over every coalition S avoiding a firm, weighted by
  |S|! (n - |S| - 1)! / n! in exact integer arithmetic; exponential, capped
  by an enumeration limit;
* closed form — in the physical game a firm's Shapley value is half the
  weight incident to it, and in the institutional game it is the firm's
  closeness centrality. The closed forms read only a matrix row and the
  centrality vector, never a coalition value, so they stay polynomial.

The symbiosis index of a firm is its Shapley value in the weighted sum of
the two normalized games.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .games import AggregationWeights, CharacteristicGame, DEFAULT_WEIGHTS, make_game
from .graph import SymbiosisGraph

DEFAULT_ENUMERATION_LIMIT = 20


class EnumerationLimitExceeded(RuntimeError):
    """Signals that a brute-force path would enumerate too many coalitions."""

    def __init__(self, firm_count: int, limit: int):
        self.firm_count = firm_count
        self.limit = limit
        super().__init__(
            f"{firm_count} firms exceed the enumeration limit of {limit}; "
            "use the closed-form path"
        )


def _guard(firm_count: int, limit: int) -> None:
    if firm_count > limit:
        raise EnumerationLimitExceeded(firm_count, limit)


def _subset_weights(n: int) -> list[Fraction]:
    """Weight of a coalition of size s joined by one more firm: s!(n-s-1)!/n!."""
    fact = [factorial(k) for k in range(n + 1)]
    return [Fraction(fact[s] * fact[n - s - 1], fact[n]) for s in range(n)]


def shapley_value(
    game: CharacteristicGame, firm: int, limit: int = DEFAULT_ENUMERATION_LIMIT
) -> Fraction:
    """Shapley value of one firm by enumeration over all coalitions avoiding it."""
    n = game.firm_count
    _guard(n, limit)
    if not 0 <= firm < n:
        raise IndexError(f"firm index {firm} out of range for {n} firms")
    weights = _subset_weights(n)
    bit = 1 << firm
    evaluate = game.evaluate
    total = Fraction(0)
    for mask in range(1 << n):
        if mask & bit:
            continue
        total += weights[mask.bit_count()] * (evaluate(mask | bit) - evaluate(mask))
    return total


def shapley_values(
    game: CharacteristicGame, limit: int = DEFAULT_ENUMERATION_LIMIT
) -> tuple[Fraction, ...]:
    """Shapley values of every firm, sharing one table of coalition values."""
    n = game.firm_count
    _guard(n, limit)
    weights = _subset_weights(n)
    evaluate = game.evaluate
    table = [evaluate(mask) for mask in range(1 << n)]
    values = []
    for firm in range(n):
        bit = 1 << firm
        total = Fraction(0)
        for mask in range(1 << n):
            if mask & bit:
                continue
            total += weights[mask.bit_count()] * (table[mask | bit] - table[mask])
        values.append(total)
    return tuple(values)


def physical_shapley(graph: SymbiosisGraph, firm: int) -> Fraction:
    """Closed-form Shapley value in the (un-normalized) physical game."""
    return graph.incident_weight[firm] / 2


def institutional_shapley(graph: SymbiosisGraph, firm: int) -> Fraction:
    """Closed-form Shapley value in the (un-normalized) institutional game."""
    return graph.closeness[firm]


@dataclass(frozen=True)
class SymbiosisIndex:
    """Per-firm index components; sigma[i] = physical[i] + institutional[i].

    The physical and institutional entries are the Shapley values in the
    normalized games, scaled by alpha and beta; the sigma entries sum to
    alpha + beta exactly.
    """

    firms: tuple[str, ...]
    physical: tuple[Fraction, ...]
    institutional: tuple[Fraction, ...]
    sigma: tuple[Fraction, ...]


def symbiosis_index(
    graph: SymbiosisGraph, weights: AggregationWeights = DEFAULT_WEIGHTS
) -> SymbiosisIndex:
    """Per-firm index via the closed forms; polynomial time and space."""
    grand_physical = graph.total_weight
    grand_closeness = graph.total_closeness
    physical = tuple(
        weights.alpha * (incident / 2) / grand_physical for incident in graph.incident_weight
    )
    institutional = tuple(weights.beta * c / grand_closeness for c in graph.closeness)
    sigma = tuple(p + q for p, q in zip(physical, institutional))
    return SymbiosisIndex(graph.firms, physical, institutional, sigma)


def symbiosis_index_by_enumeration(
    graph: SymbiosisGraph,
    weights: AggregationWeights = DEFAULT_WEIGHTS,
    limit: int = DEFAULT_ENUMERATION_LIMIT,
) -> SymbiosisIndex:
    """Same index by brute-force Shapley enumeration on the normalized games."""
    base_physical = shapley_values(make_game(graph, "normalized-physical"), limit)
    base_institutional = shapley_values(make_game(graph, "normalized-institutional"), limit)
    physical = tuple(weights.alpha * v for v in base_physical)
    institutional = tuple(weights.beta * v for v in base_institutional)
    sigma = tuple(p + q for p, q in zip(physical, institutional))
    return SymbiosisIndex(graph.firms, physical, institutional, sigma)
