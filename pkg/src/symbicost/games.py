"""Coalitions and the characteristic games induced by a symbiosis graph.

A coalition is a plain ``int`` bitmask over firm indices: bit ``i`` set means
firm ``i`` is a member. Three game families are built on a graph:

* physical — total weight of the edges inside the coalition (0 for
  coalitions of size <= 1),
* institutional — sum of the members' closeness centralities,
* aggregated — ``alpha * physical/physical(grand) + beta *
  institutional/institutional(grand)``.

All evaluators are pure; every game maps the empty coalition to 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Sequence

from .graph import SymbiosisGraph
from .rational import parse_rational

EMPTY_COALITION = 0


def coalition_of(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def coalition_members(mask: int) -> tuple[int, ...]:
    members = []
    i = 0
    while mask:
        if mask & 1:
            members.append(i)
        mask >>= 1
        i += 1
    return tuple(members)


def coalition_size(mask: int) -> int:
    return mask.bit_count()


def grand_coalition(firm_count: int) -> int:
    return (1 << firm_count) - 1


def all_coalitions(firm_count: int) -> range:
    """Every coalition mask, empty through grand."""
    return range(1 << firm_count)


def subcoalitions(mask: int) -> Iterator[int]:
    """Every submask of ``mask``, descending, ending with the empty mask."""
    sub = mask
    while True:
        yield sub
        if not sub:
            return
        sub = (sub - 1) & mask


@dataclass(frozen=True)
class AggregationWeights:
    """Positive weights combining the normalized physical and institutional games."""

    alpha: Fraction = Fraction(1)
    beta: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "alpha", parse_rational(self.alpha))
        object.__setattr__(self, "beta", parse_rational(self.beta))
        if self.alpha <= 0 or self.beta <= 0:
            raise ValueError(
                f"aggregation weights must be positive, got ({self.alpha}, {self.beta})"
            )

    @property
    def total(self) -> Fraction:
        return self.alpha + self.beta


DEFAULT_WEIGHTS = AggregationWeights()

GAME_KINDS = (
    "physical",
    "institutional",
    "aggregated",
    "normalized-physical",
    "normalized-institutional",
)


@dataclass(frozen=True)
class CharacteristicGame:
    """A firm count plus a pure coalition evaluator."""

    firm_count: int
    kind: str
    evaluate: Callable[[int], Fraction]

    def grand_value(self) -> Fraction:
        return self.evaluate(grand_coalition(self.firm_count))


def physical_value(graph: SymbiosisGraph, coalition: int) -> Fraction:
    """Total weight of edges with both endpoints in the coalition.

    Unordered pairs are counted once, which is why no 1/2 correction
    appears here.
    """
    members = coalition_members(coalition)
    total = Fraction(0)
    weights = graph.weights
    for pos, i in enumerate(members):
        row = weights[i]
        for j in members[pos + 1 :]:
            w = row[j]
            if w:
                total += w
    return total


def institutional_value(graph: SymbiosisGraph, coalition: int) -> Fraction:
    """Sum of the members' closeness centralities."""
    closeness = graph.closeness
    total = Fraction(0)
    for i in coalition_members(coalition):
        total += closeness[i]
    return total


def aggregated_value(
    graph: SymbiosisGraph, coalition: int, weights: AggregationWeights = DEFAULT_WEIGHTS
) -> Fraction:
    """Weighted sum of the two normalized games; the grand coalition maps to alpha + beta."""
    return (
        weights.alpha * physical_value(graph, coalition) / graph.total_weight
        + weights.beta * institutional_value(graph, coalition) / graph.total_closeness
    )


def make_game(
    graph: SymbiosisGraph, kind: str, weights: AggregationWeights = DEFAULT_WEIGHTS
) -> CharacteristicGame:
    """Package one of the graph games as a reusable evaluator."""
    if kind == "physical":
        evaluate = lambda mask: physical_value(graph, mask)  # noqa: E731
    elif kind == "institutional":
        evaluate = lambda mask: institutional_value(graph, mask)  # noqa: E731
    elif kind == "normalized-physical":
        total = graph.total_weight
        evaluate = lambda mask: physical_value(graph, mask) / total  # noqa: E731
    elif kind == "normalized-institutional":
        total = graph.total_closeness
        evaluate = lambda mask: institutional_value(graph, mask) / total  # noqa: E731
    elif kind == "aggregated":
        evaluate = lambda mask: aggregated_value(graph, mask, weights)  # noqa: E731
    else:
        raise ValueError(f"unknown game kind {kind!r}; expected one of {GAME_KINDS}")
    return CharacteristicGame(graph.firm_count, kind, evaluate)


def synthetic_game(firm_count: int, evaluate: Callable[[int], Fraction]) -> CharacteristicGame:
    """Wrap an arbitrary evaluator; the empty coalition must map to 0."""
    if evaluate(EMPTY_COALITION) != 0:
        raise ValueError("a characteristic game must assign 0 to the empty coalition")
    return CharacteristicGame(firm_count, "synthetic", evaluate)


def additive_game(values: Sequence) -> CharacteristicGame:
    """Game where every coalition is worth the sum of its members' values."""
    amounts = tuple(parse_rational(v) for v in values)

    def evaluate(mask: int) -> Fraction:
        total = Fraction(0)
        for i in coalition_members(mask):
            total += amounts[i]
        return total

    return CharacteristicGame(len(amounts), "synthetic", evaluate)


def add_games(first: CharacteristicGame, second: CharacteristicGame) -> CharacteristicGame:
    """Pointwise sum of two games over the same firm set."""
    if first.firm_count != second.firm_count:
        raise ValueError("games must share a firm set to be added")
    f, h = first.evaluate, second.evaluate
    return CharacteristicGame(first.firm_count, "synthetic", lambda mask: f(mask) + h(mask))


def scale_game(game: CharacteristicGame, factor) -> CharacteristicGame:
    """Pointwise scaling of a game by a rational factor."""
    c = parse_rational(factor)
    f = game.evaluate
    return CharacteristicGame(game.firm_count, "synthetic", lambda mask: c * f(mask))
