"""Constructive checkers for game properties and allocation axioms.

Each checker scans coalitions exhaustively (guarded by an enumeration limit)
and returns a :class:`PropertyReport`. A failed check carries a
counterexample holding the witness coalitions and both sides of the violated
relation, so the inequality can be reproduced by direct evaluation. Checkers
never mutate their inputs.

The module also provides a deterministic, seeded random-graph generator used
by randomized suites; its output always satisfies the graph invariants.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .allocation import AllocationReport, allocate
from .games import (
    AggregationWeights,
    CharacteristicGame,
    DEFAULT_WEIGHTS,
    add_games,
    additive_game,
    aggregated_value,
    coalition_members,
    grand_coalition,
    make_game,
    subcoalitions,
)
from .graph import SymbiosisGraph, graph_from_matrix
from .rational import parse_rational
from .shapley import EnumerationLimitExceeded, shapley_value, shapley_values

EXHAUSTIVE_LIMIT = 12
FAIRNESS_LIMIT = 10
_WEIGHT_STEPS = 12


@dataclass(frozen=True)
class Counterexample:
    """A relation between lhs and rhs that was claimed but does not hold."""

    relation: str  # "==", "<=", or ">="
    coalitions: tuple[tuple[int, ...], ...]
    lhs: Fraction
    rhs: Fraction
    note: str = ""

    def to_json_dict(self) -> dict:
        return {
            "relation": self.relation,
            "coalitions": [list(c) for c in self.coalitions],
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "note": self.note,
        }


@dataclass(frozen=True)
class PropertyReport:
    name: str
    holds: bool
    instances_checked: int
    counterexample: Counterexample | None = None

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "holds": self.holds,
            "instances_checked": self.instances_checked,
            "counterexample": None
            if self.counterexample is None
            else self.counterexample.to_json_dict(),
        }


def relation_holds(relation: str, lhs: Fraction, rhs: Fraction) -> bool:
    if relation == "==":
        return lhs == rhs
    if relation == "<=":
        return lhs <= rhs
    if relation == ">=":
        return lhs >= rhs
    raise ValueError(f"unknown relation {relation!r}")


def _guard(firm_count: int, limit: int) -> None:
    if firm_count > limit:
        raise EnumerationLimitExceeded(firm_count, limit)


def _value_table(game: CharacteristicGame, limit: int) -> list[Fraction]:
    _guard(game.firm_count, limit)
    evaluate = game.evaluate
    return [evaluate(mask) for mask in range(1 << game.firm_count)]


def check_monotonicity(
    game: CharacteristicGame, limit: int = EXHAUSTIVE_LIMIT
) -> PropertyReport:
    """No coalition loses value when it grows: f(S) <= f(T) for S inside T."""
    table = _value_table(game, limit)
    checked = 0
    for t in range(1 << game.firm_count):
        vt = table[t]
        for s in subcoalitions(t):
            if s == t:
                continue
            checked += 1
            if table[s] > vt:
                witness = Counterexample(
                    "<=", (coalition_members(s), coalition_members(t)), table[s], vt
                )
                return PropertyReport("monotonicity", False, checked, witness)
    return PropertyReport("monotonicity", True, checked)


def check_superadditivity(
    game: CharacteristicGame, limit: int = EXHAUSTIVE_LIMIT
) -> PropertyReport:
    """Disjoint coalitions never lose by merging: f(S u T) >= f(S) + f(T)."""
    table = _value_table(game, limit)
    full = grand_coalition(game.firm_count)
    checked = 0
    for s in range(1, full + 1):
        for t in subcoalitions(full & ~s):
            if not t or t < s:
                continue
            checked += 1
            joint, split = table[s | t], table[s] + table[t]
            if joint < split:
                witness = Counterexample(
                    ">=", (coalition_members(s), coalition_members(t)), joint, split
                )
                return PropertyReport("superadditivity", False, checked, witness)
    return PropertyReport("superadditivity", True, checked)


def check_convexity(
    game: CharacteristicGame,
    limit: int = EXHAUSTIVE_LIMIT,
    require_equality: bool = False,
) -> PropertyReport:
    """Supermodularity over all coalition pairs; optionally exact equality."""
    table = _value_table(game, limit)
    size = 1 << game.firm_count
    relation = "==" if require_equality else ">="
    name = "convexity-equality" if require_equality else "convexity"
    checked = 0
    for s in range(size):
        vs = table[s]
        for t in range(s, size):
            checked += 1
            lhs = table[s | t] + table[s & t]
            rhs = vs + table[t]
            if not relation_holds(relation, lhs, rhs):
                witness = Counterexample(
                    relation, (coalition_members(s), coalition_members(t)), lhs, rhs
                )
                return PropertyReport(name, False, checked, witness)
    return PropertyReport(name, True, checked)


def _coalition_sums(amounts: Sequence[Fraction], firm_count: int) -> list[Fraction]:
    """Sum of the per-firm amounts over every coalition mask."""
    sums = [Fraction(0)] * (1 << firm_count)
    for mask in range(1, 1 << firm_count):
        low = mask & -mask
        sums[mask] = sums[mask ^ low] + amounts[low.bit_length() - 1]
    return sums


def check_core(
    game: CharacteristicGame, allocation: Sequence, limit: int = EXHAUSTIVE_LIMIT
) -> PropertyReport:
    """Allocation is efficient and no coalition is paid less than its value."""
    amounts = [parse_rational(a) for a in allocation]
    if len(amounts) != game.firm_count:
        raise ValueError("allocation length must match the firm count")
    table = _value_table(game, limit)
    full = grand_coalition(game.firm_count)
    sums = _coalition_sums(amounts, game.firm_count)
    checked = 1
    if sums[full] != table[full]:
        witness = Counterexample(
            "==", (coalition_members(full),), sums[full], table[full], note="efficiency"
        )
        return PropertyReport("core-membership", False, checked, witness)
    for mask in range(1, full):
        checked += 1
        if sums[mask] < table[mask]:
            witness = Counterexample(
                ">=", (coalition_members(mask),), sums[mask], table[mask]
            )
            return PropertyReport("core-membership", False, checked, witness)
    return PropertyReport("core-membership", True, checked)


def check_stability(report: AllocationReport, limit: int = EXHAUSTIVE_LIMIT) -> PropertyReport:
    """Exact efficiency plus: no coalition of two or more pays more than the total."""
    n = len(report.firms)
    _guard(n, limit)
    full = grand_coalition(n)
    checked = 1
    if report.efficiency_residual != 0:
        total = sum(report.shares_exact, Fraction(0))
        witness = Counterexample(
            "==", (coalition_members(full),), total, report.tau, note="efficiency residual"
        )
        return PropertyReport("stability", False, checked, witness)
    sums = _coalition_sums(report.shares_exact, n)
    for mask in range(1, full + 1):
        if mask.bit_count() < 2:
            continue
        checked += 1
        if sums[mask] > report.tau:
            witness = Counterexample(
                "<=", (coalition_members(mask),), sums[mask], report.tau
            )
            return PropertyReport("stability", False, checked, witness)
    return PropertyReport("stability", True, checked)


def _check_symmetry(
    graph: SymbiosisGraph, shares: Sequence[Fraction], weights: AggregationWeights
) -> PropertyReport:
    n = graph.firm_count
    game = make_game(graph, "aggregated", weights)
    table = [game.evaluate(mask) for mask in range(1 << n)]
    full = grand_coalition(n)
    checked = 0
    for i in range(n):
        bi = 1 << i
        for j in range(i + 1, n):
            bj = 1 << j
            rest = full & ~(bi | bj)
            checked += 1
            interchangeable = all(table[s | bi] == table[s | bj] for s in subcoalitions(rest))
            if interchangeable and shares[i] != shares[j]:
                witness = Counterexample("==", ((i,), (j,)), shares[i], shares[j])
                return PropertyReport("symmetry", False, checked, witness)
    return PropertyReport("symmetry", True, checked)


def _check_dummy_player(
    graph: SymbiosisGraph, tau: Fraction, weights: AggregationWeights, limit: int
) -> PropertyReport:
    """Dummy firms pay in proportion to their standalone value.

    Valid graphs cannot contain a dummy (every firm has a positive incident
    edge), so the axiom is exercised on synthetic games: an additive game
    built from the aggregated singleton values, and the aggregated game
    extended with one extra all-dummy firm.
    """
    n = graph.firm_count
    singles = [aggregated_value(graph, 1 << i, weights) for i in range(n)]
    additive = additive_game(singles)
    values = shapley_values(additive, limit)
    grand_total = additive.grand_value()
    checked = 0
    for i in range(n):
        checked += 1
        share = values[i] * tau / grand_total
        expected = singles[i] * tau / grand_total
        if share != expected:
            witness = Counterexample("==", ((i,),), share, expected, note="additive game")
            return PropertyReport("dummy-player", False, checked, witness)

    base_full = grand_coalition(n)
    standalone = singles[0]
    sigma = make_game(graph, "aggregated", weights).evaluate

    def extended(mask: int) -> Fraction:
        value = sigma(mask & base_full)
        if mask >> n & 1:
            value += standalone
        return value

    ext_game = CharacteristicGame(n + 1, "synthetic", extended)
    checked += 1
    dummy_value = shapley_value(ext_game, n, limit + 1)
    share = dummy_value * tau / ext_game.grand_value()
    expected = extended(1 << n) * tau / ext_game.grand_value()
    if share != expected:
        witness = Counterexample("==", ((n,),), share, expected, note="extended game")
        return PropertyReport("dummy-player", False, checked, witness)
    return PropertyReport("dummy-player", True, checked)


def _check_additivity(
    graph: SymbiosisGraph,
    tau: Fraction,
    weights: AggregationWeights,
    partner_pairs: int,
    partner_seed: int,
    limit: int,
) -> PropertyReport:
    """Share in the pointwise-summed game equals the sum of the separate shares.

    The identity requires the two institutions to carry the same cost per
    unit of game value; since both aggregated games are normalized to
    alpha + beta, the partner cost is taken equal to tau.
    """
    n = graph.firm_count
    base = allocate(graph, tau, weights)
    sigma = make_game(graph, "aggregated", weights)
    checked = 0
    for k in range(partner_pairs):
        spec = RandomGraphSpec(n, Fraction(3, 5), seed=partner_seed + k)
        partner = random_graph(spec, firms=graph.firms)
        partner_report = allocate(partner, tau, weights)
        summed = add_games(sigma, make_game(partner, "aggregated", weights))
        summed_shapley = shapley_values(summed, limit)
        summed_grand = summed.grand_value()
        for i in range(n):
            checked += 1
            combined = summed_shapley[i] * (tau + tau) / summed_grand
            separate = base.shares_exact[i] + partner_report.shares_exact[i]
            if combined != separate:
                witness = Counterexample(
                    "==", ((i,),), combined, separate, note=f"partner seed {spec.seed}"
                )
                return PropertyReport("additivity", False, checked, witness)
    return PropertyReport("additivity", True, checked)


def check_fairness_axioms(
    graph: SymbiosisGraph,
    tc,
    weights: AggregationWeights = DEFAULT_WEIGHTS,
    *,
    partner_pairs: int = 3,
    partner_seed: int = 0,
    limit: int = FAIRNESS_LIMIT,
) -> list[PropertyReport]:
    """Efficiency, symmetry, dummy-player and additivity on a concrete graph."""
    _guard(graph.firm_count, limit)
    report = allocate(graph, tc, weights)
    efficiency = PropertyReport("efficiency", report.efficiency_residual == 0, 1)
    if not efficiency.holds:
        total = sum(report.shares_exact, Fraction(0))
        witness = Counterexample(
            "==", (coalition_members(grand_coalition(graph.firm_count)),), total, report.tau
        )
        efficiency = PropertyReport("efficiency", False, 1, witness)
    return [
        efficiency,
        _check_symmetry(graph, report.shares_exact, weights),
        _check_dummy_player(graph, report.tau, weights, limit),
        _check_additivity(graph, report.tau, weights, partner_pairs, partner_seed, limit),
    ]


class InfeasibleSpec(ValueError):
    """The generator parameters cannot yield a valid graph."""


@dataclass(frozen=True)
class RandomGraphSpec:
    """Deterministic recipe for a random connected graph."""

    firm_count: int
    edge_density: Fraction = Fraction(1, 2)
    weight_low: Fraction = Fraction(1)
    weight_high: Fraction = Fraction(9)
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "edge_density", parse_rational(self.edge_density))
        object.__setattr__(self, "weight_low", parse_rational(self.weight_low))
        object.__setattr__(self, "weight_high", parse_rational(self.weight_high))
        if self.firm_count < 2:
            raise InfeasibleSpec(f"need at least 2 firms, got {self.firm_count}")
        if not 0 < self.edge_density <= 1:
            raise InfeasibleSpec(f"edge density must be in (0, 1], got {self.edge_density}")
        if self.weight_low <= 0 or self.weight_high < self.weight_low:
            raise InfeasibleSpec(
                f"weight range must satisfy 0 < low <= high, got "
                f"[{self.weight_low}, {self.weight_high}]"
            )


def random_graph(spec: RandomGraphSpec, firms: Sequence[str] | None = None) -> SymbiosisGraph:
    """Seeded random connected graph; identical spec yields an identical graph.

    A random spanning tree guarantees connectivity, then extra edges are
    sampled up to the density target (densities below the tree minimum are
    clamped up to it).
    """
    n = spec.firm_count
    if firms is None:
        firms = tuple(f"f{i + 1}" for i in range(n))
    elif len(firms) != n:
        raise ValueError("firm id list must match the firm count")
    rng = random.Random(spec.seed)
    chosen = [(rng.randrange(i), i) for i in range(1, n)]
    target = max(n - 1, round(spec.edge_density * (n * (n - 1) // 2)))
    if target > n - 1:
        tree = set(chosen)
        pool = [
            (i, j) for i in range(n) for j in range(i + 1, n) if (i, j) not in tree
        ]
        chosen.extend(rng.sample(pool, target - (n - 1)))
    span = spec.weight_high - spec.weight_low
    matrix = [[Fraction(0)] * n for _ in range(n)]
    for i, j in chosen:
        w = spec.weight_low
        if span:
            w += span * Fraction(rng.randint(0, _WEIGHT_STEPS), _WEIGHT_STEPS)
        matrix[i][j] = w
        matrix[j][i] = w
    return graph_from_matrix(firms, matrix)
