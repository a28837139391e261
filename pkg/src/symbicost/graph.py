"""Symbiosis connectivity graphs.

A graph couples an ordered list of firm identifiers with a symmetric matrix
of realized cost reductions ("utils"). An edge exists between two firms
exactly when its weight is positive. Valid graphs are loop-free, connected,
contain at least two firms, and leave no firm without an incident edge.

Distances are hop counts (number of edges on a shortest path); weights are
benefits, not lengths, so they play no role in the metric.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .rational import parse_rational

DistanceMatrix = "tuple[tuple[int, ...], ...]"


class ViolationKind(Enum):
    """Reasons a candidate graph is rejected."""

    NEGATIVE_WEIGHT = "NegativeWeight"
    SELF_LOOP = "SelfLoop"
    ASYMMETRIC_WEIGHT = "AsymmetricWeight"
    ISOLATED_FIRM = "IsolatedFirm"
    DISCONNECTED_GRAPH = "DisconnectedGraph"
    TOO_FEW_FIRMS = "TooFewFirms"
    DUPLICATE_FIRM_ID = "DuplicateFirmId"


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    message: str

    def __str__(self) -> str:
        return f"{self.kind.value}: {self.message}"


class GraphValidationError(ValueError):
    """Raised with the complete list of violations found in a candidate graph."""

    def __init__(self, violations: Iterable[Violation]):
        self.violations = tuple(violations)
        super().__init__(
            "invalid symbiosis graph: " + "; ".join(str(v) for v in self.violations)
        )


@dataclass(frozen=True)
class SymbiosisGraph:
    """Immutable, validated connectivity graph.

    Construct through :func:`build_graph` or :func:`graph_from_matrix` so the
    invariants hold. Derived views (adjacency, distances, closeness) are
    computed lazily and cached; instances are safe to share between readers.
    """

    firms: tuple[str, ...]
    weights: tuple[tuple[Fraction, ...], ...]

    @property
    def firm_count(self) -> int:
        return len(self.firms)

    def index_of(self, firm: str) -> int:
        try:
            return self.firms.index(firm)
        except ValueError:
            raise KeyError(f"unknown firm id {firm!r}") from None

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Neighbor indices per firm, ascending."""
        return tuple(
            tuple(j for j, w in enumerate(row) if w and j != i)
            for i, row in enumerate(self.weights)
        )

    @cached_property
    def edges(self) -> tuple[tuple[int, int, Fraction], ...]:
        """Undirected edge triples (i, j, weight) with i < j."""
        out = []
        for i, row in enumerate(self.weights):
            for j in range(i + 1, len(row)):
                if row[j]:
                    out.append((i, j, row[j]))
        return tuple(out)

    @cached_property
    def incident_weight(self) -> tuple[Fraction, ...]:
        """Sum of the weights on the edges at each firm."""
        sums = []
        for i, neighbors in enumerate(self.adjacency):
            row = self.weights[i]
            total = Fraction(0)
            for j in neighbors:
                total += row[j]
            sums.append(total)
        return tuple(sums)

    @cached_property
    def total_weight(self) -> Fraction:
        """Sum over all edges of their weight (each edge counted once)."""
        return sum(self.incident_weight, Fraction(0)) / 2

    @cached_property
    def distances(self) -> tuple[tuple[int, ...], ...]:
        """All-pairs hop distances via one breadth-first search per source."""
        n = self.firm_count
        adjacency = self.adjacency
        rows = []
        for source in range(n):
            dist = [-1] * n
            dist[source] = 0
            queue = [source]
            for u in queue:
                du = dist[u] + 1
                for v in adjacency[u]:
                    if dist[v] < 0:
                        dist[v] = du
                        queue.append(v)
            rows.append(tuple(dist))
        return tuple(rows)

    @cached_property
    def closeness(self) -> tuple[Fraction, ...]:
        """Closeness centrality per firm: (n - 1) / sum of hop distances."""
        n = self.firm_count
        return tuple(Fraction(n - 1, sum(row)) for row in self.distances)

    @cached_property
    def total_closeness(self) -> Fraction:
        return sum(self.closeness, Fraction(0))


def hop_distances(graph: SymbiosisGraph) -> tuple[tuple[int, ...], ...]:
    """All-pairs hop-distance matrix of a valid graph."""
    return graph.distances


def closeness_centrality(graph: SymbiosisGraph, firm: int) -> Fraction:
    """Exact closeness centrality of one firm; always in (0, 1]."""
    return graph.closeness[firm]


def closeness_vector(graph: SymbiosisGraph) -> tuple[Fraction, ...]:
    return graph.closeness


def _duplicate_id_violations(firms: Sequence[str]) -> list[Violation]:
    seen: set[str] = set()
    reported: set[str] = set()
    out = []
    for fid in firms:
        if fid in seen and fid not in reported:
            out.append(
                Violation(ViolationKind.DUPLICATE_FIRM_ID, f"firm id {fid!r} appears more than once")
            )
            reported.add(fid)
        seen.add(fid)
    return out


def _structural_violations(
    firms: Sequence[str], matrix: Sequence[Sequence[Fraction]]
) -> list[Violation]:
    """Checks that only make sense on an assembled symmetric matrix."""
    out = []
    n = len(firms)
    if n < 2:
        out.append(Violation(ViolationKind.TOO_FEW_FIRMS, f"need at least 2 firms, got {n}"))
    # presence = nonzero so that negative-weight entries, already reported
    # elsewhere, do not cascade into isolation/connectivity noise
    for i in range(n):
        if not any(matrix[i][j] != 0 for j in range(n) if j != i):
            out.append(
                Violation(ViolationKind.ISOLATED_FIRM, f"firm {firms[i]!r} has no incident edge")
            )
    if n >= 2:
        reached = [False] * n
        reached[0] = True
        queue = [0]
        for u in queue:
            for v in range(n):
                if not reached[v] and matrix[u][v] != 0:
                    reached[v] = True
                    queue.append(v)
        missing = [firms[i] for i, ok in enumerate(reached) if not ok]
        if missing:
            out.append(
                Violation(
                    ViolationKind.DISCONNECTED_GRAPH,
                    f"unreachable from firm {firms[0]!r}: {', '.join(repr(m) for m in missing)}",
                )
            )
    return out


def _entry_violations(
    firms: Sequence[str], matrix: Sequence[Sequence[Fraction]]
) -> list[Violation]:
    """Per-entry checks for a caller-supplied full matrix."""
    out = []
    n = len(firms)
    for i in range(n):
        if matrix[i][i] != 0:
            out.append(
                Violation(ViolationKind.SELF_LOOP, f"firm {firms[i]!r} has a nonzero diagonal entry")
            )
        for j in range(i + 1, n):
            if matrix[i][j] != matrix[j][i]:
                out.append(
                    Violation(
                        ViolationKind.ASYMMETRIC_WEIGHT,
                        f"weights for pair ({firms[i]!r}, {firms[j]!r}) disagree: "
                        f"{matrix[i][j]} vs {matrix[j][i]}",
                    )
                )
            if matrix[i][j] < 0 or matrix[j][i] < 0:
                out.append(
                    Violation(
                        ViolationKind.NEGATIVE_WEIGHT,
                        f"negative weight on pair ({firms[i]!r}, {firms[j]!r})",
                    )
                )
    return out


def _assemble_from_edges(firms, edges):
    """Resolve an edge list into (violations, symmetric matrix).

    A weight given in one direction is mirrored; conflicting values for the
    same unordered pair are an AsymmetricWeight violation. Zero weights mean
    "no edge". Unknown endpoint ids are a caller error, not a violation.
    """
    firm_list = tuple(str(f) for f in firms)
    n = len(firm_list)
    violations = _duplicate_id_violations(firm_list)
    index = {}
    for pos, fid in enumerate(firm_list):
        index.setdefault(fid, pos)

    directed: dict[tuple[int, int], Fraction] = {}
    conflicted: set[frozenset[int]] = set()
    loops_reported: set[int] = set()
    negatives_reported: set[frozenset[int]] = set()
    for a, b, raw in edges:
        a, b = str(a), str(b)
        if a not in index:
            raise ValueError(f"edge endpoint {a!r} is not in the firm list")
        if b not in index:
            raise ValueError(f"edge endpoint {b!r} is not in the firm list")
        i, j = index[a], index[b]
        weight = parse_rational(raw)
        if i == j:
            if i not in loops_reported:
                violations.append(
                    Violation(ViolationKind.SELF_LOOP, f"edge from firm {a!r} to itself")
                )
                loops_reported.add(i)
            continue
        pair = frozenset((i, j))
        if weight < 0 and pair not in negatives_reported:
            violations.append(
                Violation(
                    ViolationKind.NEGATIVE_WEIGHT,
                    f"edge ({a!r}, {b!r}) has negative weight {weight}",
                )
            )
            negatives_reported.add(pair)
        previous = directed.get((i, j))
        opposite = directed.get((j, i))
        clash = (previous is not None and previous != weight) or (
            opposite is not None and opposite != weight
        )
        if clash and pair not in conflicted:
            violations.append(
                Violation(
                    ViolationKind.ASYMMETRIC_WEIGHT,
                    f"pair ({a!r}, {b!r}) was given unequal weights",
                )
            )
            conflicted.add(pair)
        if previous is None:
            directed[(i, j)] = weight

    # invalid entries stay in the matrix (first value wins) so structural
    # checks see the intended topology instead of phantom isolation
    matrix = [[Fraction(0)] * n for _ in range(n)]
    for (i, j), weight in directed.items():
        if matrix[i][j] == 0:
            matrix[i][j] = weight
            matrix[j][i] = weight
    return violations, firm_list, matrix


def graph_violations(firms, edges) -> tuple[Violation, ...]:
    """Every violation in the candidate input, not just the first."""
    violations, firm_list, matrix = _assemble_from_edges(firms, edges)
    violations.extend(_structural_violations(firm_list, matrix))
    return tuple(violations)


def build_graph(firms, edges) -> SymbiosisGraph:
    """Build a validated graph from firm ids and (a, b, weight) edge triples.

    Raises :class:`GraphValidationError` carrying the full violation list.
    """
    violations, firm_list, matrix = _assemble_from_edges(firms, edges)
    violations.extend(_structural_violations(firm_list, matrix))
    if violations:
        raise GraphValidationError(violations)
    return SymbiosisGraph(firm_list, tuple(tuple(row) for row in matrix))


def graph_from_matrix(firms, weights) -> SymbiosisGraph:
    """Build a validated graph from a full square weight matrix."""
    firm_list = tuple(str(f) for f in firms)
    n = len(firm_list)
    matrix = [[parse_rational(w) for w in row] for row in weights]
    if len(matrix) != n or any(len(row) != n for row in matrix):
        raise ValueError(f"weight matrix must be {n}x{n}")
    violations = _duplicate_id_violations(firm_list)
    violations.extend(_entry_violations(firm_list, matrix))
    violations.extend(_structural_violations(firm_list, matrix))
    if violations:
        raise GraphValidationError(violations)
    return SymbiosisGraph(firm_list, tuple(tuple(row) for row in matrix))
