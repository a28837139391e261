"""Transaction-cost allocation with exact efficiency certificates.

A firm's share of the collective transaction cost is its symbiosis index
times the cost, divided by the grand-coalition value of the aggregated game
(alpha + beta). Shares are exact rationals; the rendered decimal strings are
presentation only and may not sum to the cost once rounded, which is why the
report carries an exact residual certificate.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import TYPE_CHECKING

from .games import AggregationWeights, DEFAULT_WEIGHTS, aggregated_value, grand_coalition
from .graph import SymbiosisGraph
from .rational import parse_rational, render_decimal
from .shapley import (
    DEFAULT_ENUMERATION_LIMIT,
    SymbiosisIndex,
    symbiosis_index,
    symbiosis_index_by_enumeration,
)

if TYPE_CHECKING:
    from .verify import PropertyReport

DEFAULT_PRECISION = 2


class InvalidTransactionCost(ValueError):
    """The collective transaction cost must be strictly positive."""


@dataclass(frozen=True)
class TransactionCost:
    """The collective cost to be shared; defined for the grand coalition only."""

    total: Fraction

    def __post_init__(self):
        total = parse_rational(self.total)
        if total <= 0:
            raise InvalidTransactionCost(f"transaction cost must be positive, got {total}")
        object.__setattr__(self, "total", total)


@dataclass(frozen=True)
class AllocationReport:
    """Per-firm cost shares plus the inputs and certificates behind them."""

    firms: tuple[str, ...]
    shares_exact: tuple[Fraction, ...]
    shares_rendered: tuple[str, ...]
    index: SymbiosisIndex
    tau: Fraction
    weights_used: AggregationWeights
    precision: int
    efficiency_residual: Fraction
    axiom_summary: "tuple[PropertyReport, ...] | None" = field(default=None)

    @property
    def efficiency_ok(self) -> bool:
        return self.efficiency_residual == 0


def _coerce_cost(tc) -> Fraction:
    if isinstance(tc, TransactionCost):
        return tc.total
    return TransactionCost(parse_rational(tc)).total


def _report_from_index(
    index: SymbiosisIndex,
    tau: Fraction,
    weights: AggregationWeights,
    precision: int,
) -> AllocationReport:
    divisor = weights.total  # value of the grand coalition in the aggregated game
    shares = tuple(sigma * tau / divisor for sigma in index.sigma)
    rendered = tuple(render_decimal(s, precision) for s in shares)
    residual = sum(shares, Fraction(0)) - tau
    return AllocationReport(
        firms=index.firms,
        shares_exact=shares,
        shares_rendered=rendered,
        index=index,
        tau=tau,
        weights_used=weights,
        precision=precision,
        efficiency_residual=residual,
    )


def allocate(
    graph: SymbiosisGraph,
    tc,
    weights: AggregationWeights = DEFAULT_WEIGHTS,
    precision: int = DEFAULT_PRECISION,
) -> AllocationReport:
    """Allocate the collective cost across firms via the closed-form index."""
    tau = _coerce_cost(tc)
    # normalization makes the grand aggregated value alpha + beta by construction
    assert aggregated_value(graph, grand_coalition(graph.firm_count), weights) == weights.total
    return _report_from_index(symbiosis_index(graph, weights), tau, weights, precision)


def allocate_by_enumeration(
    graph: SymbiosisGraph,
    tc,
    weights: AggregationWeights = DEFAULT_WEIGHTS,
    precision: int = DEFAULT_PRECISION,
    limit: int = DEFAULT_ENUMERATION_LIMIT,
) -> AllocationReport:
    """Cross-validation path: identical report via brute-force Shapley values."""
    tau = _coerce_cost(tc)
    index = symbiosis_index_by_enumeration(graph, weights, limit)
    return _report_from_index(index, tau, weights, precision)


def report_to_json_dict(report: AllocationReport) -> dict:
    """Spec'd machine format: exact rationals as strings, no rounded-only values."""
    out = {
        "firms": list(report.firms),
        "shares_exact": [str(s) for s in report.shares_exact],
        "shares_rendered": list(report.shares_rendered),
        "tau": str(report.tau),
        "alpha": str(report.weights_used.alpha),
        "beta": str(report.weights_used.beta),
        "index": {
            "physical": [str(v) for v in report.index.physical],
            "institutional": [str(v) for v in report.index.institutional],
            "sigma": [str(v) for v in report.index.sigma],
        },
        "efficiency_residual": str(report.efficiency_residual),
    }
    if report.axiom_summary is not None:
        out["axiom_summary"] = [r.to_json_dict() for r in report.axiom_summary]
    return out


def report_to_json(report: AllocationReport) -> str:
    return json.dumps(report_to_json_dict(report), indent=2)


def render_report_table(report: AllocationReport) -> str:
    """Aligned plain-text table with the exact shares alongside the rendered ones."""
    headers = ("firm", "share", "exact", "sigma-index")
    rows = [
        (firm, rendered, str(exact), str(sigma))
        for firm, rendered, exact, sigma in zip(
            report.firms, report.shares_rendered, report.shares_exact, report.index.sigma
        )
    ]
    widths = [max(len(h), *(len(r[k]) for r in rows)) for k, h in enumerate(headers)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    for row in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    lines.append(
        f"tau = {report.tau}  alpha = {report.weights_used.alpha}  "
        f"beta = {report.weights_used.beta}"
    )
    lines.append(f"efficiency residual = {report.efficiency_residual}")
    if report.axiom_summary is not None:
        for check in report.axiom_summary:
            verdict = "holds" if check.holds else "VIOLATED"
            lines.append(f"{check.name}: {verdict} ({check.instances_checked} instances)")
    return "\n".join(lines)
