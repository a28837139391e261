"""JSON graph documents.

Format::

    {
      "format_version": "1",
      "firms": ["1", "2", ...],
      "edges": [{"a": "1", "b": "2", "w": "4"}, ...]
    }

Weights may be decimal strings ("0.25"), ratio strings ("1/4"), or JSON
numbers; numeric literals are intercepted before float conversion so every
weight is parsed exactly. Structural problems (missing fields, unknown
endpoints, unparseable weights) raise :class:`GraphDocumentError`; a
well-formed document whose graph breaks an invariant raises
:class:`~symbicost.graph.GraphValidationError` instead.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable

from .graph import SymbiosisGraph, build_graph
from .rational import parse_rational

FORMAT_VERSION = "1"


class GraphDocumentError(ValueError):
    """A document that cannot be interpreted as a graph candidate."""

    def __init__(self, problems: Iterable[str]):
        self.problems = tuple(problems)
        super().__init__("invalid graph document: " + "; ".join(self.problems))


@dataclass(frozen=True)
class GraphDocument:
    format_version: str
    firms: tuple[str, ...]
    edges: tuple[tuple[str, str, Fraction], ...]


def parse_graph_document(text: str) -> GraphDocument:
    try:
        data = json.loads(text, parse_float=Fraction)
    except json.JSONDecodeError as exc:
        raise GraphDocumentError(
            [f"not valid JSON: {exc.msg} (line {exc.lineno}, column {exc.colno})"]
        ) from exc

    problems: list[str] = []
    if not isinstance(data, dict):
        raise GraphDocumentError(["top level must be a JSON object"])

    version = data.get("format_version")
    if version is None:
        problems.append("missing field 'format_version'")
    elif version != FORMAT_VERSION:
        problems.append(f"unsupported format_version {version!r} (expected {FORMAT_VERSION!r})")

    firms_raw = data.get("firms")
    firms: tuple[str, ...] = ()
    if not isinstance(firms_raw, list) or not all(isinstance(f, str) for f in firms_raw):
        problems.append("field 'firms' must be a list of strings")
    else:
        firms = tuple(firms_raw)

    edges_raw = data.get("edges")
    edges: list[tuple[str, str, Fraction]] = []
    if not isinstance(edges_raw, list):
        problems.append("field 'edges' must be a list of objects")
    else:
        known = set(firms)
        for pos, entry in enumerate(edges_raw):
            where = f"edges[{pos}]"
            if not isinstance(entry, dict):
                problems.append(f"{where}: must be an object with keys a, b, w")
                continue
            ok = True
            for key in ("a", "b"):
                endpoint = entry.get(key)
                if not isinstance(endpoint, str):
                    problems.append(f"{where}.{key}: must be a firm id string")
                    ok = False
                elif firms and endpoint not in known:
                    problems.append(f"{where}.{key}: unknown firm id {endpoint!r}")
                    ok = False
            if "w" not in entry:
                problems.append(f"{where}.w: missing weight")
                continue
            try:
                weight = parse_rational(entry["w"])
            except (ValueError, TypeError) as exc:
                problems.append(f"{where}.w: {exc}")
                continue
            if ok:
                edges.append((entry["a"], entry["b"], weight))

    if problems:
        raise GraphDocumentError(problems)
    return GraphDocument(version, firms, tuple(edges))


def load_graph_document(path) -> GraphDocument:
    return parse_graph_document(Path(path).read_text(encoding="utf-8"))


def document_to_graph(document: GraphDocument) -> SymbiosisGraph:
    return build_graph(document.firms, document.edges)


def load_graph(path) -> SymbiosisGraph:
    """Read a document and validate it into a graph in one step."""
    return document_to_graph(load_graph_document(path))
