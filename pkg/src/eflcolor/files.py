"""Line-oriented text formats for instances, colorings and hypergraphs.

All three formats are diff-friendly UTF-8 text; ``#`` starts a comment and
blank lines are ignored. Serializers emit elements in stored order, so
parse/serialize round trips are lossless.

Instance file::

    n 9
    element 0 3 6
    auto-edges        # optional: complete uncovered pairs as order-2 elements

Coloring file::

    colors-used 9
    color 0 6

Hypergraph file::

    edges 3
    edge E0 : a b
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import ParseError
from .hypergraph import Quasicluster, validate_quasicluster
from .model import CliqueDecomposition, validate_decomposition


@dataclass(frozen=True)
class ColoringDoc:
    """Parsed coloring file: explicit assignment plus the declared count."""

    assignment: dict[int, int]
    colors_used: int


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            yield lineno, stripped, raw


def _int_token(token: str, lineno: int, raw: str, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        column = raw.find(token) + 1
        raise ParseError(lineno, max(column, 1), f"{what}: {token!r} is not an integer")


def parse_instance(text: str) -> CliqueDecomposition:
    """Parse and validate an instance file."""
    n: int | None = None
    elements: list[tuple[int, ...]] = []
    auto_edges = False
    for lineno, line, raw in _content_lines(text):
        tokens = line.split()
        keyword = tokens[0]
        if keyword == "n":
            if n is not None:
                raise ParseError(lineno, 1, "duplicate header line")
            if len(tokens) != 2:
                raise ParseError(lineno, 1, "header must be exactly 'n <int>'")
            n = _int_token(tokens[1], lineno, raw, "order")
        elif keyword == "element":
            if n is None:
                raise ParseError(lineno, 1, "element before the 'n <int>' header")
            if len(tokens) < 2:
                raise ParseError(lineno, 1, "element line lists at least one vertex")
            elements.append(
                tuple(_int_token(t, lineno, raw, "vertex") for t in tokens[1:])
            )
        elif keyword == "auto-edges":
            auto_edges = True
        else:
            raise ParseError(lineno, 1, f"unknown directive {keyword!r}")
    if n is None:
        raise ParseError(1, 1, "missing 'n <int>' header")
    if auto_edges:
        covered = {
            pair for elem in elements for pair in combinations(sorted(elem), 2)
        }
        elements.extend(
            pair for pair in combinations(range(n), 2) if pair not in covered
        )
    return validate_decomposition(n, elements)


def serialize_instance(d: CliqueDecomposition, comments: tuple[str, ...] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"n {d.n}")
    lines.extend(
        "element " + " ".join(str(v) for v in elem.vertices) for elem in d.elements
    )
    return "\n".join(lines) + "\n"


def parse_coloring(text: str) -> ColoringDoc:
    declared: int | None = None
    assignment: dict[int, int] = {}
    for lineno, line, raw in _content_lines(text):
        tokens = line.split()
        if tokens[0] == "colors-used":
            if len(tokens) != 2:
                raise ParseError(lineno, 1, "header must be 'colors-used <int>'")
            declared = _int_token(tokens[1], lineno, raw, "count")
        elif tokens[0] == "color":
            if len(tokens) != 3:
                raise ParseError(lineno, 1, "color line is 'color <element> <color>'")
            idx = _int_token(tokens[1], lineno, raw, "element index")
            col = _int_token(tokens[2], lineno, raw, "color index")
            if idx in assignment:
                raise ParseError(lineno, 1, f"element {idx} colored twice")
            assignment[idx] = col
        else:
            raise ParseError(lineno, 1, f"unknown directive {tokens[0]!r}")
    if declared is None:
        raise ParseError(1, 1, "missing 'colors-used <int>' header")
    return ColoringDoc(assignment, declared)


def serialize_coloring(
    coloring, colors_used: int, comments: tuple[str, ...] = ()
) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"colors-used {colors_used}")
    lines.extend(f"color {i} {c}" for i, c in enumerate(coloring))
    return "\n".join(lines) + "\n"


def parse_hypergraph(text: str) -> tuple[tuple[str, ...], Quasicluster]:
    """Parse a hypergraph file; returns edge names and the validated quasicluster."""
    declared: int | None = None
    names: list[str] = []
    edges: list[tuple[str, ...]] = []
    for lineno, line, raw in _content_lines(text):
        tokens = line.split()
        if tokens[0] == "edges":
            if len(tokens) != 2:
                raise ParseError(lineno, 1, "header must be 'edges <int>'")
            declared = _int_token(tokens[1], lineno, raw, "edge count")
        elif tokens[0] == "edge":
            if len(tokens) < 4 or tokens[2] != ":":
                raise ParseError(
                    lineno, 1, "edge line is 'edge <name> : <v1> <v2> ...'"
                )
            names.append(tokens[1])
            edges.append(tuple(tokens[3:]))
        else:
            raise ParseError(lineno, 1, f"unknown directive {tokens[0]!r}")
    if declared is None:
        raise ParseError(1, 1, "missing 'edges <int>' header")
    if declared != len(edges):
        raise ParseError(1, 1, f"header declares {declared} edges, found {len(edges)}")
    if len(set(names)) != len(names):
        raise ParseError(1, 1, "duplicate edge names")
    return tuple(names), validate_quasicluster(edges)


def serialize_hypergraph(
    h: Quasicluster,
    names: tuple[str, ...] | None = None,
    comments: tuple[str, ...] = (),
) -> str:
    if names is None:
        names = tuple(f"E{i}" for i in range(h.n))
    if len(names) != h.n:
        raise ValueError(f"{len(names)} names for {h.n} edges")
    lines = [f"# {c}" for c in comments]
    lines.append(f"edges {h.n}")
    lines.extend(
        f"edge {name} : " + " ".join(str(v) for v in edge)
        for name, edge in zip(names, h.edges)
    )
    return "\n".join(lines) + "\n"
