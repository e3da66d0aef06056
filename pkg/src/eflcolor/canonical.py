"""The mod-n edge coloring of K_n: edge {a, b} gets color (a + b) mod n.

This assignment is a proper n-edge-coloring for every n >= 2. Its color
classes are near-perfect matchings: for odd n each class leaves exactly one
vertex unmatched; for even n the even-indexed classes leave two and the
odd-indexed classes are perfect matchings.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SelfLoopError


@dataclass(frozen=True)
class ChromaticClass:
    """Color class i: all edges {a, b} with a + b = i (mod n)."""

    index: int
    n: int
    edges: tuple[tuple[int, int], ...]
    isolated: tuple[int, ...]

    @property
    def is_perfect_matching(self) -> bool:
        return not self.isolated


@dataclass(frozen=True)
class ClassSummary:
    index: int
    edge_count: int
    isolated_count: int


def canonical_edge_color(a: int, b: int, n: int) -> int:
    """Color of edge {a, b}; symmetric, reduced mod n."""
    if a == b:
        raise SelfLoopError(f"{a} = {b}: edges need two distinct endpoints")
    _check_label(a, n)
    _check_label(b, n)
    return (a + b) % n


def chromatic_class(i: int, n: int) -> ChromaticClass:
    """All edges with endpoint sum i mod n, plus the vertices they miss.

    A vertex u is unmatched in class i exactly when its forced partner
    i - u coincides with u, i.e. when 2u = i (mod n).
    """
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    if not 0 <= i < n:
        raise ValueError(f"color index {i} outside 0..{n - 1}")
    edges = tuple(
        (a, b)
        for a in range(n)
        for b in range(a + 1, n)
        if (a + b) % n == i
    )
    isolated = tuple(u for u in range(n) if (2 * u) % n == i)
    return ChromaticClass(i, n, edges, isolated)


def class_structure_report(n: int) -> tuple[ClassSummary, ...]:
    """Per-class edge and isolated-vertex counts for all n classes."""
    return tuple(
        ClassSummary(c.index, len(c.edges), len(c.isolated))
        for c in (chromatic_class(i, n) for i in range(n))
    )


def _check_label(x: int, n: int) -> None:
    if not 0 <= x < n:
        raise ValueError(f"label {x} outside 0..{n - 1}")
