"""Arithmetic structure of decompositions over Z_n.

A subset W of Z_n is k-arithmetic (k in 1..n//2) when it can be listed as
w, w+k, ..., w+(r-1)k mod n with all terms distinct. An element of a
decomposition is certified either by a single such progression covering its
vertex set, or by a pair of disjoint equal-length k-progressions
partitioning it. Odd-length single progressions have a central vertex (the
middle term); a certificate for a whole decomposition additionally requires
all central vertices to be pairwise distinct.

Progressions that wrap around the cycle (r*k = 0 mod n) admit several valid
starts and hence several candidate centrals; all of them are enumerated as
separate options because the distinct-centrals constraint may hold for one
ordering and fail for another.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence

from .errors import (
    BudgetExceededError,
    EvenLengthError,
    OddCardinalityError,
)
from .model import CliqueDecomposition, validate_decomposition

VertexId = Hashable

DEFAULT_NODE_BUDGET = 10_000_000


@dataclass(frozen=True)
class Progression:
    """The ordering start, start+step, ..., start+(length-1)*step mod modulus."""

    start: int
    step: int
    length: int
    modulus: int

    @property
    def terms(self) -> tuple[int, ...]:
        return tuple(
            (self.start + i * self.step) % self.modulus for i in range(self.length)
        )

    @property
    def term_set(self) -> frozenset[int]:
        return frozenset(self.terms)

    @property
    def central(self) -> int:
        """Middle term of an odd-length ordering."""
        if self.length % 2 == 0:
            raise EvenLengthError(
                f"progression of length {self.length} has no central term"
            )
        return self.terms[(self.length - 1) // 2]


@dataclass(frozen=True)
class SingleCertificate:
    """One progression covering the whole element."""

    progression: Progression

    kind = "single"

    @property
    def step(self) -> int:
        return self.progression.step

    @property
    def covered(self) -> frozenset[int]:
        return self.progression.term_set

    @property
    def central(self) -> int | None:
        if self.progression.length % 2 == 1:
            return self.progression.central
        return None


@dataclass(frozen=True)
class SplitCertificate:
    """Two disjoint equal-length progressions partitioning the element."""

    first: Progression
    second: Progression

    kind = "split"

    @property
    def step(self) -> int:
        return self.first.step

    @property
    def covered(self) -> frozenset[int]:
        return self.first.term_set | self.second.term_set

    @property
    def central(self) -> None:
        return None


ElementCertificate = SingleCertificate | SplitCertificate


@dataclass(frozen=True)
class ArithmeticCertificate:
    """One certificate entry per element, with pairwise distinct centrals."""

    entries: tuple[ElementCertificate, ...]

    @property
    def centrals(self) -> tuple[tuple[int, int], ...]:
        """(element index, central vertex) for the odd-order single entries."""
        return tuple(
            (i, entry.central)
            for i, entry in enumerate(self.entries)
            if entry.central is not None
        )


@dataclass(frozen=True)
class Labeling:
    """Bijection from abstract vertex ids onto Z_n."""

    assignment: tuple[tuple[VertexId, int], ...]

    @property
    def mapping(self) -> dict[VertexId, int]:
        return dict(self.assignment)

    @property
    def n(self) -> int:
        return len(self.assignment)

    def apply(self, elements: Iterable[Iterable[VertexId]]) -> list[list[int]]:
        table = self.mapping
        return [[table[v] for v in elem] for elem in elements]


def central_vertex(p: Progression) -> int:
    """Middle term of an odd-length progression."""
    return p.central


def arithmetic_orderings(
    vertices: Iterable[int], step: int, n: int
) -> tuple[Progression, ...]:
    """Every valid k-progression ordering of the given set, by ascending start.

    A start s works when s, s+k, ..., s+(r-1)k are distinct and reproduce the
    set exactly. Singletons are trivially valid for every step. An empty
    result means the set is not k-arithmetic for this step.
    """
    target = frozenset(vertices)
    if not target:
        raise ValueError("vertex set is empty")
    if not 1 <= step <= n // 2:
        raise ValueError(f"step {step} outside 1..{n // 2}")
    r = len(target)
    found = []
    for s in sorted(target):
        prog = Progression(s, step, r, n)
        terms = prog.terms
        if len(set(terms)) == r and frozenset(terms) == target:
            found.append(prog)
    return tuple(found)


def split_orderings(
    vertices: Iterable[int], step: int, n: int
) -> tuple[tuple[Progression, Progression], ...]:
    """All unordered pairs of disjoint equal-length k-progressions covering the set.

    Enumeration runs over candidate start pairs (s, t) with s < t rather than
    over subsets; a pair qualifies when both progressions stay inside the set,
    are internally distinct, and partition it. For a 2-element set this yields
    the singleton/singleton split for every step.
    """
    target = frozenset(vertices)
    if len(target) % 2 == 1:
        raise OddCardinalityError(
            f"cannot split a set of odd size {len(target)} into equal halves"
        )
    if not 1 <= step <= n // 2:
        raise ValueError(f"step {step} outside 1..{n // 2}")
    half = len(target) // 2
    ordered = sorted(target)
    found = []
    for i, s in enumerate(ordered):
        first = Progression(s, step, half, n)
        first_terms = first.term_set
        if len(first_terms) != half or not first_terms <= target:
            continue
        for t in ordered[i + 1 :]:
            second = Progression(t, step, half, n)
            second_terms = second.term_set
            if len(second_terms) != half:
                continue
            if first_terms & second_terms:
                continue
            if first_terms | second_terms == target:
                found.append((first, second))
    return tuple(found)


def element_options(vertices: Iterable[int], n: int) -> tuple[ElementCertificate, ...]:
    """All certificate candidates for one element, in canonical order.

    Order: ascending step; within a step, single progressions (ascending
    start) before splits (ascending start pair). An empty result means the
    element has no arithmetic representation under the current labels.
    """
    target = frozenset(vertices)
    if len(target) < 2:
        raise ValueError("elements have at least two vertices")
    options: list[ElementCertificate] = []
    even = len(target) % 2 == 0
    for step in range(1, n // 2 + 1):
        options.extend(
            SingleCertificate(p) for p in arithmetic_orderings(target, step, n)
        )
        if even:
            options.extend(
                SplitCertificate(a, b) for a, b in split_orderings(target, step, n)
            )
    return tuple(options)


def find_certificate(d: CliqueDecomposition) -> ArithmeticCertificate | None:
    """Pick one option per element so that all centrals are pairwise distinct.

    Even-order elements carry no central, so any option serves; the first in
    canonical order is taken. Odd-order elements are assigned by backtracking,
    fewest options first, trying options in canonical order, which makes the
    result deterministic. Returns None iff no selection exists.
    """
    per_element: list[tuple[ElementCertificate, ...]] = []
    for elem in d.elements:
        options = element_options(elem.vertices, d.n)
        if not options:
            return None
        per_element.append(options)

    chosen: list[ElementCertificate | None] = [None] * len(d.elements)
    odd_indices = [i for i, e in enumerate(d.elements) if e.order % 2 == 1]
    odd_indices.sort(key=lambda i: (len(per_element[i]), i))

    used: set[int] = set()

    def assign(pos: int) -> bool:
        if pos == len(odd_indices):
            return True
        idx = odd_indices[pos]
        for option in per_element[idx]:
            central = option.central
            if central in used:
                continue
            used.add(central)
            chosen[idx] = option
            if assign(pos + 1):
                return True
            used.discard(central)
            chosen[idx] = None
        return False

    if not assign(0):
        return None
    for i, elem in enumerate(d.elements):
        if chosen[i] is None:
            chosen[i] = per_element[i][0]
    return ArithmeticCertificate(tuple(chosen))  # type: ignore[arg-type]


def check_certificate(d: CliqueDecomposition, cert: ArithmeticCertificate) -> bool:
    """Re-verify a certificate: coverage per element and distinct centrals."""
    if len(cert.entries) != len(d.elements):
        return False
    for elem, entry in zip(d.elements, cert.entries):
        if entry.covered != elem.vertex_set:
            return False
        if isinstance(entry, SplitCertificate):
            if entry.first.length != entry.second.length:
                return False
            if entry.first.term_set & entry.second.term_set:
                return False
            if entry.first.step != entry.second.step:
                return False
        if len(set(entry.covered)) != elem.order:
            return False
    centrals = [c for _, c in cert.centrals]
    return len(centrals) == len(set(centrals))


def _abstract_structure(
    n: int, elements: Sequence[Sequence[VertexId]]
) -> tuple[list[VertexId], list[list[int]]]:
    """Vertex ids in first-appearance order and elements over their indices.

    Also validates that the abstract pattern is a decomposition shape: after
    the canonical bijection onto 0..n-1 it must pass full validation.
    """
    order: list[VertexId] = []
    index: dict[VertexId, int] = {}
    for elem in elements:
        for v in elem:
            if v not in index:
                index[v] = len(order)
                order.append(v)
    if len(order) != n:
        raise ValueError(f"expected {n} distinct vertices, found {len(order)}")
    indexed = [[index[v] for v in elem] for elem in elements]
    validate_decomposition(n, indexed)  # raises with the violation list
    return order, indexed


def search_labeling(
    n: int,
    elements: Sequence[Sequence[VertexId]],
    budget: int = DEFAULT_NODE_BUDGET,
    unit_symmetry: bool = False,
) -> tuple[Labeling, ArithmeticCertificate] | None:
    """Find a bijection onto Z_n making the decomposition arithmetic.

    Backtracks over partial vertex assignments. A branch dies as soon as a
    fully-labeled element has no options, or the fully-labeled odd elements
    cannot receive pairwise distinct centrals. Translation symmetry is broken
    by pinning the first vertex of the largest element to 0, which is safe:
    adding t to every label keeps every progression a progression and shifts
    all centrals by t, preserving distinctness. Exhaustive up to that
    reduction, so None means no labeling exists.

    ``unit_symmetry`` additionally restricts the second assigned vertex to
    one label per orbit of the unit group (multiplying all labels by a unit
    u fixes 0, rescales every step, and maps centrals bijectively, so some
    solution survives the restriction; the orbit of x under units is
    determined by gcd(x, n), with the divisor itself as least member). Off
    by default because the returned labeling is then no longer the first in
    plain branch order.

    Raises BudgetExceededError when the node budget runs out, leaving the
    question open rather than answering it.
    """
    order, indexed = _abstract_structure(n, elements)
    m = len(indexed)

    largest = max(range(m), key=lambda i: (len(indexed[i]), -i))
    pinned = indexed[largest][0]

    # Static variable order: pinned vertex first, then by how many elements
    # a vertex touches (most constrained first), ties by first appearance.
    membership = [0] * n
    for elem in indexed:
        for v in elem:
            membership[v] += 1
    var_order = [pinned] + sorted(
        (v for v in range(n) if v != pinned), key=lambda v: (-membership[v], v)
    )
    position = {v: i for i, v in enumerate(var_order)}

    # For pruning: elements become checkable once their last vertex (in the
    # variable order) is assigned.
    completed_at: list[list[int]] = [[] for _ in range(n)]
    for ei, elem in enumerate(indexed):
        last = max(position[v] for v in elem)
        completed_at[last].append(ei)

    assignment: dict[int, int] = {}
    used_labels = [False] * n
    element_opts: dict[int, tuple[ElementCertificate, ...]] = {}
    nodes = 0

    def centrals_feasible(ready: list[int]) -> bool:
        """Can the fully-labeled odd elements get distinct centrals?"""
        odd = [
            ei
            for ei in ready
            if len(indexed[ei]) % 2 == 1 and ei in element_opts
        ]
        odd.sort(key=lambda ei: (len(element_opts[ei]), ei))
        taken: set[int] = set()

        def pick(pos: int) -> bool:
            if pos == len(odd):
                return True
            for option in element_opts[odd[pos]]:
                c = option.central
                if c in taken:
                    continue
                taken.add(c)
                if pick(pos + 1):
                    return True
                taken.discard(c)
            return False

        return pick(0)

    unit_reps = {d for d in range(1, n) if n % d == 0} if unit_symmetry else None

    def extend(depth: int, ready: list[int]) -> bool:
        nonlocal nodes
        if depth == n:
            return True
        v = var_order[depth]
        if depth == 0:
            labels = [0]
        elif depth == 1 and unit_reps is not None:
            labels = [x for x in range(n) if not used_labels[x] and x in unit_reps]
        else:
            labels = [x for x in range(n) if not used_labels[x]]
        for lab in labels:
            nodes += 1
            if nodes > budget:
                raise BudgetExceededError(budget)
            assignment[v] = lab
            used_labels[lab] = True
            ok = True
            newly = completed_at[depth]
            for ei in newly:
                opts = element_options(
                    [assignment[u] for u in indexed[ei]], n
                )
                if not opts:
                    ok = False
                    break
                element_opts[ei] = opts
            if ok and newly:
                ready.extend(newly)
                ok = centrals_feasible(ready)
            if ok and extend(depth + 1, ready):
                return True
            for ei in newly:
                element_opts.pop(ei, None)
                if ei in ready:
                    ready.remove(ei)
            used_labels[lab] = False
            del assignment[v]
        return False

    if extend(0, []):
        labeling = Labeling(tuple((order[v], assignment[v]) for v in range(n)))
        relabeled = validate_decomposition(
            n, [[assignment[v] for v in elem] for elem in indexed]
        )
        cert = find_certificate(relabeled)
        assert cert is not None, "feasibility pruning accepted an uncertifiable leaf"
        return labeling, cert
    return None


def apply_labeling(
    n: int, elements: Sequence[Sequence[VertexId]], labeling: Labeling
) -> CliqueDecomposition:
    """Relabel an abstract decomposition into a concrete one over Z_n."""
    return validate_decomposition(n, labeling.apply(elements))
