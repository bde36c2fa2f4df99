"""Edge-labeled graphs and the integer splines that live on them.

A spline on an edge-labeled graph assigns an integer to every vertex so
that the two endpoint values of each edge agree modulo the edge label.
Splines form a ring under vertex-wise addition and multiplication and a
module over the integers; the rest of the package builds bases for that
module when the graph is a cycle.

Conventions used everywhere:

* vertices and edges are 1-based in every message and interface;
* on a cycle with n edges, edge i joins vertices i and i + 1 for i < n,
  and edge n joins vertices n and 1;
* splines are written in tuple order (g_1, ..., g_n).
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence, Union

from .errors import DimensionError


def _as_int_tuple(values, what: str) -> tuple[int, ...]:
    """Coerce an iterable of integer-likes to a tuple of ints, rejecting floats."""
    try:
        return tuple(operator.index(v) for v in values)
    except TypeError as exc:
        raise TypeError(f"{what} must be integers") from exc


@dataclass(frozen=True)
class EdgeLabeledCycle:
    """A cycle on n >= 3 vertices with a positive integer label on each edge.

    ``labels[i - 1]`` is the label of edge i; edge i joins vertices i and
    i + 1 for i < n, and edge n joins vertices n and 1.
    """

    labels: tuple[int, ...]

    def __post_init__(self) -> None:
        labels = _as_int_tuple(self.labels, "edge labels")
        object.__setattr__(self, "labels", labels)
        if len(labels) < 3:
            raise ValueError(f"a cycle needs at least 3 edges, got {len(labels)}")
        for i, lab in enumerate(labels, start=1):
            if lab < 1:
                raise ValueError(f"edge label {i} must be positive, got {lab}")

    @property
    def n(self) -> int:
        return len(self.labels)

    def label(self, i: int) -> int:
        """The label of edge i, 1-based."""
        if not 1 <= i <= self.n:
            raise IndexError(f"edge index must be in [1, {self.n}], got {i}")
        return self.labels[i - 1]

    @cached_property
    def _suffix_gcds(self) -> tuple[int, ...]:
        # one backward pass; slot i - 1 holds gcd(labels[i - 1], ..., labels[n - 1])
        out = [0] * self.n
        g = 0
        for i in range(self.n - 1, -1, -1):
            g = math.gcd(self.labels[i], g)
            out[i] = g
        return tuple(out)

    def suffix_gcd(self, i: int) -> int:
        """gcd of the labels of edges i, i + 1, ..., n; defined for 1 <= i <= n."""
        if not 1 <= i <= self.n:
            raise IndexError(f"edge index must be in [1, {self.n}], got {i}")
        return self._suffix_gcds[i - 1]

    def edges(self) -> Iterator[tuple[int, int, int, int]]:
        """Yield (edge index, u, v, label) with 1-based vertex indices."""
        n = self.n
        for i in range(1, n):
            yield i, i, i + 1, self.labels[i - 1]
        yield n, n, 1, self.labels[n - 1]

    def label_product(self) -> int:
        return math.prod(self.labels)

    def as_graph(self) -> "EdgeLabeledGraph":
        return EdgeLabeledGraph(
            self.n, tuple((u, v, lab) for _, u, v, lab in self.edges())
        )


@dataclass(frozen=True)
class EdgeLabeledGraph:
    """A finite graph on vertices 1..vertex_count with positive edge labels."""

    vertex_count: int
    edges: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        count = operator.index(self.vertex_count)
        object.__setattr__(self, "vertex_count", count)
        if count < 1:
            raise ValueError(f"vertex count must be positive, got {count}")
        cleaned = []
        for pos, edge in enumerate(self.edges, start=1):
            u, v, lab = (operator.index(x) for x in edge)
            if not (1 <= u <= count and 1 <= v <= count):
                raise ValueError(f"edge {pos} endpoints ({u}, {v}) outside [1, {count}]")
            if u == v:
                raise ValueError(f"edge {pos} is a self-loop at vertex {u}")
            if lab < 1:
                raise ValueError(f"edge {pos} label must be positive, got {lab}")
            cleaned.append((u, v, lab))
        object.__setattr__(self, "edges", tuple(cleaned))

    def label_product(self) -> int:
        return math.prod(lab for _, _, lab in self.edges) if self.edges else 1


@dataclass(frozen=True)
class Spline:
    """Integer vertex labels in tuple order (g_1, ..., g_n).

    Operators: ``+`` and ``-`` are vertex-wise, ``*`` is scalar
    multiplication when the other operand is an int and vertex-wise
    (pointwise) multiplication when it is another Spline.
    """

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", _as_int_tuple(self.entries, "spline entries"))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, index: int) -> int:
        return self.entries[index]

    def _match(self, other: "Spline") -> None:
        if len(self.entries) != len(other.entries):
            raise DimensionError(
                f"spline lengths differ: {len(self.entries)} vs {len(other.entries)}"
            )

    def __add__(self, other: "Spline") -> "Spline":
        if not isinstance(other, Spline):
            return NotImplemented
        self._match(other)
        return Spline(tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Spline") -> "Spline":
        if not isinstance(other, Spline):
            return NotImplemented
        self._match(other)
        return Spline(tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "Spline":
        return Spline(tuple(-a for a in self.entries))

    def __mul__(self, other: Union["Spline", int]) -> "Spline":
        if isinstance(other, Spline):
            self._match(other)
            return Spline(tuple(a * b for a, b in zip(self.entries, other.entries)))
        try:
            c = operator.index(other)
        except TypeError:
            return NotImplemented
        return Spline(tuple(c * a for a in self.entries))

    __rmul__ = __mul__


GraphLike = Union[EdgeLabeledCycle, EdgeLabeledGraph]
SplineLike = Union[Spline, Sequence[int]]


def labeled_edges(graph: GraphLike) -> list[tuple[int, int, int, int]]:
    """All edges of a cycle or graph as (index, u, v, label), 1-based."""
    if isinstance(graph, EdgeLabeledCycle):
        return list(graph.edges())
    return [(i, u, v, lab) for i, (u, v, lab) in enumerate(graph.edges, start=1)]


def vertex_count(graph: GraphLike) -> int:
    return graph.n if isinstance(graph, EdgeLabeledCycle) else graph.vertex_count


def spline_entries(labels: SplineLike) -> tuple[int, ...]:
    return labels.entries if isinstance(labels, Spline) else _as_int_tuple(labels, "vertex labels")


@dataclass(frozen=True)
class EdgeViolation:
    """One failed edge congruence: the endpoint values disagree mod the label."""

    edge: int
    u: int
    v: int
    label: int
    value_u: int
    value_v: int

    def describe(self) -> str:
        return (
            f"edge {self.edge} (vertex {self.u} -- vertex {self.v}, label {self.label}): "
            f"{self.value_u} and {self.value_v} differ by {self.value_u - self.value_v}, "
            f"not a multiple of {self.label}"
        )


@dataclass(frozen=True)
class SplineCheck:
    """Outcome of :func:`is_spline`; truthy exactly when every edge passes."""

    ok: bool
    violations: tuple[EdgeViolation, ...]

    def __bool__(self) -> bool:
        return self.ok


def is_spline(graph: GraphLike, labels: SplineLike) -> SplineCheck:
    """Check every edge congruence, collecting violations instead of failing fast."""
    entries = spline_entries(labels)
    n = vertex_count(graph)
    if len(entries) != n:
        raise DimensionError(f"expected {n} vertex labels, got {len(entries)}")
    violations = []
    for i, u, v, lab in labeled_edges(graph):
        if (entries[u - 1] - entries[v - 1]) % lab != 0:
            violations.append(EdgeViolation(i, u, v, lab, entries[u - 1], entries[v - 1]))
    return SplineCheck(not violations, tuple(violations))


def trivial_spline(n: int) -> Spline:
    """The all-ones labeling, a spline on every cycle with n vertices."""
    if n < 3:
        raise ValueError(f"cycles have at least 3 vertices, got {n}")
    return Spline((1,) * n)


def add(a: Spline, b: Spline) -> Spline:
    """Vertex-wise sum; splines on a common graph are closed under this."""
    return a + b


def scalar_mul(c: int, a: Spline) -> Spline:
    """Integer multiple of a spline."""
    return a * c


def pointwise_mul(a: Spline, b: Spline) -> Spline:
    """Vertex-wise product; splines on a common graph are closed under this."""
    return a * b


def leading_zeros(s: SplineLike) -> int:
    """Number of zero entries before the first nonzero one (n for the zero spline)."""
    count = 0
    for g in spline_entries(s):
        if g != 0:
            break
        count += 1
    return count
