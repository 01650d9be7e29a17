"""Diametrical graphs, threshold graphs, and the sweep ultrametricity test.

The diametrical graph joins the point pairs that realize the diameter.
The threshold graph at level r joins pairs at distance >= r.  Sweeping
r over the attained distances and asking each threshold graph to be
empty or complete multipartite decides ultrametricity without ever
checking a triangle; `classify` remains the independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .graphs import Partition, SimpleGraph, multipartite_parts
from .rationals import ZERO, as_rational, format_rational
from .spaces import (
    FiniteSpace,
    SpaceClass,
    ball_family,
    classify,
    diameter,
    distance_set,
    require_valid,
)


class ThresholdKind(Enum):
    EMPTY = "empty"
    COMPLETE_MULTIPARTITE = "complete-multipartite"
    NOT_MULTIPARTITE = "not-multipartite"


@dataclass(frozen=True)
class ThresholdEntry:
    """Classification of one threshold graph."""

    radius: Fraction
    kind: ThresholdKind
    parts: Partition | None  # set iff kind is COMPLETE_MULTIPARTITE

    @property
    def part_count(self) -> int | None:
        return None if self.parts is None else self.parts.block_count


@dataclass(frozen=True)
class SweepReport:
    """Per-threshold classifications plus the overall verdict.

    `verdict` is True iff every threshold graph is empty or complete
    multipartite, which for metric inputs holds exactly when the space
    is ultrametric.  `metric_input` flags whether the swept space
    satisfies the triangle inequality at all; the verdict is only
    guaranteed to mean ultrametricity when it does.
    """

    entries: tuple[ThresholdEntry, ...]
    verdict: bool
    metric_input: bool


def diametrical_graph(space: FiniteSpace) -> SimpleGraph:
    """Graph on the points whose edges are the diameter-realizing pairs.

    Empty exactly for one-point spaces; with two or more points a
    finite space attains its diameter, so the graph has an edge.
    """
    require_valid(space)
    diam = diameter(space)
    labels, m = space.labels, space.matrix
    edges = set()
    if space.n >= 2:
        for i in range(space.n):
            for j in range(i + 1, space.n):
                if m[i][j] == diam:
                    edges.add(frozenset((labels[i], labels[j])))
    return SimpleGraph(labels, frozenset(edges))


def threshold_graph(space: FiniteSpace, r: Fraction | int | str) -> SimpleGraph:
    """Graph joining the point pairs at distance >= r."""
    require_valid(space)
    r = as_rational(r)
    if r <= ZERO:
        raise ValueError(f"threshold must be positive, got {format_rational(r)}")
    labels, m = space.labels, space.matrix
    edges = set()
    for i in range(space.n):
        for j in range(i + 1, space.n):
            if m[i][j] >= r:
                edges.add(frozenset((labels[i], labels[j])))
    return SimpleGraph(labels, frozenset(edges))


def sweep(space: FiniteSpace) -> SweepReport:
    """Classify the threshold graph at every attained positive distance.

    Checking only the attained distances is exhaustive: between two
    consecutive distance values the edge set {d >= r} does not change,
    so each threshold graph for r in (0, diam] equals one of the swept
    graphs.  Requires at least two points.
    """
    require_valid(space)
    if space.n < 2:
        raise ValueError("sweep needs at least two points")
    metric_input = classify(space) >= SpaceClass.METRIC_ONLY
    entries: list[ThresholdEntry] = []
    verdict = True
    for r in distance_set(space):
        if r == ZERO:
            continue
        graph = threshold_graph(space, r)
        if not graph.edges:
            entries.append(ThresholdEntry(r, ThresholdKind.EMPTY, None))
            continue
        parts = multipartite_parts(graph)
        if parts is None:
            entries.append(ThresholdEntry(r, ThresholdKind.NOT_MULTIPARTITE, None))
            verdict = False
        else:
            entries.append(
                ThresholdEntry(r, ThresholdKind.COMPLETE_MULTIPARTITE, parts)
            )
    return SweepReport(tuple(entries), verdict, metric_input)


def verify_parts_are_balls(space: FiniteSpace) -> bool:
    """Check that the diametrical graph's parts are the diameter-radius balls.

    Defined for ultrametric spaces with at least two points, where it
    must always return True: the parts of the (complete multipartite)
    diametrical graph coincide with the distinct open balls of radius
    equal to the diameter.
    """
    require_valid(space)
    if space.n < 2:
        raise ValueError("need at least two points")
    if classify(space) is not SpaceClass.ULTRAMETRIC:
        raise ValueError("space is not ultrametric")
    parts = multipartite_parts(diametrical_graph(space))
    if parts is None:
        return False
    balls = ball_family(space, diameter(space))
    return set(parts.blocks) == set(balls.balls)


def gap_condition(space: FiniteSpace) -> bool:
    """True iff every attained distance below the diameter is under half of it.

    Metric spaces satisfying this inherit the parts-are-balls structure
    of ultrametric spaces even when the strong triangle inequality
    fails; the strict inequality is sharp (doubling a distance to
    exactly the diameter breaks the structure).
    """
    require_valid(space)
    if space.n < 2:
        raise ValueError("need at least two points")
    if classify(space) < SpaceClass.METRIC_ONLY:
        raise ValueError("space does not satisfy the triangle inequality")
    diam = diameter(space)
    return all(
        2 * t < diam for t in distance_set(space) if ZERO < t < diam
    )
