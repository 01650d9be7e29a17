"""Finite semimetric spaces with exact rational distance matrices.

A `FiniteSpace` is a labelled point set plus a square matrix of
`Fraction` distances.  Construction only enforces structure (shape,
distinct labels, exact entries); the distance axioms are checked by
`validate`, so malformed matrices can still be built and reported on.

Classification walks every point triple and is deliberately brute
force: it is the oracle that all graph-based ultrametricity tests in
this package are measured against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from functools import cached_property
from typing import Iterable

from ._canon import canonical_blocks
from .rationals import ZERO, as_rational, format_rational


class SpaceClass(IntEnum):
    """Strongest distance-axiom family a space satisfies."""

    SEMIMETRIC_ONLY = 0
    METRIC_ONLY = 1
    ULTRAMETRIC = 2


@dataclass(frozen=True)
class Violation:
    """One distance-axiom violation, anchored to a labelled entry pair."""

    kind: str  # "identity" | "symmetry" | "positivity"
    pair: tuple[str, str]
    detail: str

    def __str__(self) -> str:
        x, y = self.pair
        return f"{self.kind} violation at ({x}, {y}): {self.detail}"


@dataclass(frozen=True)
class FiniteSpace:
    """Labelled point set with an n x n matrix of exact rational distances."""

    labels: tuple[str, ...]
    matrix: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        if not labels:
            raise ValueError("a space needs at least one point")
        if len(set(labels)) != len(labels):
            raise ValueError("point labels must be distinct")
        n = len(labels)
        rows = tuple(tuple(as_rational(e) for e in row) for row in self.matrix)
        object.__setattr__(self, "matrix", rows)
        if len(rows) != n or any(len(row) != n for row in rows):
            raise ValueError(f"matrix must be {n}x{n} to match the {n} labels")

    @classmethod
    def from_rows(
        cls,
        labels: Iterable[str],
        rows: Iterable[Iterable[Fraction | int | str]],
    ) -> "FiniteSpace":
        return cls(tuple(labels), tuple(tuple(row) for row in rows))

    @property
    def n(self) -> int:
        return len(self.labels)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.labels)}

    def position(self, point: str) -> int:
        try:
            return self._index[point]
        except KeyError:
            raise ValueError(f"unknown point: {point!r}") from None

    def distance(self, x: str, y: str) -> Fraction:
        return self.matrix[self.position(x)][self.position(y)]


@dataclass(frozen=True)
class BallFamily:
    """All distinct open balls of one radius, canonically ordered."""

    radius: Fraction
    balls: tuple[frozenset[str], ...]


def validate(space: FiniteSpace) -> list[Violation]:
    """Check the distance axioms; empty list means the space is valid.

    Reports, entry by entry: nonzero diagonal ("identity"), asymmetric
    pairs ("symmetry"), and nonpositive off-diagonal entries
    ("positivity").
    """
    labels, m = space.labels, space.matrix
    n = len(labels)
    violations: list[Violation] = []
    for i in range(n):
        if m[i][i] != ZERO:
            violations.append(
                Violation(
                    "identity",
                    (labels[i], labels[i]),
                    f"expected 0, found {format_rational(m[i][i])}",
                )
            )
    for i in range(n):
        for j in range(i + 1, n):
            if m[i][j] != m[j][i]:
                violations.append(
                    Violation(
                        "symmetry",
                        (labels[i], labels[j]),
                        f"{format_rational(m[i][j])} != {format_rational(m[j][i])}",
                    )
                )
            if m[i][j] <= ZERO:
                violations.append(
                    Violation(
                        "positivity",
                        (labels[i], labels[j]),
                        f"distance {format_rational(m[i][j])} is not positive",
                    )
                )
    return violations


def require_valid(space: FiniteSpace) -> None:
    """Raise ValueError listing every axiom violation, if any."""
    violations = validate(space)
    if violations:
        summary = "; ".join(str(v) for v in violations)
        raise ValueError(f"invalid space: {summary}")


def _integer_matrix(space: FiniteSpace) -> list[list[int]]:
    # Common-denominator rescale; order comparisons are scale-invariant,
    # and plain int comparisons keep the triple loop fast.
    scale = math.lcm(*{e.denominator for row in space.matrix for e in row})
    return [
        [e.numerator * (scale // e.denominator) for e in row] for row in space.matrix
    ]


def classify(space: FiniteSpace) -> SpaceClass:
    """Strongest class the space satisfies, by exhaustive triple check.

    A triple passes the strong triangle inequality exactly when its
    largest side is attained at least twice, and the plain triangle
    inequality when the largest side is at most the sum of the other
    two; both facts cover all six ordered versions of the triple at
    once.  Runs over exact integers after a common-denominator rescale.
    """
    require_valid(space)
    n = space.n
    if n < 3:
        return SpaceClass.ULTRAMETRIC
    m = _integer_matrix(space)
    ultra = True
    for i in range(n - 2):
        mi = m[i]
        for j in range(i + 1, n - 1):
            a = mi[j]
            mj = m[j]
            for k in range(j + 1, n):
                b = mi[k]
                c = mj[k]
                if a >= b:
                    hi, mid = a, b
                else:
                    hi, mid = b, a
                if c >= hi:
                    lo, mid, hi = mid, hi, c
                elif c > mid:
                    lo = mid
                    mid = c
                else:
                    lo = c
                if hi > mid + lo:
                    return SpaceClass.SEMIMETRIC_ONLY
                if hi > mid:
                    ultra = False
    return SpaceClass.ULTRAMETRIC if ultra else SpaceClass.METRIC_ONLY


def distance_set(space: FiniteSpace) -> list[Fraction]:
    """Strictly increasing list of all attained distances; always starts at 0."""
    require_valid(space)
    return sorted({e for row in space.matrix for e in row})


def diameter(space: FiniteSpace) -> Fraction:
    """Largest attained distance; 0 exactly for one-point spaces."""
    require_valid(space)
    return max(e for row in space.matrix for e in row)


def open_ball(
    space: FiniteSpace, center: str, radius: Fraction | int | str
) -> frozenset[str]:
    """Points strictly closer than `radius` to `center` (always includes it)."""
    require_valid(space)
    r = as_rational(radius)
    if r <= ZERO:
        raise ValueError(f"radius must be positive, got {format_rational(r)}")
    row = space.matrix[space.position(center)]
    return frozenset(
        label for label, d in zip(space.labels, row) if d < r
    )


def _all_balls(space: FiniteSpace, r: Fraction) -> list[frozenset[str]]:
    labels = space.labels
    return [
        frozenset(label for label, d in zip(labels, row) if d < r)
        for row in space.matrix
    ]


def ball_family(space: FiniteSpace, radius: Fraction | int | str) -> BallFamily:
    """The deduplicated set of all open balls of one radius.

    For a finite space this is always a finite family covering every
    point; for ultrametric spaces at any attained radius it is moreover
    a partition (see `check_ball_coincidence`).
    """
    require_valid(space)
    r = as_rational(radius)
    if r <= ZERO:
        raise ValueError(f"radius must be positive, got {format_rational(r)}")
    distinct = dict.fromkeys(_all_balls(space, r))
    return BallFamily(radius=r, balls=canonical_blocks(distinct, space.labels))


def check_ball_coincidence(space: FiniteSpace, radius: Fraction | int | str) -> bool:
    """True iff any two intersecting balls of this radius are equal as sets.

    Guaranteed to hold on ultrametric spaces for every positive radius;
    callable on arbitrary spaces, where it may fail (which is exactly
    what the test suite probes).
    """
    require_valid(space)
    r = as_rational(radius)
    if r <= ZERO:
        raise ValueError(f"radius must be positive, got {format_rational(r)}")
    balls = list(dict.fromkeys(_all_balls(space, r)))
    for i in range(len(balls)):
        for j in range(i + 1, len(balls)):
            if balls[i] & balls[j]:
                # distinct sets by construction, so any overlap is a failure
                return False
    return True
