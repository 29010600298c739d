"""(n,m)-lattice paths and their plain statistics.

A path is a sequence of ``n + 1`` integer steps ``(x, y)`` with every
``x >= 1``, every ``y`` in ``[1 - n, 1]``, ``sum(x) == m`` and
``sum(y) == 1``; it runs from the origin to ``(m, 1)``.

All indices exposed here are 1-based: step ``i`` is ``path.steps[i - 1]``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from itertools import accumulate
from typing import Iterable, NamedTuple, Sequence

from .errors import (
    BoundYViolation,
    EmptyOrderViolation,
    EmptyPath,
    IndexOutOfRange,
    ParseError,
    SumXViolation,
    SumYViolation,
)


class Step(NamedTuple):
    x: int
    y: int


class PathPoint(NamedTuple):
    b: int
    a: int


def _check(steps: tuple[Step, ...]) -> None:
    if not steps:
        raise EmptyPath("a path needs at least one step")
    if len(steps) == 1:
        raise EmptyOrderViolation("n >= 1 required: a path needs at least two steps")
    n = len(steps) - 1
    m = sum(s.x for s in steps)
    for i, s in enumerate(steps, 1):
        if s.x < 1 or s.x > m - 1:
            raise SumXViolation(f"step {i}: x = {s.x} outside [1, {m - 1}]")
    for i, s in enumerate(steps, 1):
        if not 1 - n <= s.y <= 1:
            raise BoundYViolation(f"step {i}: y = {s.y} outside [{1 - n}, 1]")
    total_y = sum(s.y for s in steps)
    if total_y != 1:
        raise SumYViolation(f"sum of y is {total_y}, expected 1")


@dataclass(frozen=True)
class LatticePath:
    """An immutable, validated (n,m)-lattice path."""

    steps: tuple[Step, ...]

    def __post_init__(self) -> None:
        steps = tuple(Step(int(x), int(y)) for x, y in self.steps)
        object.__setattr__(self, "steps", steps)
        _check(steps)

    @property
    def n(self) -> int:
        return len(self.steps) - 1

    @property
    def m(self) -> int:
        return sum(s.x for s in self.steps)

    def __len__(self) -> int:
        return len(self.steps)

    def x(self, i: int) -> int:
        """Horizontal length of step ``i`` (1-based)."""
        return self.steps[i - 1].x

    def y(self, i: int) -> int:
        return self.steps[i - 1].y

    def heights(self) -> list[int]:
        """Prefix sums ``a_1 .. a_{n+1}`` of the y-coordinates."""
        return list(accumulate(s.y for s in self.steps))

    def with_steps(self, steps: Iterable[Sequence[int]]) -> LatticePath:
        return LatticePath(tuple(Step(*s) for s in steps))

    def to_json(self) -> dict:
        return {"steps": [[s.x, s.y] for s in self.steps]}

    def __str__(self) -> str:
        return format_steps(self.steps)


def format_steps(steps: Iterable[Sequence[int]]) -> str:
    return "".join(f"({x},{y})" for x, y in steps)


def validate(steps: Iterable[Sequence[int]]) -> LatticePath:
    """Build a :class:`LatticePath` from raw ``(x, y)`` pairs.

    ``n`` and ``m`` are inferred from the sequence. Raises one of the
    :class:`~chungfeller.errors.PathError` subclasses when the pairs do not
    form a path.
    """
    try:
        raw = tuple(Step(int(x), int(y)) for x, y in steps)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"steps must be integer pairs: {exc}") from None
    return LatticePath(raw)


_STEP_RE = re.compile(r"\s*\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*")


def parse_path(text: str) -> LatticePath:
    """Parse the shorthand ``"(1,1)(1,-2)(2,1)"`` into a validated path."""
    pos = 0
    pairs = []
    while pos < len(text):
        match = _STEP_RE.match(text, pos)
        if match is None:
            raise ParseError(f"cannot parse step at offset {pos}: {text[pos:pos + 12]!r}")
        pairs.append((int(match.group(1)), int(match.group(2))))
        pos = match.end()
    if not pairs:
        raise ParseError("empty path literal")
    return validate(pairs)


def path_from_json(obj: dict | str) -> LatticePath:
    if isinstance(obj, str):
        obj = json.loads(obj)
    try:
        return validate(obj["steps"])
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed path object: {exc}") from None


def prefix_points(path: LatticePath) -> list[PathPoint]:
    """Points ``(b_0, a_0) = (0, 0)`` through ``(b_{n+1}, a_{n+1}) = (m, 1)``."""
    points = [PathPoint(0, 0)]
    b = a = 0
    for s in path.steps:
        b += s.x
        a += s.y
        points.append(PathPoint(b, a))
    return points


def non_positive_set(path: LatticePath) -> frozenset[int]:
    """Indices ``i`` whose prefix height ``a_i`` is at most zero."""
    return frozenset(i for i, a in enumerate(path.heights(), 1) if a <= 0)


def npl(path: LatticePath) -> int:
    """Non-positive length: total x-length of the steps in the non-positive set."""
    return sum(s.x for s, a in zip(path.steps, path.heights()) if a <= 0)


def rightmost_minimum(path: LatticePath) -> PathPoint:
    # the origin takes part; ties go to the later (rightmost) point
    best = None
    for point in prefix_points(path):
        if best is None or point.a <= best.a:
            best = point
    return best


def rml(path: LatticePath) -> int:
    """Rightmost minimum length: abscissa of the rightmost lowest point."""
    return rightmost_minimum(path).b


def path_order(path: LatticePath) -> tuple[int, ...]:
    """The permutation listing ``1..n+1`` in increasing order under ``<_P``.

    ``i <_P j`` when ``a_i < a_j``, or when the heights agree and ``i > j``.
    """
    heights = path.heights()
    return tuple(sorted(range(1, len(heights) + 1), key=lambda i: (heights[i - 1], -i)))


def sigma(path: LatticePath) -> tuple[int, ...]:
    """``(i, i-1, ..., 1, n+1, n, ..., i+1)`` where ``i`` is the first index of the path order."""
    i = path_order(path)[0]
    size = len(path)
    return tuple(range(i, 0, -1)) + tuple(range(size, i, -1))


def cyclic_permutation(path: LatticePath, i: int) -> LatticePath:
    """The ``i``-th cyclic permutation: steps ``i+1 .. n+1`` followed by ``1 .. i``."""
    if not 1 <= i <= len(path):
        raise IndexOutOfRange(f"rotation index {i} outside [1, {len(path)}]")
    steps = path.steps
    return LatticePath(steps[i:] + steps[:i])
