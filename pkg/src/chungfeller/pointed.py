"""Pointed paths and the cyclic classes that realise each statistic value once.

A pointed path ``[P; j]`` marks the root ``(m - j, 0)`` inside the span of
the last step of ``P``. Rotating ``P`` and re-pointing gives a class of
exactly ``m`` pointed paths; ordering that class by ``theta`` (resp.
``gamma``) lists it by increasing PNPL (resp. PRML), hitting every value in
``0 .. m-1`` once.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    LatticePath,
    PathPoint,
    cyclic_permutation,
    npl,
    path_from_json,
    path_order,
    rml,
    sigma,
)
from .errors import IndexOutOfRange, RootOffsetViolation


@dataclass(frozen=True)
class PointedLatticePath:
    path: LatticePath
    root_offset: int = 0

    def __post_init__(self) -> None:
        last = self.path.x(len(self.path))
        if not 0 <= self.root_offset <= last - 1:
            raise RootOffsetViolation(
                f"root offset {self.root_offset} outside [0, {last - 1}]"
            )

    @property
    def root(self) -> PathPoint:
        return PathPoint(self.path.m - self.root_offset, 0)

    def to_json(self) -> dict:
        return {**self.path.to_json(), "root_offset": self.root_offset}

    def __str__(self) -> str:
        return f"[{self.path}; {self.root_offset}]"


@dataclass(frozen=True)
class ClassMember:
    """The pointed path ``[P_i; j]`` together with its label relative to ``P``."""

    rotation_index: int
    offset: int
    realized: PointedLatticePath

    @property
    def label(self) -> tuple[int, int]:
        return (self.rotation_index, self.offset)


def pointed_from_json(obj: dict) -> PointedLatticePath:
    return PointedLatticePath(path_from_json(obj), int(obj.get("root_offset", 0)))


def pnpl(q: PointedLatticePath) -> int:
    return npl(q.path) + q.root_offset


def prml(q: PointedLatticePath) -> int:
    return rml(q.path) + q.root_offset


def _member(path: LatticePath, i: int, j: int) -> ClassMember:
    return ClassMember(i, j, PointedLatticePath(cyclic_permutation(path, i), j))


def _expand(path: LatticePath, indices) -> list[ClassMember]:
    # rotation P_i ends with step i, so its legal offsets are 0 .. x_i - 1
    return [_member(path, i, j) for i in indices for j in range(path.x(i))]


def pointed_class(path: LatticePath) -> list[ClassMember]:
    """All ``m`` members of the class, labelled ``(i; j)`` in label order."""
    return _expand(path, range(1, len(path) + 1))


def theta_sequence(path: LatticePath) -> list[ClassMember]:
    """The class ordered by the path order of ``i``, then by ``j``."""
    return _expand(path, path_order(path))


def gamma_sequence(path: LatticePath) -> list[ClassMember]:
    """The class ordered by position of ``i`` in ``sigma``, then by ``j``."""
    return _expand(path, sigma(path))


def _select(path: LatticePath, indices, r: int) -> PointedLatticePath:
    # walk the ordered rotation indices; only the chosen rotation is built
    if not 1 <= r <= path.m:
        raise IndexOutOfRange(f"r = {r} outside [1, {path.m}]")
    for i in indices:
        width = path.x(i)
        if r <= width:
            return PointedLatticePath(cyclic_permutation(path, i), r - 1)
        r -= width
    raise AssertionError("offsets of a class sum to m")


def theta(path: LatticePath, r: int) -> PointedLatticePath:
    """The ``r``-th class member under the theta order; its PNPL is ``r - 1``."""
    return _select(path, path_order(path), r)


def gamma(path: LatticePath, r: int) -> PointedLatticePath:
    """The ``r``-th class member under the gamma order; its PRML is ``r - 1``."""
    return _select(path, sigma(path), r)


def canonical_base(q: PointedLatticePath | LatticePath) -> LatticePath:
    """Lexicographically smallest rotation of the underlying path."""
    path = q.path if isinstance(q, PointedLatticePath) else q
    steps = path.steps
    best = min(steps[i:] + steps[:i] for i in range(len(steps)))
    return LatticePath(best)


def _index(q: PointedLatticePath, sequence_of) -> tuple[LatticePath, int]:
    base = canonical_base(q)
    for r, member in enumerate(sequence_of(base), 1):
        if member.realized == q:
            return base, r
    raise AssertionError("pointed path missing from its own class")


def theta_index(q: PointedLatticePath) -> tuple[LatticePath, int]:
    """Return ``(base, r)`` with ``theta(base, r) == q`` for the canonical base."""
    return _index(q, theta_sequence)


def gamma_index(q: PointedLatticePath) -> tuple[LatticePath, int]:
    return _index(q, gamma_sequence)


def equivalence_class(q: PointedLatticePath) -> frozenset[PointedLatticePath]:
    """Every pointed path whose underlying path is a rotation of ``q.path``."""
    return frozenset(member.realized for member in pointed_class(q.path))
