"""Exhaustive generators, closed-form counts, histograms and sampling.

Generators are lazy and deterministic. Anything that would stream more than
:func:`enumeration_cap` items raises :class:`CapExceeded` up front instead of
running for hours; the cap defaults to ``10**7`` and can be overridden with
the ``CF_ENUM_CAP`` environment variable.
"""

from __future__ import annotations

import csv
import enum
import io
import itertools
import os
import random
from collections import Counter
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Iterator, Sequence

from .core import LatticePath, Step, npl, rml
from .errors import CapExceeded, InvalidRange, NonDivisible
from .pointed import PointedLatticePath, gamma, pnpl, prml, theta

DEFAULT_CAP = 10**7


def enumeration_cap() -> int:
    value = os.environ.get("CF_ENUM_CAP")
    return int(value) if value else DEFAULT_CAP


def require_cap(count: int, what: str) -> None:
    cap = enumeration_cap()
    if count > cap:
        raise CapExceeded(f"{what}: {count} items exceeds the enumeration cap {cap}")


def _check_nm(n: int, m: int) -> None:
    if n < 1 or m < n + 1:
        raise InvalidRange(f"need n >= 1 and m >= n + 1, got n={n}, m={m}")


def _bounded(length: int, total: int, lo: int, hi: int) -> Iterator[tuple[int, ...]]:
    """Integer sequences with entries in ``[lo, hi]`` summing to ``total``, lexicographically."""
    if length == 0:
        if total == 0:
            yield ()
        return
    rest = length - 1
    first_lo = max(lo, total - rest * hi)
    first_hi = min(hi, total - rest * lo)
    for first in range(first_lo, first_hi + 1):
        for tail in _bounded(rest, total - first, lo, hi):
            yield (first,) + tail


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Sequences of ``parts`` positive integers summing to ``total``, in lexicographic order."""
    if parts < 1 or total < parts:
        raise InvalidRange(f"need parts >= 1 and total >= parts, got total={total}, parts={parts}")
    return _bounded(parts, total, 1, total - parts + 1)


def y_sequences(n: int) -> Iterator[tuple[int, ...]]:
    """Length ``n + 1`` height-change sequences with entries in ``[1 - n, 1]`` summing to 1."""
    if n < 1:
        raise InvalidRange(f"need n >= 1, got {n}")
    return _bounded(n + 1, 1, 1 - n, 1)


def enumerate_paths(n: int, m: int) -> Iterator[LatticePath]:
    """Every (n,m)-lattice path once, ordered by composition then by y-sequence."""
    _check_nm(n, m)
    require_cap(count_paths(n, m), f"paths for n={n}, m={m}")
    ys = list(y_sequences(n))
    for xs in compositions(m, n + 1):
        for y in ys:
            yield LatticePath(tuple(map(Step, xs, y)))


def enumerate_pointed(n: int, m: int) -> Iterator[PointedLatticePath]:
    _check_nm(n, m)
    require_cap(count_closed_form(CountKind.POINTED_TOTAL, n, m), f"pointed paths for n={n}, m={m}")
    for path in enumerate_paths(n, m):
        for j in range(path.steps[-1].x):
            yield PointedLatticePath(path, j)


def brute_force_paths(n: int, m: int) -> list[LatticePath]:
    """Filter the x- and y-boxes by brute force and cross them.

    An oracle independent of :func:`compositions` and :func:`y_sequences`.
    """
    _check_nm(n, m)
    require_cap((m - n) ** (n + 1) + (n + 1) ** (n + 1), f"brute force for n={n}, m={m}")
    xs = [c for c in itertools.product(range(1, m - n + 1), repeat=n + 1) if sum(c) == m]
    ys = [c for c in itertools.product(range(1 - n, 2), repeat=n + 1) if sum(c) == 1]
    return [LatticePath(tuple(map(Step, x, y))) for x in xs for y in ys]


def catalan(n: int) -> int:
    if n < 0:
        raise InvalidRange(f"need n >= 0, got {n}")
    return comb(2 * n, n) // (n + 1)


def count_paths(n: int, m: int) -> int:
    return comb(2 * n, n) * comb(m - 1, n)


class CountKind(enum.Enum):
    NPL_ZERO = "npl_zero"
    NPL_ZERO_TILDE = "npl_zero_tilde"
    POINTED_TOTAL = "pointed_total"
    POINTED_PER_R = "pointed_per_r"


def count_closed_form(kind: CountKind | str, n: int, m: int) -> int:
    kind = CountKind(kind)
    _check_nm(n, m)
    if kind is CountKind.NPL_ZERO:
        return comb(m - 1, n) * catalan(n)
    if kind is CountKind.NPL_ZERO_TILDE:
        return comb(m - 2, n - 1) * catalan(n)
    total = comb(2 * n, n) * comb(m, n + 1)
    if kind is CountKind.POINTED_TOTAL:
        return total
    per_r, rem = divmod(total, m)
    if rem:
        raise NonDivisible(f"C(2n,n)*C(m,n+1) = {total} is not divisible by m = {m}")
    return per_r


class Statistic(enum.Enum):
    NPL = "npl"
    RML = "rml"
    PNPL = "pnpl"
    PRML = "prml"

    @property
    def pointed(self) -> bool:
        return self in (Statistic.PNPL, Statistic.PRML)

    @classmethod
    def parse(cls, value: Statistic | str) -> Statistic:
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise InvalidRange(f"unknown statistic {value!r}") from None


_STAT_FN = {Statistic.NPL: npl, Statistic.RML: rml, Statistic.PNPL: pnpl, Statistic.PRML: prml}


@dataclass
class Distribution:
    """Exact histogram of a statistic; every value in ``0 .. m-1`` is present."""

    n: int
    m: int
    statistic: Statistic
    counts: dict[int, int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def is_flat(self) -> bool:
        return len(set(self.counts.values())) <= 1

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "statistic": self.statistic.name,
            "counts": {str(r): str(c) for r, c in sorted(self.counts.items())},
            "total": str(self.total),
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["r", "count"])
        for r, c in sorted(self.counts.items()):
            writer.writerow([r, c])
        return buf.getvalue()


@dataclass(frozen=True)
class StepSet:
    """Admissible steps: ``(1,1)``, ``(2i-1,-1)`` for ``i`` in ``down_lengths``, ``(2i,0)`` for ``i`` in ``flat_lengths``.

    ``explicit`` replaces that grammar with an arbitrary list of steps; this is
    how flat unit steps ``(1,0)`` are expressed.
    """

    down_lengths: frozenset[int] = frozenset()
    flat_lengths: frozenset[int] = frozenset()
    explicit: frozenset[Step] | None = None

    def __post_init__(self) -> None:
        for i in itertools.chain(self.down_lengths, self.flat_lengths):
            if i < 1:
                raise InvalidRange(f"step-set lengths must be positive, got {i}")
        if self.explicit is not None:
            for s in self.explicit:
                if s[0] < 1 or s[1] > 1:
                    raise InvalidRange(f"explicit step {tuple(s)} needs x >= 1 and y <= 1")

    @classmethod
    def from_steps(cls, steps: Iterable[Sequence[int]]) -> StepSet:
        return cls(explicit=frozenset(Step(int(x), int(y)) for x, y in steps))

    @property
    def steps(self) -> frozenset[Step]:
        if self.explicit is not None:
            return self.explicit
        s = {Step(1, 1)}
        s.update(Step(2 * i - 1, -1) for i in self.down_lengths)
        s.update(Step(2 * i, 0) for i in self.flat_lengths)
        return frozenset(s)


PRESETS: dict[str, StepSet] = {
    "dyck": StepSet(down_lengths=frozenset({1})),
    "schroeder": StepSet(down_lengths=frozenset({1}), flat_lengths=frozenset({1})),
    "motzkin": StepSet.from_steps([(1, 1), (1, -1), (1, 0)]),
}


def enumerate_step_set_paths(step_set: StepSet, order: int, length: int) -> Iterator[LatticePath]:
    """All paths with ``order`` steps from S ending at ``(length, 1)``, by depth-first search."""
    n, m = order - 1, length
    _check_nm(n, m)
    steps = sorted(s for s in step_set.steps if 1 - n <= s.y <= 1 and s.x <= m)
    if not steps:
        return
    min_x, max_x = min(s.x for s in steps), max(s.x for s in steps)
    min_y, max_y = min(s.y for s in steps), max(s.y for s in steps)
    cap = enumeration_cap()
    produced = 0
    prefix: list[Step] = []

    def feasible(k: int, rx: int, ry: int) -> bool:
        return k * min_x <= rx <= k * max_x and k * min_y <= ry <= k * max_y

    def walk(k: int, rx: int, ry: int) -> Iterator[LatticePath]:
        nonlocal produced
        if k == 0:
            if rx == 0 and ry == 0:
                produced += 1
                if produced > cap:
                    raise CapExceeded(f"step-set enumeration exceeds the cap {cap}")
                yield LatticePath(tuple(prefix))
            return
        for s in steps:
            if feasible(k - 1, rx - s.x, ry - s.y):
                prefix.append(s)
                yield from walk(k - 1, rx - s.x, ry - s.y)
                prefix.pop()

    if feasible(order, m, 1):
        yield from walk(order, m, 1)


def _pointed_of(paths: Iterable[LatticePath]) -> Iterator[PointedLatticePath]:
    for path in paths:
        for j in range(path.steps[-1].x):
            yield PointedLatticePath(path, j)


def histogram(
    n: int, m: int, statistic: Statistic | str, step_set: StepSet | None = None
) -> Distribution:
    """Exact distribution of ``statistic`` over all (optionally step-restricted) paths.

    Plain statistics range over plain paths, pointed ones over pointed paths.
    """
    stat = Statistic.parse(statistic)
    _check_nm(n, m)
    if step_set is None:
        paths: Iterable[LatticePath] = enumerate_paths(n, m)
    else:
        paths = enumerate_step_set_paths(step_set, n + 1, m)
    items = _pointed_of(paths) if stat.pointed else paths
    if stat.pointed and step_set is None:
        require_cap(count_closed_form(CountKind.POINTED_TOTAL, n, m), "pointed histogram")
    fn = _STAT_FN[stat]
    observed = Counter(fn(item) for item in items)
    counts = {r: observed.get(r, 0) for r in range(m)}
    if set(observed) - set(counts):
        raise AssertionError(f"statistic values outside [0, {m - 1}]: {sorted(observed)}")
    return Distribution(n, m, stat, counts)


def random_composition(rng: random.Random, total: int, parts: int) -> tuple[int, ...]:
    cuts = sorted(rng.sample(range(1, total), parts - 1))
    edges = [0, *cuts, total]
    return tuple(b - a for a, b in zip(edges, edges[1:]))


def random_y_sequence(rng: random.Random, n: int) -> tuple[int, ...]:
    # y_i = 1 - d_i where d is a weak composition of n into n + 1 parts (stars and bars)
    bars = sorted(rng.sample(range(2 * n), n))
    d = [bars[0]] + [b - a - 1 for a, b in zip(bars, bars[1:])] + [2 * n - 1 - bars[-1]]
    return tuple(1 - v for v in d)


def uniform_sample(
    n: int, m: int, statistic: Statistic | str, target_r: int, rng_seed: int
) -> PointedLatticePath:
    """Uniform pointed path with the given statistic value, deterministic per seed.

    Draws a uniform plain path and returns the unique member of its cyclic
    class with the requested value. Classes all have ``n + 1`` distinct plain
    rotations, so each class is hit with equal probability.
    """
    stat = Statistic.parse(statistic)
    _check_nm(n, m)
    if not 0 <= target_r <= m - 1:
        raise InvalidRange(f"target {target_r} outside [0, {m - 1}]")
    rng = random.Random(rng_seed)
    xs = random_composition(rng, m, n + 1)
    ys = random_y_sequence(rng, n)
    path = LatticePath(tuple(map(Step, xs, ys)))
    pick = theta if stat in (Statistic.NPL, Statistic.PNPL) else gamma
    return pick(path, target_r + 1)
