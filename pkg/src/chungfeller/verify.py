"""Exhaustive checks of every flat-distribution identity over a grid of (n, m).

Each check records what was expected, what was observed, and whether they
agree exactly. Check order is fixed by the grid and suite order, so reports
are reproducible byte for byte.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import asdict, dataclass, field
from itertools import accumulate
from typing import Any, Callable, Iterable, Sequence

from . import bijections as bj
from .core import LatticePath, Step, cyclic_permutation, npl, rml
from .enumeration import (
    PRESETS,
    CountKind,
    Statistic,
    catalan,
    count_closed_form,
    count_paths,
    enumerate_paths,
    enumerate_step_set_paths,
    histogram,
    require_cap,
    y_sequences,
)
from .pointed import PointedLatticePath, gamma, pnpl, pointed_class, prml, theta

SUITES = ("npl", "rml", "pointed", "stepsets")


@dataclass
class Check:
    name: str
    params: dict[str, Any]
    expected: Any
    observed: Any

    @property
    def passed(self) -> bool:
        return self.expected == self.observed

    def to_json(self) -> dict:
        d = asdict(self)
        d["expected"] = _jsonable(self.expected)
        d["observed"] = _jsonable(self.observed)
        d["pass"] = self.passed
        return d


def _jsonable(value: Any) -> Any:
    # counts may exceed 53 bits; emit every integer as a decimal string
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


@dataclass
class VerificationReport:
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, params: dict, expected: Any, observed: Any) -> Check:
        check = Check(name, dict(params), expected, observed)
        self.checks.append(check)
        return check

    @property
    def failed(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    @property
    def ok(self) -> bool:
        return not self.failed

    def summary(self) -> dict[str, int]:
        return {"total": len(self.checks), "passed": len(self.checks) - len(self.failed),
                "failed": len(self.failed)}

    def to_json(self) -> dict:
        return {"summary": self.summary(), "checks": [c.to_json() for c in self.checks]}


def bijection_report(
    fn: Callable[[LatticePath], LatticePath],
    inverse: Callable[[LatticePath], LatticePath],
    domain: Sequence[LatticePath],
    codomain: Sequence[LatticePath],
) -> dict[str, bool]:
    """Injectivity, image equality and two-sided round trip of ``fn`` between finite sets."""
    images = [fn(p) for p in domain]
    return {
        "injective": len(set(images)) == len(domain),
        "onto": set(images) == set(codomain),
        "left_inverse": all(inverse(q) == p for p, q in zip(domain, images)),
        "right_inverse": all(fn(inverse(q)) == q for q in codomain),
    }


_ALL_TRUE = {"injective": True, "onto": True, "left_inverse": True, "right_inverse": True}


def _level_sets(paths: Iterable[LatticePath], stat) -> dict[int, list[LatticePath]]:
    levels: dict[int, list[LatticePath]] = defaultdict(list)
    for p in paths:
        levels[stat(p)].append(p)
    return levels


def _check_plain(report: VerificationReport, n: int, m: int, which: str) -> None:
    stat, fwd, inv, zero, zero_inv = {
        "npl": (npl, bj.phi, bj.phi_inv, bj.phi_zero, bj.phi_zero_inv),
        "rml": (rml, bj.psi, bj.psi_inv, bj.psi_zero, bj.psi_zero_inv),
    }[which]
    params = {"n": n, "m": m}
    paths = list(enumerate_paths(n, m))
    report.add("path_count", params, count_paths(n, m), len(paths))

    dist = histogram(n, m, which)
    expected = {r: count_closed_form(CountKind.NPL_ZERO_TILDE, n, m) for r in range(1, m)}
    expected[0] = count_closed_form(CountKind.NPL_ZERO, n, m)
    report.add(f"{which}_histogram", params, dict(sorted(expected.items())), dist.counts)

    levels = _level_sets(paths, stat)
    tilde = [p for p in levels[0] if p.steps[-1].x == 1]
    report.add(f"{which}_zero_tilde_count", params,
               count_closed_form(CountKind.NPL_ZERO_TILDE, n, m), len(tilde))
    report.add(f"{which}_zero_map_bijective", params, _ALL_TRUE,
               bijection_report(zero, zero_inv, tilde, levels[1]))
    for r in range(1, m - 1):
        report.add(f"{which}_shift_bijective", {**params, "r": r}, _ALL_TRUE,
                   bijection_report(fwd, inv, levels[r], levels[r + 1]))
    report.add("npl_zero_iff_rml_zero", params, True,
               all((npl(p) == 0) == (rml(p) == 0) for p in paths))


def nonpositive_prefix_count(ys: Sequence[int]) -> int:
    """Number of prefix sums of ``ys`` that are at most zero."""
    return sum(1 for a in accumulate(ys) if a <= 0)


def mohanty_report(n: int) -> dict[str, Any]:
    """Check the m = n + 1 specialisation for every y-sequence of order ``n``."""
    rotations_ok = True
    per_value: Counter[int] = Counter()
    for ys in y_sequences(n):
        path = LatticePath(tuple(Step(1, y) for y in ys))
        values = sorted(pnpl(PointedLatticePath(cyclic_permutation(path, i), 0))
                        for i in range(1, n + 2))
        if values != list(range(n + 1)):
            rotations_ok = False
        e = nonpositive_prefix_count(ys)
        if e != pnpl(PointedLatticePath(path, 0)):
            rotations_ok = False
        per_value[e] += 1
    return {"rotations_distinct": rotations_ok, "per_value": dict(sorted(per_value.items()))}


def _check_pointed(report: VerificationReport, n: int, m: int) -> None:
    params = {"n": n, "m": m}
    per_r = count_closed_form(CountKind.POINTED_PER_R, n, m)
    flat = {r: per_r for r in range(m)}
    for stat in (Statistic.PNPL, Statistic.PRML):
        report.add(f"{stat.value}_histogram", params, flat, histogram(n, m, stat).counts)

    paths = list(enumerate_paths(n, m))
    theta_ok = all(pnpl(theta(p, r)) == r - 1 for p in paths for r in range(1, m + 1))
    gamma_ok = all(prml(gamma(p, r)) == r - 1 for p in paths for r in range(1, m + 1))
    report.add("theta_pointwise", params, True, theta_ok)
    report.add("gamma_pointwise", params, True, gamma_ok)

    classes = set()
    sizes_ok = True
    for p in paths:
        members = frozenset(c.realized for c in pointed_class(p))
        sizes_ok &= len(members) == m
        classes.add(members)
    report.add("class_sizes", params, True, sizes_ok)
    report.add("class_count", params, per_r, len(classes))
    report.add("pointed_total", params, count_closed_form(CountKind.POINTED_TOTAL, n, m),
               sum(len(c) for c in classes))

    if m == n + 1:
        result = mohanty_report(n)
        report.add("mohanty_rotations", params, True, result["rotations_distinct"])
        report.add("mohanty_per_value", params, {e: catalan(n) for e in range(n + 1)},
                   result["per_value"])


def _check_step_sets(report: VerificationReport, n: int, m: int) -> None:
    for name, step_set in PRESETS.items():
        paths = list(enumerate_step_set_paths(step_set, n + 1, m))
        if not paths:
            continue
        params = {"n": n, "m": m, "step_set": name}
        allowed = step_set.steps
        report.add("stepset_membership", params, True,
                   all(set(p.steps) <= allowed for p in paths))
        for stat in (Statistic.PNPL, Statistic.PRML):
            dist = histogram(n, m, stat, step_set)
            per_r = dist.total // m
            report.add(f"stepset_{stat.value}_flat", params,
                       {r: per_r for r in range(m)}, dist.counts)


def grid(n_values: Iterable[int], m_offsets: Iterable[int] | None = None,
         m_values: Iterable[int] | None = None) -> list[tuple[int, int]]:
    """(n, m) pairs; ``m_offsets`` gives m = n + 1 + offset, ``m_values`` gives m directly."""
    out = []
    for n in n_values:
        if m_values is not None:
            out.extend((n, m) for m in m_values if m >= n + 1)
        else:
            out.extend((n, n + 1 + k) for k in (m_offsets if m_offsets is not None else range(4)))
    return out


def run(pairs: Sequence[tuple[int, int]], suite: str = "all") -> VerificationReport:
    """Run a suite over the (n, m) grid. Refuses the whole grid if any pair exceeds the cap."""
    suites = SUITES if suite == "all" else (suite,)
    for s in suites:
        if s not in SUITES:
            raise ValueError(f"unknown suite {suite!r}")
    for n, m in pairs:
        require_cap(count_closed_form(CountKind.POINTED_TOTAL, n, m), f"verify n={n}, m={m}")
    report = VerificationReport()
    for n, m in pairs:
        if "npl" in suites:
            _check_plain(report, n, m, "npl")
        if "rml" in suites:
            _check_plain(report, n, m, "rml")
        if "pointed" in suites:
            _check_pointed(report, n, m)
        if "stepsets" in suites:
            _check_step_sets(report, n, m)
    return report
