"""Level-shifting bijections on plain paths.

``phi`` moves a path from non-positive length ``r`` to ``r + 1`` and
``psi`` does the same for the rightmost minimum length. The ``*_zero``
maps connect the level-0 paths whose last step has ``x = 1`` to level 1.
Every map checks its domain eagerly and raises instead of falling through.
"""

from __future__ import annotations

from typing import Callable, Iterator

from .core import LatticePath, cyclic_permutation, npl, path_order, rml
from .errors import PreconditionNPL, PreconditionRML, PreconditionZeroTilde


def _shift_length(path: LatticePath, i: int, delta: int) -> LatticePath:
    # moves `delta` units of x-length from the last step to step i
    steps = [list(s) for s in path.steps]
    steps[i - 1][0] += delta
    steps[-1][0] -= delta
    return path.with_steps(steps)


def phi(path: LatticePath) -> LatticePath:
    r = npl(path)
    m, n = path.m, path.n
    if not 1 <= r <= m - 2:
        raise PreconditionNPL(f"phi needs 1 <= NPL <= {m - 2}, got {r}")
    order = path_order(path)
    k = order.index(n + 1) + 1
    if k <= n:
        if path.x(n + 1) == 1:
            return cyclic_permutation(path, order[k])  # pi(k+1)
        return _shift_length(path, order[k - 2], 1)  # pi(k-1)
    return _shift_length(path, order[n - 1], 1)  # pi(n)


def phi_inv(path: LatticePath) -> LatticePath:
    r = npl(path)
    m, n = path.m, path.n
    if not 2 <= r <= m - 1:
        raise PreconditionNPL(f"phi_inv needs 2 <= NPL <= {m - 1}, got {r}")
    order = path_order(path)
    k = order.index(n + 1) + 1
    i = order[k - 2]
    if path.x(i) == 1:
        return cyclic_permutation(path, i)
    return _shift_length(path, i, -1)


def phi_zero(path: LatticePath) -> LatticePath:
    n = path.n
    if npl(path) != 0 or path.x(n + 1) != 1:
        raise PreconditionZeroTilde("phi_zero needs NPL = 0 and last step of length 1")
    return cyclic_permutation(path, path_order(path)[1])


def phi_zero_inv(path: LatticePath) -> LatticePath:
    if npl(path) != 1:
        raise PreconditionNPL(f"phi_zero_inv needs NPL = 1, got {npl(path)}")
    return cyclic_permutation(path, path_order(path)[0])


def _last_to_front(path: LatticePath) -> LatticePath:
    return cyclic_permutation(path, path.n)


def _first_to_back(path: LatticePath) -> LatticePath:
    return cyclic_permutation(path, 1)


def psi(path: LatticePath) -> LatticePath:
    r = rml(path)
    m, n = path.m, path.n
    if not 1 <= r <= m - 2:
        raise PreconditionRML(f"psi needs 1 <= RML <= {m - 2}, got {r}")
    if path.x(n + 1) == 1:
        return _last_to_front(path)
    return _shift_length(path, 1, 1)


def psi_inv(path: LatticePath) -> LatticePath:
    r = rml(path)
    m = path.m
    if not 2 <= r <= m - 1:
        raise PreconditionRML(f"psi_inv needs 2 <= RML <= {m - 1}, got {r}")
    if path.x(1) == 1:
        return _first_to_back(path)
    return _shift_length(path, 1, -1)


def psi_zero(path: LatticePath) -> LatticePath:
    if rml(path) != 0 or path.x(path.n + 1) != 1:
        raise PreconditionZeroTilde("psi_zero needs RML = 0 and last step of length 1")
    return _last_to_front(path)


def psi_zero_inv(path: LatticePath) -> LatticePath:
    if rml(path) != 1:
        raise PreconditionRML(f"psi_zero_inv needs RML = 1, got {rml(path)}")
    return _first_to_back(path)


MAPS: dict[str, Callable[[LatticePath], LatticePath]] = {
    "phi": phi,
    "phi_inv": phi_inv,
    "phi_zero": phi_zero,
    "phi_zero_inv": phi_zero_inv,
    "psi": psi,
    "psi_inv": psi_inv,
    "psi_zero": psi_zero,
    "psi_zero_inv": psi_zero_inv,
}


def orbit(name: str, path: LatticePath) -> Iterator[LatticePath]:
    """Yield ``path`` and then each image under the named map until its domain ends.

    The zero-level maps are applied once; their images leave the domain.
    """
    fn = MAPS[name]
    yield path
    while True:
        try:
            path = fn(path)
        except (PreconditionNPL, PreconditionRML, PreconditionZeroTilde):
            return
        yield path
