"""Slow, definition-level reference computations on raw step tuples.

Nothing here imports the package, so these stay independent of the code under test.
"""

from itertools import product


def raw_paths(n, m):
    """Every (n,m)-lattice path as a tuple of (x, y) pairs.

    The x- and y-boxes are filtered separately by brute force, then crossed.
    """
    xs = [c for c in product(range(1, m - n + 1), repeat=n + 1) if sum(c) == m]
    ys = [c for c in product(range(1 - n, 2), repeat=n + 1) if sum(c) == 1]
    return [tuple(zip(x, y)) for x in xs for y in ys]


def heights(steps):
    out, a = [], 0
    for _, y in steps:
        a += y
        out.append(a)
    return out


def npl(steps):
    total = 0
    for i in range(len(steps)):
        if sum(y for _, y in steps[: i + 1]) <= 0:
            total += steps[i][0]
    return total


def rml(steps):
    points = [(0, 0)]
    for x, y in steps:
        points.append((points[-1][0] + x, points[-1][1] + y))
    low = min(a for _, a in points)
    return max(b for b, a in points if a == low)


def pointed(steps):
    return [(steps, j) for j in range(steps[-1][0])]


def binom(n, k):
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= n - i
        den *= i + 1
    return num // den
