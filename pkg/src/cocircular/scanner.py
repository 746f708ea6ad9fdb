"""Region scan for the equal-mass uniqueness condition.

The regular n-gon is the unique centered co-circular central
configuration (equal masses, up to relabeling) whenever

    g(n, alpha) = (1/n) sum_{j=1}^{n-1} csc(j pi / n)**alpha <= 1 + alpha/4.

g is the normalized potential of the unit-mass n-gon and increases in
both n and alpha, so for each n there is a critical exponent where the
condition stops holding.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .errors import ConvergenceFailure, InvalidArity, NoBracket, UnsupportedExponent

_ALPHA_SEED = 1.0 / 64.0
_ALPHA_CAP = 64.0
_MAX_BISECT = 200


@dataclass(frozen=True)
class RegionCell:
    """One (n, alpha) grid cell of the condition scan."""

    n: int
    alpha: float
    g_value: float
    threshold: float
    holds: bool


def g_value(n: int, alpha: float) -> float:
    """(1/n) sum_j csc(j pi / n)**alpha, summed in symmetric pairs.

    Terms j and n - j are equal, so each pair is computed once and
    doubled; even n contributes the lone middle term csc(pi/2) = 1.
    """
    if n < 3:
        raise InvalidArity(f"need n >= 3 bodies, got {n}")
    if not (alpha > 0.0 and math.isfinite(alpha)):
        raise UnsupportedExponent(f"alpha must be positive, got {alpha}")
    a_int = int(alpha) if float(alpha).is_integer() and alpha <= 4 else 0
    total = 0.0
    for j in range(1, (n - 1) // 2 + 1):
        s = math.sin(j * math.pi / n)
        total += 2.0 * ((1.0 / s) ** a_int if a_int else s ** -alpha)
    if n % 2 == 0:
        total += 1.0
    return total / n


def condition_threshold(alpha: float) -> float:
    return 1.0 + alpha / 4.0


def scan_region(n_values, alpha_grid, max_workers: int | None = None) -> list[RegionCell]:
    """Evaluate the condition over the (n, alpha) cross product.

    Cells come back sorted by (n, alpha). Workers beyond one evaluate
    cells in parallel without changing the output ordering.
    """
    ns = sorted(set(int(n) for n in n_values))
    alphas = sorted(set(float(a) for a in alpha_grid))
    tasks = [(n, a) for n in ns for a in alphas]
    if max_workers and max_workers > 1 and len(tasks) > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            values = list(pool.map(lambda t: g_value(*t), tasks))
    else:
        values = [g_value(n, a) for n, a in tasks]
    cells = [
        RegionCell(n, a, g, condition_threshold(a), g <= condition_threshold(a))
        for (n, a), g in zip(tasks, values)
    ]
    # g grows with n, so per alpha the holding region is an initial segment
    for a in alphas:
        column = [c.holds for c in cells if c.alpha == a]
        assert all(x or not y for x, y in zip(column, column[1:])), \
            "condition failed to be downward closed in n"
    return cells


def alpha_star(n: int, tol: float = 1e-12) -> float:
    """Critical exponent where g(n, alpha) meets 1 + alpha/4.

    Brackets by doubling from alpha = 1/64, then bisects until the
    residual |g - 1 - alpha/4| drops below tol.
    """
    if n < 3:
        raise InvalidArity(f"need n >= 3 bodies, got {n}")

    def psi(a: float) -> float:
        return g_value(n, a) - condition_threshold(a)

    lo = _ALPHA_SEED
    while psi(lo) >= 0.0:
        lo *= 0.5
        if lo < 1e-12:
            raise NoBracket(f"condition already fails at alpha -> 0 for n = {n}")
    hi = 2.0 * lo
    while psi(hi) < 0.0:
        lo, hi = hi, 2.0 * hi
        if hi > _ALPHA_CAP:
            raise NoBracket(
                f"condition holds for every alpha up to {_ALPHA_CAP} at n = {n}"
            )
    for _ in range(_MAX_BISECT):
        mid = 0.5 * (lo + hi)
        value = psi(mid)
        if abs(value) <= tol:
            return mid
        if value < 0.0:
            lo = mid
        else:
            hi = mid
    raise ConvergenceFailure(
        f"bisection residual above {tol} after {_MAX_BISECT} iterations"
    )
