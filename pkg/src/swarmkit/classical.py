"""Newton iterations for root finding and smooth minimization.

These are the deterministic baselines: fast near a solution, but entirely
dependent on the starting point and undefined where the derivative vanishes.
Failure modes are reported as outcomes, not exceptions, so basin studies can
sweep many starts cheaply.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Union

import numpy as np

from .core import Array, ConfigurationError

CONVERGED = "converged"
DERIVATIVE_VANISHED = "derivative_vanished"
MAX_ITERATIONS = "max_iterations"
DIVERGED = "diverged"

# |derivative| below this is treated as singular (double-precision noise floor
# with margin); iterates beyond DIVERGENCE_LIMIT are reported as diverged
# instead of overflowing.
DERIVATIVE_EPS = 1e-12
DIVERGENCE_LIMIT = 1e12


@dataclass(frozen=True)
class NewtonOutcome:
    """Terminal state of a Newton run.

    ``residual`` is |p(x)| for root finding and the gradient norm for
    optimization; ``iterations`` counts completed updates, so a start that
    already satisfies the tolerance reports zero.
    """

    status: str
    value: Union[float, Array]
    iterations: int
    residual: float

    @property
    def converged(self) -> bool:
        return self.status == CONVERGED


def _check_budget(tol: float, max_iter: int) -> None:
    if not tol > 0:
        raise ConfigurationError("tol must be positive")
    if max_iter < 1:
        raise ConfigurationError("max_iter must be at least 1")


def newton_root(
    p: Callable[[float], float],
    dp: Callable[[float], float],
    x0: float,
    tol: float = 1e-9,
    max_iter: int = 100,
) -> NewtonOutcome:
    """Find a root of ``p`` by iterating x <- x - p(x)/dp(x).

    Stops as soon as |p(x)| <= tol (converged), the derivative magnitude drops
    below ``DERIVATIVE_EPS`` (derivative_vanished), |x| exceeds
    ``DIVERGENCE_LIMIT`` (diverged), or the budget runs out (max_iterations).
    """
    _check_budget(tol, max_iter)
    x = float(x0)
    px = float(p(x))
    if abs(px) <= tol:
        return NewtonOutcome(CONVERGED, x, 0, abs(px))
    for iteration in range(1, max_iter + 1):
        d = float(dp(x))
        if abs(d) < DERIVATIVE_EPS:
            return NewtonOutcome(DERIVATIVE_VANISHED, x, iteration - 1, abs(px))
        x = x - px / d
        if not np.isfinite(x) or abs(x) > DIVERGENCE_LIMIT:
            return NewtonOutcome(DIVERGED, x, iteration, float("inf"))
        px = float(p(x))
        if abs(px) <= tol:
            return NewtonOutcome(CONVERGED, x, iteration, abs(px))
    return NewtonOutcome(MAX_ITERATIONS, x, max_iter, abs(px))


def newton_opt_1d(
    df: Callable[[float], float],
    d2f: Callable[[float], float],
    x0: float,
    tol: float = 1e-9,
    max_iter: int = 100,
) -> NewtonOutcome:
    """Find a stationary point of a scalar function via x <- x - df(x)/d2f(x).

    This is root finding on the first derivative, so the convergence test is
    |df(x)| <= tol and a vanishing second derivative is reported as
    derivative_vanished.
    """
    return newton_root(df, d2f, x0, tol=tol, max_iter=max_iter)


def newton_opt_nd(
    grad: Callable[[Array], Array],
    hessian: Callable[[Array], Array],
    x0: Array,
    tol: float = 1e-8,
    max_iter: int = 100,
) -> NewtonOutcome:
    """Multivariate Newton: solve H(x) s = grad(x) and step x <- x - s.

    The scalar quotient grad/hessian has no matrix meaning, so the step is a
    linear solve. Convergence is declared when the gradient 2-norm falls to
    ``tol``; a singular or ill-conditioned Hessian (condition estimate above
    1/DERIVATIVE_EPS) ends the run with derivative_vanished.
    """
    _check_budget(tol, max_iter)
    x = np.asarray(x0, dtype=float).copy()
    g = np.asarray(grad(x), dtype=float)
    gnorm = float(np.linalg.norm(g))
    if gnorm <= tol:
        return NewtonOutcome(CONVERGED, x, 0, gnorm)
    for iteration in range(1, max_iter + 1):
        h = np.asarray(hessian(x), dtype=float)
        if not np.all(np.isfinite(h)) or np.linalg.cond(h) > 1.0 / DERIVATIVE_EPS:
            return NewtonOutcome(DERIVATIVE_VANISHED, x, iteration - 1, gnorm)
        try:
            step = np.linalg.solve(h, g)
        except np.linalg.LinAlgError:
            return NewtonOutcome(DERIVATIVE_VANISHED, x, iteration - 1, gnorm)
        x = x - step
        if not np.all(np.isfinite(x)) or float(np.linalg.norm(x)) > DIVERGENCE_LIMIT:
            return NewtonOutcome(DIVERGED, x, iteration, float("inf"))
        g = np.asarray(grad(x), dtype=float)
        gnorm = float(np.linalg.norm(g))
        if gnorm <= tol:
            return NewtonOutcome(CONVERGED, x, iteration, gnorm)
    return NewtonOutcome(MAX_ITERATIONS, x, max_iter, gnorm)
