"""Continuous test functions with known optima and hand-coded gradients.

The registry holds the community-standard minimal suite (sphere, rosenbrock,
rastrigin, ackley) plus ``two_mode``, a deliberately bimodal bowl used to
probe whether a population can hold several optima at once. Standard forms
and boxes: sphere/rastrigin on [-5.12, 5.12], rosenbrock on [-5, 10], ackley
on [-32.768, 32.768].
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .core import Array, ConfigurationError, Problem, SearchSpace


class UnknownBenchmarkError(ConfigurationError):
    """Requested benchmark name is not registered; message lists what is."""


@dataclass(frozen=True)
class BenchmarkSpec:
    """A registered benchmark: box, known minimum, objective, optional gradient."""

    name: str
    dimension: int
    space: SearchSpace
    best_position: Array
    best_value: float
    objective: Callable[[Array], float]
    gradient: Optional[Callable[[Array], Array]] = None

    def __post_init__(self):
        if not self.space.contains(self.best_position):
            raise ConfigurationError(f"{self.name}: known minimum lies outside the box")
        value = float(self.objective(np.asarray(self.best_position, dtype=float)))
        if abs(value - self.best_value) > 1e-12:
            raise ConfigurationError(
                f"{self.name}: objective({self.best_position!r}) = {value!r}, "
                f"expected {self.best_value!r}"
            )

    def problem(self) -> Problem:
        return Problem(
            space=self.space,
            objective=self.objective,
            name=self.name,
            known_optimum=(np.asarray(self.best_position, dtype=float), self.best_value),
        )


def sphere(x: Array) -> float:
    x = np.asarray(x, dtype=float)
    return float(x @ x)


def sphere_grad(x: Array) -> Array:
    return 2.0 * np.asarray(x, dtype=float)


def rastrigin(x: Array) -> float:
    x = np.asarray(x, dtype=float)
    return float(10.0 * x.size + np.sum(x * x - 10.0 * np.cos(2.0 * np.pi * x)))


def rastrigin_grad(x: Array) -> Array:
    x = np.asarray(x, dtype=float)
    return 2.0 * x + 20.0 * np.pi * np.sin(2.0 * np.pi * x)


def rosenbrock(x: Array) -> float:
    x = np.asarray(x, dtype=float)
    return float(np.sum(100.0 * (x[1:] - x[:-1] ** 2) ** 2 + (1.0 - x[:-1]) ** 2))


def rosenbrock_grad(x: Array) -> Array:
    x = np.asarray(x, dtype=float)
    g = np.zeros_like(x)
    g[:-1] += -400.0 * x[:-1] * (x[1:] - x[:-1] ** 2) - 2.0 * (1.0 - x[:-1])
    g[1:] += 200.0 * (x[1:] - x[:-1] ** 2)
    return g


def rosenbrock_hessian(x: Array) -> Array:
    x = np.asarray(x, dtype=float)
    d = x.size
    h = np.zeros((d, d))
    idx = np.arange(d - 1)
    h[idx, idx] += 1200.0 * x[:-1] ** 2 - 400.0 * x[1:] + 2.0
    h[idx + 1, idx + 1] += 200.0
    h[idx, idx + 1] += -400.0 * x[:-1]
    h[idx + 1, idx] += -400.0 * x[:-1]
    return h


_ACKLEY_A = 20.0
_ACKLEY_B = 0.2
_ACKLEY_C = 2.0 * np.pi


def ackley(x: Array) -> float:
    x = np.asarray(x, dtype=float)
    d = x.size
    root_term = np.sqrt(np.sum(x * x) / d)
    cos_term = np.sum(np.cos(_ACKLEY_C * x)) / d
    return float(
        -_ACKLEY_A * np.exp(-_ACKLEY_B * root_term) - np.exp(cos_term) + _ACKLEY_A + np.e
    )


def ackley_grad(x: Array) -> Array:
    # Undefined at the origin (the square root has a kink there).
    x = np.asarray(x, dtype=float)
    d = x.size
    root_term = np.sqrt(np.sum(x * x) / d)
    cos_term = np.sum(np.cos(_ACKLEY_C * x)) / d
    first = (_ACKLEY_A * _ACKLEY_B / (d * root_term)) * np.exp(-_ACKLEY_B * root_term) * x
    second = (_ACKLEY_C / d) * np.exp(cos_term) * np.sin(_ACKLEY_C * x)
    return first + second


def _two_mode_objective(c1: Array, c2: Array) -> Callable[[Array], float]:
    def objective(x: Array) -> float:
        x = np.asarray(x, dtype=float)
        d1 = x - c1
        d2 = x - c2
        return float(min(d1 @ d1, d2 @ d2))

    return objective


def _two_mode_gradient(c1: Array, c2: Array) -> Callable[[Array], Array]:
    def gradient(x: Array) -> Array:
        x = np.asarray(x, dtype=float)
        d1 = x - c1
        d2 = x - c2
        return 2.0 * (d1 if d1 @ d1 <= d2 @ d2 else d2)

    return gradient


def two_mode(
    c1: Array,
    c2: Array,
    space: SearchSpace | None = None,
) -> Problem:
    """Bimodal bowl: f(x) = min(|x - c1|^2, |x - c2|^2); both centers are global minima.

    Defaults to the [-5.12, 5.12] box of the centers' dimension; both centers
    must be distinct and lie inside the box.
    """
    c1 = np.asarray(c1, dtype=float)
    c2 = np.asarray(c2, dtype=float)
    if c1.shape != c2.shape or c1.ndim != 1:
        raise ConfigurationError("centers must be 1-D and the same length")
    if np.array_equal(c1, c2):
        raise ConfigurationError("two_mode centers must be distinct")
    if space is None:
        space = SearchSpace(np.full(c1.size, -5.12), np.full(c1.size, 5.12))
    if not (space.contains(c1) and space.contains(c2)):
        raise ConfigurationError("two_mode centers must lie inside the box")
    return Problem(
        space=space,
        objective=_two_mode_objective(c1, c2),
        name="two_mode",
        known_optimum=(c1.copy(), 0.0),
    )


def two_mode_centers(dimension: int) -> tuple[Array, Array]:
    """Default centers used by the registry: +/-2.5 along every coordinate."""
    return np.full(dimension, -2.5), np.full(dimension, 2.5)


def _symmetric_space(dimension: int, half_width: float) -> SearchSpace:
    return SearchSpace(np.full(dimension, -half_width), np.full(dimension, half_width))


def get_spec(name: str, dimension: int) -> BenchmarkSpec:
    """Build the registered benchmark at the given dimension.

    Raises :class:`UnknownBenchmarkError` for unregistered names; the message
    lists what is available.
    """
    if dimension < 1:
        raise ConfigurationError("dimension must be at least 1")
    if name == "sphere":
        return BenchmarkSpec(
            name, dimension, _symmetric_space(dimension, 5.12),
            np.zeros(dimension), 0.0, sphere, sphere_grad,
        )
    if name == "rastrigin":
        return BenchmarkSpec(
            name, dimension, _symmetric_space(dimension, 5.12),
            np.zeros(dimension), 0.0, rastrigin, rastrigin_grad,
        )
    if name == "rosenbrock":
        if dimension < 2:
            raise ConfigurationError("rosenbrock needs dimension >= 2")
        return BenchmarkSpec(
            name, dimension,
            SearchSpace(np.full(dimension, -5.0), np.full(dimension, 10.0)),
            np.ones(dimension), 0.0, rosenbrock, rosenbrock_grad,
        )
    if name == "ackley":
        return BenchmarkSpec(
            name, dimension, _symmetric_space(dimension, 32.768),
            np.zeros(dimension), 0.0, ackley, ackley_grad,
        )
    if name == "two_mode":
        c1, c2 = two_mode_centers(dimension)
        return BenchmarkSpec(
            name, dimension, _symmetric_space(dimension, 5.12),
            c1, 0.0, _two_mode_objective(c1, c2), _two_mode_gradient(c1, c2),
        )
    raise UnknownBenchmarkError(
        f"unknown benchmark {name!r}; available: {', '.join(available_names())}"
    )


def lookup(name: str, dimension: int) -> Problem:
    """Return the named benchmark as a ready-to-run :class:`Problem`."""
    return get_spec(name, dimension).problem()


def available_names() -> list[str]:
    return ["sphere", "rosenbrock", "rastrigin", "ackley", "two_mode"]
