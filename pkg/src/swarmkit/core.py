"""Shared problem representation, population bookkeeping, and seeded randomness.

Everything else in the package builds on these pieces: a box-bounded search
space, an objective wrapped as a :class:`Problem`, agents/populations, a
deterministic random stream, and the :class:`RunResult` record that every
optimizer run produces.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

Array = np.ndarray
Objective = Callable[[Array], float]


class ConfigurationError(ValueError):
    """Invalid configuration: bad parameter range, unresolvable name, missing budget."""


class EvaluationError(RuntimeError):
    """The objective returned a non-finite value; carries the offending position."""

    def __init__(self, position: Array, value: float):
        self.position = np.asarray(position, dtype=float)
        self.value = float(value)
        super().__init__(
            f"objective returned non-finite value {self.value!r} at {self.position.tolist()!r}"
        )


@dataclass(frozen=True)
class SearchSpace:
    """Axis-aligned feasible box: lower[k] <= x[k] <= upper[k] per coordinate."""

    lower: Array
    upper: Array

    def __post_init__(self):
        lower = np.atleast_1d(np.asarray(self.lower, dtype=float))
        upper = np.atleast_1d(np.asarray(self.upper, dtype=float))
        if lower.ndim != 1 or upper.ndim != 1 or lower.size != upper.size:
            raise ConfigurationError("lower and upper must be 1-D and the same length")
        if lower.size < 1:
            raise ConfigurationError("dimension must be at least 1")
        if not (np.all(np.isfinite(lower)) and np.all(np.isfinite(upper))):
            raise ConfigurationError("bounds must be finite")
        if not np.all(lower < upper):
            raise ConfigurationError("every lower bound must be strictly below its upper bound")
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)

    @property
    def dimension(self) -> int:
        return self.lower.size

    @property
    def widths(self) -> Array:
        return self.upper - self.lower

    def contains(self, position: Array) -> bool:
        x = np.asarray(position, dtype=float)
        return bool(np.all(x >= self.lower) and np.all(x <= self.upper))


@dataclass(frozen=True)
class Problem:
    """A minimization objective over a box, with an optional known optimum.

    The objective must return a finite float for every position inside the box
    and must be free of side effects visible to later evaluations.
    """

    space: SearchSpace
    objective: Objective
    name: str = ""
    known_optimum: Optional[tuple[Array, float]] = None


@dataclass
class Agent:
    """One population member: a position, its fitness, and algorithm state."""

    position: Array
    fitness: float
    aux: object = None


@dataclass
class Population:
    """Ordered agents plus the index of the current best and an iteration counter."""

    agents: list[Agent]
    best_index: int = 0
    generation: int = 0

    @property
    def size(self) -> int:
        return len(self.agents)

    @property
    def best(self) -> Agent:
        return self.agents[self.best_index]


class RngStream:
    """Deterministic random stream with a fixed draw-order contract.

    Backed by numpy's PCG64 (a member of the permuted-congruential generator
    family, fully documented and platform independent): identical seeds give
    identical draw sequences. All stochastic code in this package draws
    exclusively through one of these streams, in an order documented by each
    consumer, so seeded runs are bit-reproducible.
    """

    __slots__ = ("seed", "_gen")

    def __init__(self, seed: int):
        self.seed = int(seed)
        self._gen = np.random.Generator(np.random.PCG64(self.seed))

    def uniform(self) -> float:
        """One uniform draw in [0, 1)."""
        return float(self._gen.random())

    def uniforms(self, size: int) -> Array:
        """`size` uniform draws in [0, 1)."""
        return self._gen.random(size)

    def uniform_in(self, low: float, high: float, size: int | None = None):
        """Uniform draw(s) in [low, high)."""
        out = self._gen.uniform(low, high, size)
        return out if size is not None else float(out)

    def integer(self, n: int) -> int:
        """One uniform integer in [0, n)."""
        return int(self._gen.integers(n))

    def normal(self) -> float:
        """One standard normal draw."""
        return float(self._gen.standard_normal())

    def normals(self, size: int) -> Array:
        """`size` standard normal draws."""
        return self._gen.standard_normal(size)

    def permutation(self, n: int) -> Array:
        """A uniformly random permutation of 0..n-1."""
        return self._gen.permutation(n)


@dataclass
class RunResult:
    """Outcome of one seeded optimizer run.

    ``trace`` records the incumbent (best-so-far) fitness after each iteration,
    so it is non-increasing by construction and has one entry per iteration
    executed. ``evaluations`` counts every objective call, including the ones
    spent evaluating the initial population. ``wall_time`` is informational
    only and never part of reproducibility comparisons.
    """

    best_position: Array
    best_fitness: float
    trace: Array
    evaluations: int
    seed: int
    wall_time: float


class EvalCounter:
    """Mutable objective-call counter; see :func:`with_eval_counter`."""

    __slots__ = ("count",)

    def __init__(self):
        self.count = 0


def with_eval_counter(problem: Problem) -> tuple[Problem, EvalCounter]:
    """Wrap a problem so every objective call increments a shared counter."""
    counter = EvalCounter()
    inner = problem.objective

    def counted(x: Array) -> float:
        counter.count += 1
        return inner(x)

    wrapped = Problem(
        space=problem.space,
        objective=counted,
        name=problem.name,
        known_optimum=problem.known_optimum,
    )
    return wrapped, counter


def evaluate(problem: Problem, position: Array) -> float:
    """Evaluate the objective at ``position`` (must lie inside the box).

    Raises :class:`EvaluationError` if the objective produces a non-finite
    value, carrying the position and the raw value for diagnosis.
    """
    value = float(problem.objective(np.asarray(position, dtype=float)))
    if not np.isfinite(value):
        raise EvaluationError(position, value)
    return value


def clamp_to_bounds(position: Array, space: SearchSpace) -> Array:
    """Clamp each coordinate into its bound interval; idempotent."""
    return np.clip(np.asarray(position, dtype=float), space.lower, space.upper)


def update_best(population: Population) -> int:
    """Point ``best_index`` at the minimal-fitness agent (ties: lowest index)."""
    fitnesses = np.array([agent.fitness for agent in population.agents])
    population.best_index = int(np.argmin(fitnesses))
    return population.best_index


def random_position(space: SearchSpace, rng: RngStream) -> Array:
    """Uniform position in the box: lower + r * (upper - lower), one r per coordinate.

    Consumes exactly ``dimension`` uniform draws.
    """
    return space.lower + rng.uniforms(space.dimension) * space.widths
