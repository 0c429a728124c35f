"""Shared run loop: initialize, iterate a step function, record the incumbent."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from ..core import (
    Array,
    ConfigurationError,
    Population,
    Problem,
    RngStream,
    RunResult,
    with_eval_counter,
)


@dataclass(frozen=True)
class Budget:
    """Stop bounds for a run; at least one of the two must be set.

    Bounds are checked between iterations: a run never starts an iteration
    once either bound is reached, so the final iteration may finish slightly
    past ``max_evaluations``.
    """

    max_iterations: Optional[int] = None
    max_evaluations: Optional[int] = None

    def __post_init__(self):
        if self.max_iterations is None and self.max_evaluations is None:
            raise ConfigurationError("budget needs max_iterations or max_evaluations")
        if self.max_iterations is not None and self.max_iterations < 0:
            raise ConfigurationError("max_iterations must be non-negative")
        if self.max_evaluations is not None and self.max_evaluations < 0:
            raise ConfigurationError("max_evaluations must be non-negative")


def _population_best(population: Population) -> tuple[Array, float]:
    best = population.best
    return best.position, best.fitness


@dataclass(frozen=True)
class AlgorithmSpec:
    """Uniform wrapper: how to build a config, initialize, step, and read the
    algorithm's own notion of its current best."""

    name: str
    config_cls: type
    init: Callable[[Problem, object, RngStream], Population]
    step: Callable[[Population, Problem, object, RngStream, int], Population]
    best_view: Callable[[Population], tuple[Array, float]] = _population_best


def run(
    algorithm: AlgorithmSpec,
    config: object,
    problem: Problem,
    budget: Budget,
    seed: int,
) -> RunResult:
    """Execute one seeded run and return its :class:`RunResult`.

    The population is initialized uniformly at random, the step function is
    applied until the first budget bound is exhausted, and the incumbent best
    (never worse than any earlier iteration) is recorded once per iteration.
    Runs with the same algorithm, config, problem, and seed are
    bit-identical; wall time is the only field that varies.
    """
    if not isinstance(config, algorithm.config_cls):
        raise ConfigurationError(
            f"{algorithm.name} expects a {algorithm.config_cls.__name__}, "
            f"got {type(config).__name__}"
        )
    rng = RngStream(seed)
    counted, counter = with_eval_counter(problem)
    started = time.perf_counter()
    population = algorithm.init(counted, config, rng)
    best_position, best_fitness = algorithm.best_view(population)
    best_position = np.array(best_position, dtype=float, copy=True)
    trace = []
    while True:
        if budget.max_iterations is not None and population.generation >= budget.max_iterations:
            break
        if budget.max_evaluations is not None and counter.count >= budget.max_evaluations:
            break
        algorithm.step(population, counted, config, rng, population.generation)
        position, fitness = algorithm.best_view(population)
        if fitness < best_fitness:
            best_fitness = fitness
            best_position = np.array(position, dtype=float, copy=True)
        trace.append(best_fitness)
    return RunResult(
        best_position=best_position,
        best_fitness=best_fitness,
        trace=np.asarray(trace),
        evaluations=counter.count,
        seed=int(seed),
        wall_time=time.perf_counter() - started,
    )
