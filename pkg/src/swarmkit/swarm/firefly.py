"""Firefly search: pairwise attraction with distance-dimmed visibility.

Every firefly is compared against every other; whenever the other one is
brighter (lower fitness), the dimmer one moves toward it by an attraction
that decays as exp(-gamma * r^2), plus a normally distributed perturbation
whose strength shrinks geometrically over the iterations. Moves are kept
only if they improve the mover, and because attraction fades with distance
the swarm can settle on several optima at once instead of collapsing onto
one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..core import (
    Agent,
    ConfigurationError,
    Population,
    Problem,
    RngStream,
    SearchSpace,
    clamp_to_bounds,
    evaluate,
    random_position,
    update_best,
)


@dataclass(frozen=True)
class FireflyConfig:
    """beta0 is the attraction at zero distance, gamma the absorption (None
    defers to :func:`default_gamma` of the problem's box), alpha0 the initial
    perturbation strength and delta its per-iteration reduction factor."""

    n: int = 25
    beta0: float = 1.0
    gamma: Optional[float] = None
    alpha0: float = 0.5
    delta: float = 0.97

    def __post_init__(self):
        if self.n < 2:
            raise ConfigurationError("n must be at least 2")
        if not self.beta0 > 0:
            raise ConfigurationError("beta0 must be positive")
        if self.gamma is not None and self.gamma < 0:
            raise ConfigurationError("gamma must be non-negative")
        if self.alpha0 < 0:
            raise ConfigurationError("alpha0 must be non-negative")
        if not 0.0 < self.delta < 1.0:
            raise ConfigurationError("delta must be in (0, 1)")


def default_gamma(space: SearchSpace) -> float:
    """Absorption matched to the box scale: 1 / L^2 with L the mean box width.

    This makes the visibility range comparable to the domain size; if the
    width is degenerate (non-finite or non-positive), fall back to 1.
    """
    width = float(np.mean(space.widths))
    if not np.isfinite(width) or width <= 0:
        return 1.0
    return 1.0 / width**2


def alpha_at(config: FireflyConfig, t: int) -> float:
    """Perturbation strength at iteration t: alpha0 * delta**t."""
    return config.alpha0 * config.delta**t


def firefly_init(problem: Problem, config: FireflyConfig, rng: RngStream) -> Population:
    """Uniform positions; D uniforms per firefly in index order."""
    agents = []
    for _ in range(config.n):
        position = random_position(problem.space, rng)
        agents.append(Agent(position=position, fitness=evaluate(problem, position)))
    population = Population(agents=agents)
    update_best(population)
    return population


def firefly_step(
    population: Population,
    problem: Problem,
    config: FireflyConfig,
    t: int,
    rng: RngStream,
) -> Population:
    """One full pairwise sweep at iteration t.

    For each i in index order and each j != i in index order, if j is
    currently brighter (strictly lower fitness) then i attempts the move
    x_i + beta0 * exp(-gamma * r_ij^2) * (x_j - x_i) + alpha_t * eps, with
    eps a fresh block of D standard normals (drawn only when the move is
    attempted), clamped, evaluated, and kept only if strictly better. Later
    comparisons see earlier accepted moves, which is what lets subswarms
    form; the sweep order is part of the algorithm.
    """
    space = problem.space
    d = space.dimension
    gamma = config.gamma if config.gamma is not None else default_gamma(space)
    alpha_t = alpha_at(config, t)
    agents = population.agents
    for i, mover in enumerate(agents):
        for j, other in enumerate(agents):
            if j == i or not other.fitness < mover.fitness:
                continue
            diff = other.position - mover.position
            r2 = float(diff @ diff)
            eps = rng.normals(d)
            candidate = clamp_to_bounds(
                mover.position + config.beta0 * np.exp(-gamma * r2) * diff + alpha_t * eps,
                space,
            )
            candidate_fitness = evaluate(problem, candidate)
            if candidate_fitness < mover.fitness:
                mover.position = candidate
                mover.fitness = candidate_fitness
    update_best(population)
    population.generation += 1
    return population
