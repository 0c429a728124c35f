"""Artificial bee colony over a set of food sources.

Three phases per iteration: employed bees perturb every source toward or away
from a random partner, onlookers re-sample sources in proportion to a fitness
weight, and scouts re-randomize any source whose improvement-failure count
exceeds the abandonment limit.
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
    clamp_to_bounds,
    evaluate,
    random_position,
    update_best,
)


@dataclass(frozen=True)
class AbcConfig:
    """n food sources; ``limit`` is the abandonment trial count and defaults
    to n * dimension when left unset."""

    n: int = 25
    limit: Optional[int] = None

    def __post_init__(self):
        if self.n < 2:
            raise ConfigurationError("n must be at least 2")
        if self.limit is not None and self.limit < 1:
            raise ConfigurationError("limit must be at least 1")

    def resolved_limit(self, dimension: int) -> int:
        return self.limit if self.limit is not None else self.n * dimension


@dataclass
class AbcState:
    trials: int = 0


def fitness_weight(fitness: float) -> float:
    """Positive selection weight for a minimization fitness.

    1/(1+f) for non-negative f, 1+|f| otherwise, so lower fitness always
    weighs more and the weight stays positive.
    """
    return 1.0 / (1.0 + fitness) if fitness >= 0 else 1.0 + abs(fitness)


def _partner(rng: RngStream, n: int, i: int) -> int:
    # One integer draw in [0, n-1), shifted past i so the partner differs.
    j = rng.integer(n - 1)
    return j if j < i else j + 1


def _try_candidate(agent: Agent, partner: Agent, problem: Problem, rng: RngStream) -> None:
    # phi: D uniforms in [-1, 1]. Acceptance is greedy with ties kept, so a
    # zero perturbation resets the trial counter.
    phi = rng.uniform_in(-1.0, 1.0, problem.space.dimension)
    candidate = clamp_to_bounds(
        agent.position + phi * (agent.position - partner.position), problem.space
    )
    candidate_fitness = evaluate(problem, candidate)
    state: AbcState = agent.aux
    if candidate_fitness <= agent.fitness:
        agent.position = candidate
        agent.fitness = candidate_fitness
        state.trials = 0
    else:
        state.trials += 1


def abc_init(problem: Problem, config: AbcConfig, rng: RngStream) -> Population:
    """Uniform sources; D uniforms per source in index order."""
    agents = []
    for _ in range(config.n):
        position = random_position(problem.space, rng)
        agents.append(Agent(position=position, fitness=evaluate(problem, position), aux=AbcState()))
    population = Population(agents=agents)
    update_best(population)
    return population


def abc_step(population: Population, problem: Problem, config: AbcConfig, rng: RngStream) -> Population:
    """One employed/onlooker/scout cycle.

    Draw order: employed phase over sources in index order (one partner
    integer, then D phi uniforms each); onlooker phase with selection
    probabilities computed once from the fitnesses at phase start, n
    onlookers each drawing (selection uniform, partner integer, D phi
    uniforms); scout phase over sources in index order, D uniforms per
    abandoned source. A source is abandoned when its trial count exceeds the
    limit.
    """
    agents = population.agents
    n = len(agents)
    limit = config.resolved_limit(problem.space.dimension)

    for i, agent in enumerate(agents):
        _try_candidate(agent, agents[_partner(rng, n, i)], problem, rng)

    weights = np.array([fitness_weight(agent.fitness) for agent in agents])
    cumulative = np.cumsum(weights / weights.sum())
    for _ in range(n):
        r = rng.uniform()
        i = min(int(np.searchsorted(cumulative, r, side="right")), n - 1)
        _try_candidate(agents[i], agents[_partner(rng, n, i)], problem, rng)

    for agent in agents:
        state: AbcState = agent.aux
        if state.trials > limit:
            agent.position = random_position(problem.space, rng)
            agent.fitness = evaluate(problem, agent.position)
            state.trials = 0

    update_best(population)
    population.generation += 1
    return population
