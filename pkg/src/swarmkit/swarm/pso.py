"""Particle swarm: unit-inertia velocity updates with two stochastic pulls.

Each particle keeps a velocity and the best position it has personally
visited; the swarm shares the best of all personal bests. There is no
inertia weight and no velocity clamp; positions are clamped to the box.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..core import (
    Agent,
    Array,
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
class PsoConfig:
    """n particles; alpha scales the pull toward the swarm best, beta the pull
    toward each particle's own best. Both are conventionally kept in [0, 2]."""

    n: int = 30
    alpha: float = 1.0
    beta: float = 1.0

    def __post_init__(self):
        if self.n < 2:
            raise ConfigurationError("n must be at least 2")
        if self.alpha < 0:
            raise ConfigurationError("alpha must be non-negative")
        if self.beta < 0:
            raise ConfigurationError("beta must be non-negative")


@dataclass
class PsoState:
    velocity: Array
    personal_best_position: Array
    personal_best_fitness: float


def pso_init(problem: Problem, config: PsoConfig, rng: RngStream) -> Population:
    """Uniform positions, zero velocities; D uniforms per agent in index order."""
    agents = []
    for _ in range(config.n):
        position = random_position(problem.space, rng)
        fitness = evaluate(problem, position)
        state = PsoState(
            velocity=np.zeros(problem.space.dimension),
            personal_best_position=position.copy(),
            personal_best_fitness=fitness,
        )
        agents.append(Agent(position=position, fitness=fitness, aux=state))
    population = Population(agents=agents)
    update_best(population)
    return population


def pso_best(population: Population) -> tuple[Array, float]:
    """Swarm best = minimum over personal bests (ties: lowest index)."""
    states = [agent.aux for agent in population.agents]
    idx = int(np.argmin([s.personal_best_fitness for s in states]))
    return states[idx].personal_best_position, states[idx].personal_best_fitness


def pso_step(population: Population, problem: Problem, config: PsoConfig, rng: RngStream) -> Population:
    """One sweep over the swarm.

    Per agent in index order: draw eps1 (D uniforms) then eps2 (D uniforms);
    v += alpha*eps1*(gbest - x) + beta*eps2*(pbest - x); move, clamp,
    re-evaluate, and update the personal/swarm bests immediately, so later
    agents in the same sweep see improvements made by earlier ones.
    """
    space = problem.space
    d = space.dimension
    gbest_position, gbest_fitness = pso_best(population)
    gbest_position = gbest_position.copy()
    for agent in population.agents:
        state: PsoState = agent.aux
        eps1 = rng.uniforms(d)
        eps2 = rng.uniforms(d)
        state.velocity = (
            state.velocity
            + config.alpha * eps1 * (gbest_position - agent.position)
            + config.beta * eps2 * (state.personal_best_position - agent.position)
        )
        agent.position = clamp_to_bounds(agent.position + state.velocity, space)
        agent.fitness = evaluate(problem, agent.position)
        if agent.fitness < state.personal_best_fitness:
            state.personal_best_fitness = agent.fitness
            state.personal_best_position = agent.position.copy()
            if agent.fitness < gbest_fitness:
                gbest_fitness = agent.fitness
                gbest_position = agent.position.copy()
    update_best(population)
    population.generation += 1
    return population
