"""Bat search: frequency-tuned velocities with loudness/emission schedules.

Each bat carries a velocity, a tuned frequency, a loudness that decays
geometrically on every accepted move, and an emission rate that rises from
zero toward its ceiling ``r0``. Low emission rates early on make most
candidates local walks around the incumbent best; as the rate grows the
frequency-tuned moves take over. A candidate is kept only when it improves
the bat and a loudness draw allows it.
"""

from __future__ import annotations

import math
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
class BatConfig:
    n: int = 30
    f_min: float = 0.0
    f_max: float = 2.0
    alpha_loud: float = 0.9    # loudness decay per accepted move, in (0, 1)
    gamma_rate: float = 0.9    # emission growth rate, > 0
    A0: float = 1.0            # initial loudness, > 0
    r0: float = 0.5            # emission-rate ceiling, in [0, 1]
    toward_best: bool = False  # flip the velocity term to (best - x)

    def __post_init__(self):
        if self.n < 2:
            raise ConfigurationError("n must be at least 2")
        if not self.f_max > self.f_min:
            raise ConfigurationError("f_max must exceed f_min")
        if not 0.0 < self.alpha_loud < 1.0:
            raise ConfigurationError("alpha_loud must be in (0, 1)")
        if not self.gamma_rate > 0:
            raise ConfigurationError("gamma_rate must be positive")
        if not self.A0 > 0:
            raise ConfigurationError("A0 must be positive")
        if not 0.0 <= self.r0 <= 1.0:
            raise ConfigurationError("r0 must be in [0, 1]")


@dataclass
class BatState:
    velocity: Array
    frequency: float = 0.0
    loudness: float = 1.0
    # Starts at zero (the schedule value at t=0) and rises toward r0, so the
    # emission rate is non-decreasing over a run.
    emission_rate: float = 0.0
    accepts: int = 0


def bat_init(problem: Problem, config: BatConfig, rng: RngStream) -> Population:
    """Uniform positions, zero velocities; D uniforms per bat in index order."""
    agents = []
    for _ in range(config.n):
        position = random_position(problem.space, rng)
        state = BatState(velocity=np.zeros(problem.space.dimension), loudness=config.A0)
        agents.append(Agent(position=position, fitness=evaluate(problem, position), aux=state))
    population = Population(agents=agents)
    update_best(population)
    return population


def bat_step(population: Population, problem: Problem, config: BatConfig, rng: RngStream) -> Population:
    """One sweep over the bats at iteration t = population.generation.

    Per bat in index order the draws are: frequency uniform; local-walk
    uniform (walk taken when it exceeds the bat's emission rate, in which
    case D standard normals follow); one acceptance uniform (always drawn).
    The velocity update v += (x - best) * f persists whether or not the
    frequency-tuned candidate is replaced by a local walk; with
    ``toward_best`` the displacement sign flips to (best - x). The local walk
    is best + 0.01 * mean-box-width * N(0, 1) per coordinate. On acceptance
    (improvement and draw < loudness): loudness *= alpha_loud and the
    emission rate becomes r0 * (1 - exp(-gamma_rate * t)).
    """
    space = problem.space
    d = space.dimension
    t = population.generation
    sigma_local = 0.01 * float(np.mean(space.widths))
    best = population.agents[population.best_index]
    for i, agent in enumerate(population.agents):
        state: BatState = agent.aux
        state.frequency = config.f_min + (config.f_max - config.f_min) * rng.uniform()
        displacement = (
            best.position - agent.position if config.toward_best
            else agent.position - best.position
        )
        state.velocity = state.velocity + displacement * state.frequency
        candidate = clamp_to_bounds(agent.position + state.velocity, space)
        if rng.uniform() > state.emission_rate:
            candidate = clamp_to_bounds(best.position + sigma_local * rng.normals(d), space)
        candidate_fitness = evaluate(problem, candidate)
        accept_draw = rng.uniform()
        if candidate_fitness < agent.fitness and accept_draw < state.loudness:
            agent.position = candidate
            agent.fitness = candidate_fitness
            state.loudness *= config.alpha_loud
            state.emission_rate = config.r0 * (1.0 - math.exp(-config.gamma_rate * t))
            state.accepts += 1
            if candidate_fitness < best.fitness:
                best = agent
                population.best_index = i
    update_best(population)
    population.generation += 1
    return population
