"""Cuckoo search: heavy-tailed global moves plus a gated mixing move.

Each nest holds one solution. The global phase perturbs every nest by a
Lévy-flight vector and lets the result displace a randomly chosen nest when
it is better. The local phase mixes pairs of nests selected by random
permutations, with each coordinate switched on independently with the
discovery probability ``pa``; those candidates replace their own nest only
when better. Both replacement rules are strictly improving, so the best nest
always survives a generation.
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
from ..levy import LevyConfig, sample_vector


@dataclass(frozen=True)
class CuckooConfig:
    """n nests; ``pa`` gates the mixing move per coordinate; ``alpha_step``
    scales the Lévy-flight vector of tail exponent ``lam``; ``alpha_local``
    scales the mixing move."""

    n: int = 25
    pa: float = 0.25
    alpha_step: float = 0.1
    lam: float = 1.5
    alpha_local: float = 1.0

    def __post_init__(self):
        if self.n < 2:
            raise ConfigurationError("n must be at least 2")
        if not 0.0 <= self.pa <= 1.0:
            raise ConfigurationError("pa must be in [0, 1]")
        if not self.alpha_step > 0:
            raise ConfigurationError("alpha_step must be positive")
        if self.alpha_local < 0:
            raise ConfigurationError("alpha_local must be non-negative")
        LevyConfig(lam=self.lam)  # validates the tail exponent range


def discovery_gate(pa: float, eps: Array) -> Array:
    """Per-coordinate on/off gate: 1.0 where the uniform draw falls below pa.

    This is the unit step of (pa - eps), so the open fraction over many draws
    is exactly pa.
    """
    return (np.asarray(eps) < pa).astype(float)


def cuckoo_init(problem: Problem, config: CuckooConfig, rng: RngStream) -> Population:
    """Uniform nests; D uniforms per nest in index order."""
    agents = []
    for _ in range(config.n):
        position = random_position(problem.space, rng)
        agents.append(Agent(position=position, fitness=evaluate(problem, position)))
    population = Population(agents=agents)
    update_best(population)
    return population


def cuckoo_step(population: Population, problem: Problem, config: CuckooConfig, rng: RngStream) -> Population:
    """One generation: Lévy phase over all nests, then the gated mixing phase.

    Draw order: for each nest in index order, a Lévy vector (D numerator
    normals then D denominator normals) followed by one target integer; then
    two permutations of 0..n; then for each nest in index order one step-size
    uniform followed by D gate uniforms. Both phases read current positions,
    so moves accepted earlier in a phase are visible to later nests.
    """
    space = problem.space
    d = space.dimension
    agents = population.agents
    n = len(agents)
    levy_config = LevyConfig(lam=config.lam, scale=config.alpha_step)

    for agent in agents:
        candidate = clamp_to_bounds(agent.position + sample_vector(levy_config, d, rng), space)
        candidate_fitness = evaluate(problem, candidate)
        target = agents[rng.integer(n)]
        if candidate_fitness < target.fitness:
            target.position = candidate
            target.fitness = candidate_fitness

    perm_a = rng.permutation(n)
    perm_b = rng.permutation(n)
    for i, agent in enumerate(agents):
        step = rng.uniform()
        gate = discovery_gate(config.pa, rng.uniforms(d))
        diff = agents[perm_a[i]].position - agents[perm_b[i]].position
        candidate = clamp_to_bounds(
            agent.position + config.alpha_local * step * gate * diff, space
        )
        candidate_fitness = evaluate(problem, candidate)
        if candidate_fitness < agent.fitness:
            agent.position = candidate
            agent.fitness = candidate_fitness

    update_best(population)
    population.generation += 1
    return population
