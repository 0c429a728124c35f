"""The five continuous population algorithms behind one step-function contract."""

from __future__ import annotations

from .bat import BatConfig, BatState, bat_init, bat_step
from .bees import AbcConfig, AbcState, abc_init, abc_step, fitness_weight
from .cuckoo import CuckooConfig, cuckoo_init, cuckoo_step, discovery_gate
from .firefly import FireflyConfig, alpha_at, default_gamma, firefly_init, firefly_step
from .loop import AlgorithmSpec, Budget, run
from .pso import PsoConfig, PsoState, pso_best, pso_init, pso_step

ALGORITHMS: dict[str, AlgorithmSpec] = {
    "pso": AlgorithmSpec(
        name="pso",
        config_cls=PsoConfig,
        init=pso_init,
        step=lambda pop, problem, config, rng, t: pso_step(pop, problem, config, rng),
        best_view=pso_best,
    ),
    "abc": AlgorithmSpec(
        name="abc",
        config_cls=AbcConfig,
        init=abc_init,
        step=lambda pop, problem, config, rng, t: abc_step(pop, problem, config, rng),
    ),
    "bat": AlgorithmSpec(
        name="bat",
        config_cls=BatConfig,
        init=bat_init,
        step=lambda pop, problem, config, rng, t: bat_step(pop, problem, config, rng),
    ),
    "firefly": AlgorithmSpec(
        name="firefly",
        config_cls=FireflyConfig,
        init=firefly_init,
        step=lambda pop, problem, config, rng, t: firefly_step(pop, problem, config, t, rng),
    ),
    "cuckoo": AlgorithmSpec(
        name="cuckoo",
        config_cls=CuckooConfig,
        init=cuckoo_init,
        step=lambda pop, problem, config, rng, t: cuckoo_step(pop, problem, config, rng),
    ),
}

__all__ = [
    "ALGORITHMS",
    "AlgorithmSpec",
    "Budget",
    "run",
    "PsoConfig",
    "PsoState",
    "pso_init",
    "pso_step",
    "pso_best",
    "AbcConfig",
    "AbcState",
    "abc_init",
    "abc_step",
    "fitness_weight",
    "BatConfig",
    "BatState",
    "bat_init",
    "bat_step",
    "FireflyConfig",
    "firefly_init",
    "firefly_step",
    "default_gamma",
    "alpha_at",
    "CuckooConfig",
    "cuckoo_init",
    "cuckoo_step",
    "discovery_gate",
]
