"""swarmkit: seeded black-box optimization toolkit.

Six population algorithms (particle swarm, artificial bee colony, bat,
firefly, cuckoo search, and ant colony optimization for TSP) behind one
step-function contract, Newton baselines for roots and smooth minimization,
a benchmark registry, and a reproducible experiment harness with CSV/JSON
export.
"""

from .benchmarks import available_names, get_spec, lookup, two_mode
from .classical import (
    CONVERGED,
    DERIVATIVE_VANISHED,
    DIVERGED,
    MAX_ITERATIONS,
    NewtonOutcome,
    newton_opt_1d,
    newton_opt_nd,
    newton_root,
)
from .core import (
    Agent,
    ConfigurationError,
    EvalCounter,
    EvaluationError,
    Population,
    Problem,
    RngStream,
    RunResult,
    SearchSpace,
    clamp_to_bounds,
    evaluate,
    random_position,
    update_best,
    with_eval_counter,
)
from .levy import LevyConfig, sample_step, sample_vector
from .swarm import (
    ALGORITHMS,
    AbcConfig,
    AlgorithmSpec,
    BatConfig,
    Budget,
    CuckooConfig,
    FireflyConfig,
    PsoConfig,
    default_gamma,
    run,
)
from .aco import AcoConfig, PheromoneField, Tour, TspInstance, aco_run, load_tsp_file

__version__ = "0.1.0"
