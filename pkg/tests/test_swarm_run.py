import numpy as np
import pytest

from swarmkit import benchmarks
from swarmkit.core import ConfigurationError, Problem, with_eval_counter
from swarmkit.swarm import (
    ALGORITHMS,
    AbcConfig,
    BatConfig,
    Budget,
    CuckooConfig,
    FireflyConfig,
    PsoConfig,
    run,
)

SMALL_CONFIGS = {
    "pso": PsoConfig(n=8),
    "abc": AbcConfig(n=8),
    "bat": BatConfig(n=8),
    "firefly": FireflyConfig(n=8),
    "cuckoo": CuckooConfig(n=8),
}


class TestBudget:
    def test_needs_at_least_one_bound(self):
        with pytest.raises(ConfigurationError):
            Budget()

    def test_rejects_negative_bounds(self):
        with pytest.raises(ConfigurationError):
            Budget(max_iterations=-1)
        with pytest.raises(ConfigurationError):
            Budget(max_evaluations=-5)


class TestRun:
    def test_zero_iterations_returns_initial_best(self):
        problem = benchmarks.lookup("sphere", 3)
        result = run(ALGORITHMS["pso"], PsoConfig(n=8), problem, Budget(max_iterations=0), seed=1)
        assert len(result.trace) == 0
        assert result.evaluations == 8
        assert result.best_fitness == pytest.approx(problem.objective(result.best_position))

    @pytest.mark.parametrize("name", sorted(SMALL_CONFIGS))
    def test_same_seed_is_bit_identical(self, name):
        problem = benchmarks.lookup("rastrigin", 3)
        budget = Budget(max_iterations=25)
        first = run(ALGORITHMS[name], SMALL_CONFIGS[name], problem, budget, seed=42)
        second = run(ALGORITHMS[name], SMALL_CONFIGS[name], problem, budget, seed=42)
        assert np.array_equal(first.trace, second.trace)
        assert np.array_equal(first.best_position, second.best_position)
        assert first.best_fitness == second.best_fitness
        assert first.evaluations == second.evaluations
        assert first.seed == second.seed == 42

    @pytest.mark.parametrize("name", sorted(SMALL_CONFIGS))
    def test_trace_is_monotone_and_sized(self, name):
        problem = benchmarks.lookup("ackley", 3)
        result = run(ALGORITHMS[name], SMALL_CONFIGS[name], problem, Budget(max_iterations=30), seed=7)
        assert len(result.trace) == 30
        assert np.all(np.diff(result.trace) <= 0)
        assert result.trace[-1] == result.best_fitness

    @pytest.mark.parametrize("name", sorted(SMALL_CONFIGS))
    def test_reported_evaluations_match_objective_calls(self, name):
        problem, counter = with_eval_counter(benchmarks.lookup("sphere", 3))
        result = run(ALGORITHMS[name], SMALL_CONFIGS[name], problem, Budget(max_iterations=10), seed=3)
        assert result.evaluations == counter.count

    @pytest.mark.parametrize("name", sorted(SMALL_CONFIGS))
    def test_every_evaluated_position_is_inside_the_box(self, name):
        base = benchmarks.lookup("rastrigin", 4)
        space = base.space

        def checked(x):
            assert space.contains(x), f"{name} evaluated {x} outside the box"
            return base.objective(x)

        problem = Problem(space=space, objective=checked, name="checked")
        run(ALGORITHMS[name], SMALL_CONFIGS[name], problem, Budget(max_iterations=20), seed=11)

    def test_evaluation_budget_stops_the_run(self):
        problem = benchmarks.lookup("sphere", 3)
        result = run(
            ALGORITHMS["pso"], PsoConfig(n=10), problem, Budget(max_evaluations=95), seed=5
        )
        # init costs 10, then 10 per iteration; the bound is checked between
        # iterations, so the last one may finish just past it.
        assert result.evaluations == 100
        assert len(result.trace) == 9

    def test_best_position_matches_best_fitness(self):
        problem = benchmarks.lookup("rastrigin", 3)
        for name, config in SMALL_CONFIGS.items():
            result = run(ALGORITHMS[name], config, problem, Budget(max_iterations=15), seed=2)
            assert problem.objective(result.best_position) == pytest.approx(result.best_fitness)

    def test_config_type_is_checked(self):
        problem = benchmarks.lookup("sphere", 2)
        with pytest.raises(ConfigurationError):
            run(ALGORITHMS["pso"], CuckooConfig(), problem, Budget(max_iterations=1), seed=0)

    def test_trace_stays_monotone_when_scouts_destroy_the_population_best(self):
        # A tiny abandonment limit makes scouts re-randomize sources
        # constantly (including the best one); the recorded incumbent must
        # still never rise.
        problem = benchmarks.lookup("rastrigin", 3)
        result = run(
            ALGORITHMS["abc"], AbcConfig(n=5, limit=2), problem, Budget(max_iterations=200), seed=13
        )
        assert np.all(np.diff(result.trace) <= 0)
        assert problem.objective(result.best_position) == pytest.approx(result.best_fitness)
