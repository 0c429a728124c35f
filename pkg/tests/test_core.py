import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from swarmkit import benchmarks
from swarmkit.core import (
    Agent,
    ConfigurationError,
    EvaluationError,
    Population,
    Problem,
    RngStream,
    SearchSpace,
    clamp_to_bounds,
    evaluate,
    random_position,
    update_best,
    with_eval_counter,
)

from helpers import ScriptedRng


def unit_space(dimension=1):
    return SearchSpace(np.zeros(dimension), np.ones(dimension))


class TestSearchSpace:
    def test_basic_fields(self):
        space = SearchSpace([-5.12, -5.12], [5.12, 5.12])
        assert space.dimension == 2
        assert np.allclose(space.widths, 10.24)
        assert space.contains([0.0, 0.0])
        assert not space.contains([6.0, 0.0])

    def test_rejects_inverted_bounds(self):
        with pytest.raises(ConfigurationError):
            SearchSpace([0.0], [0.0])
        with pytest.raises(ConfigurationError):
            SearchSpace([1.0], [0.0])

    def test_rejects_mismatched_lengths(self):
        with pytest.raises(ConfigurationError):
            SearchSpace([0.0, 0.0], [1.0])

    def test_rejects_non_finite(self):
        with pytest.raises(ConfigurationError):
            SearchSpace([0.0], [np.inf])


class TestEvaluate:
    def test_sphere_at_origin_is_zero(self):
        problem = benchmarks.lookup("sphere", 3)
        assert evaluate(problem, np.zeros(3)) == 0.0

    def test_sphere_hand_value(self):
        problem = benchmarks.lookup("sphere", 2)
        assert evaluate(problem, np.array([1.0, 2.0])) == 5.0

    def test_rastrigin_at_origin_is_zero(self):
        problem = benchmarks.lookup("rastrigin", 2)
        assert evaluate(problem, np.zeros(2)) == 0.0

    def test_non_finite_value_raises_with_payload(self):
        problem = Problem(space=unit_space(), objective=lambda x: float("nan"))
        with pytest.raises(EvaluationError) as excinfo:
            evaluate(problem, np.array([0.5]))
        assert np.isnan(excinfo.value.value)
        assert excinfo.value.position == pytest.approx([0.5])

    def test_counter_counts_every_call(self):
        problem = benchmarks.lookup("sphere", 2)
        counted, counter = with_eval_counter(problem)
        for _ in range(7):
            evaluate(counted, np.array([0.1, 0.2]))
        assert counter.count == 7


class TestClamp:
    def test_upper_clamp(self):
        assert clamp_to_bounds(np.array([5.0]), unit_space()) == pytest.approx([1.0])

    def test_interior_identity(self):
        assert clamp_to_bounds(np.array([0.5]), unit_space()) == pytest.approx([0.5])

    def test_lower_clamp_per_coordinate(self):
        space = SearchSpace([-1.0, -1.0], [1.0, 1.0])
        assert clamp_to_bounds(np.array([-3.0, 0.2]), space) == pytest.approx([-1.0, 0.2])

    @given(st.lists(st.floats(-1e6, 1e6), min_size=1, max_size=6))
    def test_result_inside_box_and_idempotent(self, values):
        space = SearchSpace(np.full(len(values), -2.0), np.full(len(values), 3.0))
        clamped = clamp_to_bounds(np.array(values), space)
        assert space.contains(clamped)
        assert np.array_equal(clamp_to_bounds(clamped, space), clamped)


def population_of(fitnesses):
    agents = [Agent(position=np.array([float(i)]), fitness=float(f)) for i, f in enumerate(fitnesses)]
    return Population(agents=agents)


class TestUpdateBest:
    def test_argmin(self):
        population = population_of([3.0, 1.0, 2.0])
        assert update_best(population) == 1

    def test_tie_breaks_to_lowest_index(self):
        population = population_of([1.0, 1.0])
        assert update_best(population) == 0

    @given(st.lists(st.floats(-1e9, 1e9), min_size=1, max_size=20))
    def test_matches_manual_argmin(self, fitnesses):
        population = population_of(fitnesses)
        best = update_best(population)
        minimum = min(fitnesses)
        assert population.agents[best].fitness == minimum
        assert all(f != minimum for f in fitnesses[:best])


class TestRandomPosition:
    def test_midpoint_draw(self):
        position = random_position(unit_space(), ScriptedRng(uniform=[0.5]))
        assert position == pytest.approx([0.5])

    def test_lower_endpoint_draw(self):
        space = SearchSpace([-5.0], [5.0])
        assert random_position(space, ScriptedRng(uniform=[0.0])) == pytest.approx([-5.0])

    def test_affine_map(self):
        space = SearchSpace([2.0], [4.0])
        # L + r (U - L) with r = 0.25 -> 2.5
        assert random_position(space, ScriptedRng(uniform=[0.25])) == pytest.approx([2.5])

    def test_consumes_one_draw_per_dimension(self):
        rng = ScriptedRng(uniform=[0.1, 0.9, 0.4])
        position = random_position(unit_space(3), rng)
        assert rng.exhausted()
        assert position == pytest.approx([0.1, 0.9, 0.4])

    @settings(max_examples=25)
    @given(st.integers(0, 2**32 - 1), st.integers(1, 8))
    def test_always_inside_box(self, seed, dimension):
        space = SearchSpace(np.full(dimension, -3.0), np.full(dimension, 7.0))
        position = random_position(space, RngStream(seed))
        assert space.contains(position)


class TestRngStream:
    def test_identical_seed_identical_draws(self):
        a, b = RngStream(123), RngStream(123)
        assert [a.uniform() for _ in range(5)] == [b.uniform() for _ in range(5)]
        assert np.array_equal(a.normals(4), b.normals(4))
        assert np.array_equal(a.permutation(10), b.permutation(10))
        assert a.integer(1000) == b.integer(1000)

    def test_different_seeds_differ(self):
        assert RngStream(1).uniform() != RngStream(2).uniform()

    def test_ranges(self):
        rng = RngStream(5)
        draws = rng.uniforms(1000)
        assert np.all((draws >= 0.0) & (draws < 1.0))
        values = [rng.integer(7) for _ in range(200)]
        assert min(values) >= 0 and max(values) < 7
        mapped = rng.uniform_in(2.0, 4.0, 100)
        assert np.all((mapped >= 2.0) & (mapped < 4.0))
        assert sorted(rng.permutation(12).tolist()) == list(range(12))
