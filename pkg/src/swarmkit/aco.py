"""Ant colony optimization on symmetric traveling-salesman instances.

Ants build tours city by city, choosing each next city with probability
proportional to pheromone**alpha * (1/distance)**beta over the cities not
yet visited. After all ants of an iteration finish, pheromone evaporates
globally by the factor (1 - rho) and every tour deposits Q/length on each of
its edges, so shorter tours reinforce their edges more per unit. A floor
``tau_min`` keeps every edge reachable.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from .core import Array, ConfigurationError, RngStream, RunResult

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TspInstance:
    """Symmetric TSP: city coordinates and/or the full distance matrix."""

    name: str
    distances: Array
    coordinates: Optional[Array] = None

    def __post_init__(self):
        d = np.asarray(self.distances, dtype=float)
        if d.ndim != 2 or d.shape[0] != d.shape[1]:
            raise ConfigurationError("distance matrix must be square")
        if d.shape[0] < 3:
            raise ConfigurationError("instance needs at least 3 cities")
        if not np.allclose(d, d.T):
            raise ConfigurationError("distance matrix must be symmetric")
        if not np.all(np.diag(d) == 0):
            raise ConfigurationError("distance matrix must have a zero diagonal")
        off_diagonal = d[~np.eye(d.shape[0], dtype=bool)]
        if not np.all(off_diagonal > 0):
            raise ConfigurationError("off-diagonal distances must be strictly positive")
        object.__setattr__(self, "distances", d)

    @property
    def n_cities(self) -> int:
        return self.distances.shape[0]

    @classmethod
    def from_coordinates(cls, name: str, coordinates: Array) -> "TspInstance":
        coords = np.asarray(coordinates, dtype=float)
        if coords.ndim != 2 or coords.shape[1] != 2:
            raise ConfigurationError("coordinates must be an (n, 2) array")
        deltas = coords[:, None, :] - coords[None, :, :]
        distances = np.sqrt(np.sum(deltas**2, axis=-1))
        return cls(name=name, distances=distances, coordinates=coords)


def load_tsp_file(path: str | Path) -> TspInstance:
    """Parse the plain-text instance format: line 1 is n, then n lines `id x y`.

    Distances are Euclidean in 64-bit floats (no integer rounding).
    """
    path = Path(path)
    lines = [line.strip() for line in path.read_text().splitlines() if line.strip()]
    if not lines:
        raise ConfigurationError(f"{path}: empty instance file")
    try:
        n = int(lines[0])
    except ValueError as exc:
        raise ConfigurationError(f"{path}: first line must be the city count") from exc
    if len(lines) - 1 < n:
        raise ConfigurationError(f"{path}: expected {n} city lines, found {len(lines) - 1}")
    coords = np.zeros((n, 2))
    for row, line in enumerate(lines[1 : n + 1]):
        parts = line.split()
        if len(parts) != 3:
            raise ConfigurationError(f"{path}: city line {row + 2} must be 'id x y'")
        try:
            coords[row] = (float(parts[1]), float(parts[2]))
        except ValueError as exc:
            raise ConfigurationError(f"{path}: bad coordinate on line {row + 2}") from exc
    return TspInstance.from_coordinates(name=path.stem, coordinates=coords)


@dataclass
class PheromoneField:
    """Symmetric non-negative edge weights with a strictly positive floor."""

    tau: Array
    tau_min: float = 1e-9

    @classmethod
    def uniform(cls, n_cities: int, value: float = 1.0, tau_min: float = 1e-9) -> "PheromoneField":
        return cls(tau=np.full((n_cities, n_cities), float(value)), tau_min=tau_min)


@dataclass(frozen=True)
class AcoConfig:
    n_ants: int = 20
    alpha: float = 1.0   # pheromone influence
    beta: float = 2.0    # desirability (inverse distance) influence
    rho: float = 0.5     # evaporation rate
    q: float = 1.0       # deposit constant
    iterations: int = 100

    def __post_init__(self):
        if self.n_ants < 1:
            raise ConfigurationError("n_ants must be at least 1")
        if not self.alpha > 0:
            raise ConfigurationError("alpha must be positive")
        if not self.beta > 0:
            raise ConfigurationError("beta must be positive")
        if not 0.0 <= self.rho < 1.0:
            raise ConfigurationError("rho must be in [0, 1)")
        if not self.q > 0:
            raise ConfigurationError("q must be positive")
        if self.iterations < 0:
            raise ConfigurationError("iterations must be non-negative")


@dataclass(frozen=True)
class Tour:
    """A closed tour: visiting order plus its cyclic length."""

    order: Array
    length: float


def tour_length(instance: TspInstance, order: Sequence[int]) -> float:
    order = np.asarray(order, dtype=int)
    return float(np.sum(instance.distances[order, np.roll(order, -1)]))


def route_probabilities(
    current: int,
    allowed: Sequence[int],
    field: PheromoneField,
    instance: TspInstance,
    alpha: float,
    beta: float,
) -> Array:
    """Next-city probabilities over ``allowed``, aligned with its order.

    p_j proportional to tau[current, j]**alpha * (1/distance[current, j])**beta,
    normalized over the allowed cities. If every numerator underflows to zero
    the choice falls back to uniform (logged), keeping the sampler defined.
    """
    allowed = np.asarray(allowed, dtype=int)
    if allowed.size == 0:
        raise ConfigurationError("allowed set must be non-empty")
    tau = field.tau[current, allowed] ** alpha
    desirability = (1.0 / instance.distances[current, allowed]) ** beta
    weights = tau * desirability
    total = weights.sum()
    if not np.isfinite(total) or total <= 0.0:
        logger.warning(
            "route probabilities degenerate at city %d (weight sum %r); using uniform",
            current, float(total),
        )
        return np.full(allowed.size, 1.0 / allowed.size)
    return weights / total


def construct_tour(
    instance: TspInstance,
    field: PheromoneField,
    config: AcoConfig,
    rng: RngStream,
) -> Tour:
    """Build one complete tour.

    Draw order: one integer for the start city, then one uniform per step to
    pick among the unvisited cities (listed in ascending city index).
    """
    n = instance.n_cities
    start = rng.integer(n)
    order = [start]
    unvisited = np.ones(n, dtype=bool)
    unvisited[start] = False
    current = start
    while unvisited.any():
        allowed = np.flatnonzero(unvisited)
        probabilities = route_probabilities(
            current, allowed, field, instance, config.alpha, config.beta
        )
        r = rng.uniform()
        pick = min(int(np.searchsorted(np.cumsum(probabilities), r, side="right")),
                   allowed.size - 1)
        current = int(allowed[pick])
        order.append(current)
        unvisited[current] = False
    order = np.asarray(order, dtype=int)
    return Tour(order=order, length=tour_length(instance, order))


def update_pheromone(field: PheromoneField, tours: Sequence[Tour], config: AcoConfig) -> PheromoneField:
    """Evaporate by (1 - rho), deposit q/length on every edge of every tour,
    then floor at tau_min. Edges are undirected: both (i, j) and (j, i) carry
    the shared value, so the matrix stays symmetric."""
    tau = field.tau * (1.0 - config.rho)
    for tour in tours:
        deposit = config.q / tour.length
        heads = tour.order
        tails = np.roll(tour.order, -1)
        tau[heads, tails] += deposit
        tau[tails, heads] += deposit
    np.maximum(tau, field.tau_min, out=tau)
    field.tau = tau
    return field


def aco_run(
    instance: TspInstance,
    config: AcoConfig,
    seed: int,
    max_iterations: Optional[int] = None,
    max_evaluations: Optional[int] = None,
) -> RunResult:
    """Seeded colony run; returns the best tour found and its length trace.

    ``best_position`` holds the visiting order (integer array) and
    ``evaluations`` counts tour constructions. Pheromone starts uniform at
    1.0. ``max_iterations`` defaults to ``config.iterations`` unless only
    ``max_evaluations`` is given, in which case the evaluation bound alone
    stops the run; bounds are checked between iterations like the continuous
    run loop.
    """
    rng = RngStream(seed)
    field = PheromoneField.uniform(instance.n_cities)
    if max_iterations is None:
        iterations = config.iterations if max_evaluations is None else None
    else:
        iterations = max_iterations
    started = time.perf_counter()
    constructions = 0
    iterations_done = 0
    best_tour: Optional[Tour] = None
    trace = []
    while True:
        if iterations is not None and iterations_done >= iterations:
            break
        if max_evaluations is not None and constructions >= max_evaluations:
            break
        tours = [construct_tour(instance, field, config, rng) for _ in range(config.n_ants)]
        constructions += len(tours)
        update_pheromone(field, tours, config)
        iteration_best = min(tours, key=lambda tour: tour.length)
        if best_tour is None or iteration_best.length < best_tour.length:
            best_tour = iteration_best
        trace.append(best_tour.length)
        iterations_done += 1
    if best_tour is None:
        # Zero-iteration budget: report a single constructed tour as incumbent.
        best_tour = construct_tour(instance, field, config, rng)
        constructions += 1
    return RunResult(
        best_position=best_tour.order,
        best_fitness=best_tour.length,
        trace=np.asarray(trace),
        evaluations=constructions,
        seed=int(seed),
        wall_time=time.perf_counter() - started,
    )
