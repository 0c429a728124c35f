"""Shared test utilities: scripted random stubs and small oracles."""

from __future__ import annotations

import numpy as np


class ScriptedRng:
    """Duck-typed RngStream whose draws are read from preloaded queues.

    Lets a test pin the exact random values an operation sees (e.g. a zero
    perturbation or an endpoint draw) without touching the real generator.
    Any queue that runs dry raises, so tests also pin how many draws an
    operation consumes.
    """

    def __init__(self, uniform=(), uniform_in=(), integer=(), normal=(), permutation=()):
        self._uniform = list(uniform)
        self._uniform_in = list(uniform_in)
        self._integer = list(integer)
        self._normal = list(normal)
        self._permutation = list(permutation)

    def uniform(self):
        return float(self._uniform.pop(0))

    def uniforms(self, size):
        return np.array([self.uniform() for _ in range(size)])

    def uniform_in(self, low, high, size=None):
        if size is None:
            return float(self._uniform_in.pop(0))
        return np.array([float(self._uniform_in.pop(0)) for _ in range(size)])

    def integer(self, n):
        value = int(self._integer.pop(0))
        assert 0 <= value < n, f"scripted integer {value} outside [0, {n})"
        return value

    def normal(self):
        return float(self._normal.pop(0))

    def normals(self, size):
        return np.array([self.normal() for _ in range(size)])

    def permutation(self, n):
        perm = np.asarray(self._permutation.pop(0), dtype=int)
        assert sorted(perm.tolist()) == list(range(n))
        return perm

    def exhausted(self) -> bool:
        return not (
            self._uniform or self._uniform_in or self._integer
            or self._normal or self._permutation
        )


def hill_estimate(samples: np.ndarray, top_fraction: float = 0.01) -> float:
    """Hill tail-index estimator over the top fraction of |samples|.

    Independent oracle for heavy-tail checks: for P(|X| > x) ~ x**-a the
    estimate converges to a.
    """
    magnitudes = np.sort(np.abs(np.asarray(samples, dtype=float)))
    k = max(1, int(top_fraction * magnitudes.size))
    tail = magnitudes[-k:]
    threshold = magnitudes[-k - 1]
    return float(1.0 / np.mean(np.log(tail / threshold)))


def central_difference_gradient(objective, x: np.ndarray, h: float = 1e-6) -> np.ndarray:
    """Central finite-difference gradient, the oracle for analytic gradients."""
    x = np.asarray(x, dtype=float)
    grad = np.zeros_like(x)
    for k in range(x.size):
        forward = x.copy()
        backward = x.copy()
        forward[k] += h
        backward[k] -= h
        grad[k] = (objective(forward) - objective(backward)) / (2.0 * h)
    return grad
