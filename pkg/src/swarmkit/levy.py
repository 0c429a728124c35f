"""Heavy-tailed step sampling via Mantegna's two-normal quotient.

A step is ``scale * u / |v| ** (1/lam)`` with u ~ N(0, sigma_u^2) and
v ~ N(0, 1). The quotient's magnitude has survival function P(|step| > s)
falling off like s**(-lam), i.e. the step density decays as |s|**(-1-lam),
so ``lam`` is used directly as the quotient index. The sigma_u below is
Mantegna's, which additionally makes the body of the distribution track the
corresponding stable law for lam < 2; for lam in (2, 3) the law is no longer
stable (the classic recipe's sine factor goes negative there, hence the
absolute value) but the tail index is still ``lam``, which is the property
the optimizers rely on. At exactly lam = 2 the recipe degenerates to zero
steps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .core import Array, ConfigurationError, RngStream


@dataclass(frozen=True)
class LevyConfig:
    """Tail exponent and overall scale of the step distribution."""

    lam: float
    scale: float = 1.0

    def __post_init__(self):
        if not 1.0 < self.lam < 3.0:
            raise ConfigurationError("lam (tail exponent) must be in (1, 3)")
        if self.scale < 0:
            raise ConfigurationError("scale must be non-negative")


@lru_cache(maxsize=None)
def _mantegna_sigma(lam: float) -> float:
    num = math.gamma(1.0 + lam) * abs(math.sin(math.pi * lam / 2.0))
    den = math.gamma((1.0 + lam) / 2.0) * lam * 2.0 ** ((lam - 1.0) / 2.0)
    return (num / den) ** (1.0 / lam)


def sample_step(config: LevyConfig, rng: RngStream) -> float:
    """One signed heavy-tailed step, symmetric about zero.

    Draw order: one standard normal for the numerator, then one for the
    denominator (two draws total, always). Delegates to :func:`sample_vector`
    so the scalar and vector paths are bit-identical.
    """
    return float(sample_vector(config, 1, rng)[0])


def sample_vector(config: LevyConfig, dimension: int, rng: RngStream) -> Array:
    """``dimension`` independent steps, one per coordinate.

    Draw order: a block of ``dimension`` numerator normals, then a block of
    ``dimension`` denominator normals (2 draws per coordinate, always); for
    dimension 1 this consumes the stream exactly like :func:`sample_step`.
    """
    if dimension < 1:
        raise ConfigurationError("dimension must be at least 1")
    u = rng.normals(dimension) * _mantegna_sigma(config.lam)
    v = rng.normals(dimension)
    return config.scale * u / np.abs(v) ** (1.0 / config.lam)
