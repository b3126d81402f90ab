"""Seeded random descriptors for property checks and experiment scripts."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .manifold import Component, ManifoldDescriptor, ProjectiveFactor


@dataclass(frozen=True)
class SamplerConfig:
    max_dim: int = 10
    min_dim: int = 1
    max_components: int = 3
    max_factors: int = 4
    twist_prob: float = 0.5
    empty_prob: float = 0.05


def random_composition(rng: random.Random, m: int, max_parts: int) -> list[int]:
    """Random ordered list of nonnegative dims summing to m, at most max_parts long."""
    k = rng.randint(1, max(1, max_parts))
    cuts = sorted(rng.randint(0, m) for _ in range(k - 1))
    bounds = [0] + cuts + [m]
    return [b - a for a, b in zip(bounds, bounds[1:])]


def random_component(rng: random.Random, m: int, cfg: SamplerConfig = SamplerConfig()) -> Component:
    dims = random_composition(rng, m, cfg.max_factors)
    return Component(tuple(ProjectiveFactor(i, rng.random() < cfg.twist_prob) for i in dims))


def random_descriptor(
    rng: random.Random,
    cfg: SamplerConfig = SamplerConfig(),
    m: int | None = None,
) -> ManifoldDescriptor:
    if m is None:
        m = rng.randint(cfg.min_dim, cfg.max_dim)
    if rng.random() < cfg.empty_prob:
        return ManifoldDescriptor.empty(m)
    count = rng.randint(1, cfg.max_components)
    return ManifoldDescriptor(m, tuple(random_component(rng, m, cfg) for _ in range(count)))


def random_basis_sum(rng: random.Random, m: int, cfg: SamplerConfig = SamplerConfig()) -> ManifoldDescriptor:
    """A sum of V_k x RP(m-k)^H with V_k untwisted RP products of dimension k.

    Each k is present with probability one half; V_m x RP(0)^H is allowed.
    """
    comps = []
    for k in range(m + 1):
        if rng.random() < 0.5:
            continue
        hopf = ProjectiveFactor(m - k, True)
        if k == 0:
            comps.append(Component((hopf,)))
            continue
        dims = random_composition(rng, k, cfg.max_factors)
        comps.append(Component(tuple(ProjectiveFactor(i) for i in dims) + (hopf,)))
    return ManifoldDescriptor(m, tuple(comps))
