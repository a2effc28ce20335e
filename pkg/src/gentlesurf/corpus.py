"""Seeded random triangulations spanning genus 0-1 and 1-3 boundary components."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product

from .surface import Triangulation, random_triangulation

SURFACE_TYPES = tuple(product((0, 1), (1, 2, 3)))


@dataclass(frozen=True)
class CorpusConfig:
    seed: int = 1
    count: int = 100
    max_extra_points: int = 3
    surface_types: tuple = SURFACE_TYPES


def corpus(cfg: CorpusConfig = CorpusConfig()) -> list[tuple[tuple[int, int], Triangulation]]:
    """``cfg.count`` triangulations, cycling through the surface types."""
    rng = random.Random(cfg.seed)
    out = []
    for k in range(cfg.count):
        g, b = cfg.surface_types[k % len(cfg.surface_types)]
        out.append(((g, b), random_triangulation(g, b, rng, cfg.max_extra_points)))
    return out
