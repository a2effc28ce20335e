import random
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from gentlesurf.corpus import SURFACE_TYPES, CorpusConfig, corpus
from gentlesurf.surface import random_triangulation

settings.register_profile("default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def small_corpus():
    return [T for _, T in corpus(CorpusConfig(seed=7, count=24))]


@st.composite
def triangulations(draw, types=SURFACE_TYPES, max_extra_points=2):
    g, b = draw(st.sampled_from(types))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_triangulation(g, b, random.Random(seed), max_extra_points)
