"""Shared fixtures: the walkthrough network and seeded random suites."""

from __future__ import annotations

import pytest

from gtpmm import SharingMode, fixtures
from gtpmm.rng import SplitMix64, fold
from gtpmm.synth import random_instance, random_network

BOTH_SHARINGS = (SharingMode.PER_PERSON_INTERMEDIATE, SharingMode.SHARED_INTERMEDIATE)


@pytest.fixture(scope="session")
def walkthrough_net():
    return fixtures.walkthrough_network()


@pytest.fixture(scope="session")
def walkthrough_inst():
    return fixtures.walkthrough_instance()


def build_random_case(seed: int):
    """One bounded random (network, instance) pair for oracle comparisons.

    Bounds: <= 40 PoIs, <= 3 modes, k <= 4, <= 5 PoIs per category,
    <= 4 agents.
    """
    rng = SplitMix64(fold(seed, "case"))
    n = 20 + rng.below(21)
    g = 1 + rng.below(3)
    k = 1 + rng.below(4)
    per_cat = 1 + rng.below(5)
    agents = 1 + rng.below(4)
    net = random_network(seed, n, g)
    inst = random_instance(seed, net, k, per_cat, agents)
    return net, inst


@pytest.fixture(scope="session")
def oracle_suite():
    """The 200 seeded random cases shared by equivalence and dominance tests."""
    return [build_random_case(seed) for seed in range(200)]


@pytest.fixture(scope="session")
def trend_net():
    """A 200-PoI connected synthetic network for sweep-level checks."""
    return random_network(seed=2024, n_pois=200, n_modes=4, extra_edges=160)
