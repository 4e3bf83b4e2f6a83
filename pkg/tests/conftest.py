"""Shared fixtures: canonical enumerations are expensive, so build them once."""

from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings

from dcograph.mine import enumerate_digraphs

settings.register_profile(
    "suite",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def reps_by_n() -> dict[int, list]:
    """Canonical representatives of every digraph with 1..5 vertices."""
    return {n: enumerate_digraphs(n) for n in range(1, 6)}


@pytest.fixture(scope="session")
def reps_small(reps_by_n) -> list:
    """All representatives with at most 4 vertices, flattened."""
    return [g for n in range(1, 5) for g in reps_by_n[n]]
