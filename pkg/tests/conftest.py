"""Shared fixtures for the logkernel test suite."""

import math

import pytest

from logkernel.catalog import build_registry
from logkernel.models.quadrature import QuadConfig


# Grid used by the acceptance checks on closed forms
A_VALUES = (0.5, 1.0, math.pi / 2, math.pi, 2.0, 2 * math.pi, 5.0)


@pytest.fixture
def qcfg() -> QuadConfig:
    return QuadConfig()


@pytest.fixture(scope="session")
def registry():
    return build_registry()


@pytest.fixture
def registry_ids(registry) -> list[str]:
    return [identity.id for identity in registry]
