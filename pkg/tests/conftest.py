"""Test configuration and fixtures for outerprod tests."""

import pytest

from outerprod.core.vector import Vector
from outerprod.harness.campaign_config import CampaignConfig
from outerprod.outerprod_cli import OuterProductCLI

from tests.utils.test_helpers import interior_pair


@pytest.fixture
def fixture_pair() -> tuple[Vector, Vector]:
  """Orthogonal admissible pair a=(1.5,0), b=(0,2.5): spectrum {0, 0}, norms 1.5 and 2.5."""
  return Vector.of(1.5, 0.0), Vector.of(0.0, 2.5)


@pytest.fixture
def singular_pair() -> tuple[Vector, Vector]:
  """Admissible pair whose inner product 1.8 lies inside [1.5, sqrt(5.44)]."""
  return Vector.of(1.5, 0.0), Vector.of(1.2, 2.0)


@pytest.fixture
def constructed_interior_pair() -> tuple[Vector, Vector]:
  """Pair built to have norms 1.5 and 3.0 and inner product 2.0."""
  return interior_pair(1.5, 3.0, 2.0, dim=3)


@pytest.fixture
def small_config() -> CampaignConfig:
  """Twenty trials, quadrature every fifth trial."""
  return CampaignConfig(trials=20, seed=42, dim_min=2, dim_max=4, check_quadrature_every=5)


@pytest.fixture
def cli() -> OuterProductCLI:
  """A fresh CLI instance."""
  return OuterProductCLI()


def pytest_configure(config):
  """Configure pytest markers."""
  config.addinivalue_line('markers', 'slow: marks tests as slow (deselect with \'-m "not slow"\')')
