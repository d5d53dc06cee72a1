"""Tests for version lookup."""

import importlib.metadata
from unittest.mock import patch

from outerprod.utils.version import get_version


class TestGetVersion:
  """Test suite for get_version."""

  def test_installed_version(self):
    with patch('importlib.metadata.version', return_value='1.2.3'):
      assert get_version() == 'v1.2.3'

  def test_falls_back_to_pyproject(self):
    with patch(
      'importlib.metadata.version', side_effect=importlib.metadata.PackageNotFoundError
    ):
      assert get_version() == 'v0.1.0'

  def test_missing_pyproject(self):
    with (
      patch('importlib.metadata.version', side_effect=importlib.metadata.PackageNotFoundError),
      patch('pathlib.Path.exists', return_value=False),
    ):
      assert get_version() == 'v0.0.0'
