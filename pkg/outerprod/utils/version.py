"""Package version lookup."""

import importlib.metadata
import tomllib
from pathlib import Path


def get_version() -> str:
  """Installed outerprod version, falling back to pyproject.toml in a checkout.

  :return: Version string such as ``'v0.1.0'``
  """
  version = None

  try:
    version = importlib.metadata.version('outerprod')
  except importlib.metadata.PackageNotFoundError:
    try:
      pyproject_path = Path(__file__).parent.parent.parent / 'pyproject.toml'
      if pyproject_path.exists():
        with open(pyproject_path, 'rb') as f:
          version = tomllib.load(f).get('project', {}).get('version')
    except (OSError, tomllib.TOMLDecodeError):
      version = None

  return f'v{version}' if version else 'v0.0.0'
