"""Instantiate the command class with global options and invoke the chosen method."""

import argparse
import inspect
from typing import Any

from .argument_parser import GLOBAL_PREFIX


class CommandExecutor:
  """Execute a parsed command against its target class."""

  def __init__(self, target_class: type):
    """Initialize command executor.

    :param target_class: Class containing the command methods
    """
    self.target_class = target_class

  def create_instance(self, parsed: argparse.Namespace) -> Any:
    """Construct the target class from the ``_global_*`` values in ``parsed``."""
    kwargs = {
      name: getattr(parsed, f'{GLOBAL_PREFIX}{name}')
      for name in inspect.signature(self.target_class).parameters
      if hasattr(parsed, f'{GLOBAL_PREFIX}{name}')
    }
    return self.target_class(**kwargs)

  def execute_command(self, parsed: argparse.Namespace) -> Any:
    """Call the selected method with its keyword arguments."""
    info = parsed._cli_command
    instance = self.create_instance(parsed)
    method = getattr(instance, info.original_name)
    kwargs = {
      name: getattr(parsed, name)
      for name in inspect.signature(method).parameters
      if hasattr(parsed, name)
    }
    return method(**kwargs)
