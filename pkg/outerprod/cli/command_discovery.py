"""Command discovery from a class via introspection."""

import inspect
from collections.abc import Callable
from dataclasses import dataclass
from typing import Any

from outerprod.utils.text_util import TextUtil

from .docstring_parser import DocStringParser


@dataclass
class CommandInfo:
  """Information about a discovered command."""

  name: str
  original_name: str
  function: Callable[..., Any]
  description: str = ''


class CommandDiscovery:
  """Discover public methods of a class as flat sub-commands."""

  def __init__(self, target_class: type, method_filter: Callable[[str, Any], bool] | None = None):
    """Initialize command discovery.

    :param target_class: Class whose public methods become commands
    :param method_filter: Optional predicate on (name, member)
    """
    if not inspect.isclass(target_class):
      raise ValueError(f'Target must be a class, got {type(target_class).__name__}')
    self.target_class = target_class
    self.method_filter = method_filter or self._default_method_filter
    self.commands: dict[str, CommandInfo] = self.discover_commands()

  @staticmethod
  def _default_method_filter(name: str, member: Any) -> bool:
    return inspect.isfunction(member) and not name.startswith('_')

  def discover_commands(self) -> dict[str, CommandInfo]:
    """Map kebab-case command names to their ``CommandInfo``, in definition order."""
    commands: dict[str, CommandInfo] = {}
    for name, member in vars(self.target_class).items():
      if self.method_filter(name, member):
        description, _ = DocStringParser.extract_function_help(member)
        command_name = TextUtil.kebab_case(name)
        commands[command_name] = CommandInfo(command_name, name, member, description)
    return commands

  def generate_title(self) -> str:
    """First docstring line of the target class, or its name."""
    doc = inspect.getdoc(self.target_class)
    return doc.split('\n')[0] if doc else self.target_class.__name__
