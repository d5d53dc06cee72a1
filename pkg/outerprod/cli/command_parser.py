"""Command parsing: builds the argparse parser from discovered commands."""

import argparse

from outerprod.utils.version import get_version

from .argument_parser import ArgumentParser
from .command_discovery import CommandInfo


class CommandParser:
  """Create the top-level parser with one sub-parser per command."""

  def __init__(self, title: str, prog: str | None = None):
    """Initialize command parser.

    :param title: Application description shown in help
    :param prog: Program name (argparse default when None)
    """
    self.title = title
    self.prog = prog

  def create_parser(
    self, commands: dict[str, CommandInfo], target_class: type | None = None
  ) -> argparse.ArgumentParser:
    """Build the parser.

    :param commands: Discovered commands keyed by CLI name
    :param target_class: Class whose constructor supplies the global options
    """
    parser = argparse.ArgumentParser(prog=self.prog, description=self.title)
    parser.add_argument('--version', action='version', version=f'%(prog)s {get_version()}')
    if target_class is not None:
      ArgumentParser.add_global_class_args(parser, target_class)

    subparsers = parser.add_subparsers(title='commands', dest='command', metavar='COMMAND')
    for name, info in commands.items():
      sub = subparsers.add_parser(name, help=info.description, description=info.description)
      ArgumentParser.add_function_args(sub, info.function)
      sub.set_defaults(_cli_command=info)

    return parser
