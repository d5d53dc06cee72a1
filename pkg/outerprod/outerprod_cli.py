"""OuterProductCLI entry point: orchestrates discovery, parsing, execution and exit codes."""

from __future__ import annotations

import argparse
import logging
import sys

from outerprod.cli.command_discovery import CommandDiscovery
from outerprod.cli.command_executor import CommandExecutor
from outerprod.cli.command_parser import CommandParser
from outerprod.cli.commands import OuterProductCommands
from outerprod.errors import NumericalError, OuterProductError

LOG_FORMAT = '%(levelname)s %(name)s: %(message)s'

EXIT_OK = 0
EXIT_FAILS = 1
EXIT_INPUT = 2
EXIT_NUMERICAL = 3
EXIT_INTERRUPTED = 130


def exit_code_for(error: OuterProductError) -> int:
  """2 for input and configuration errors, 3 for numerical failures."""
  return EXIT_NUMERICAL if isinstance(error, NumericalError) else EXIT_INPUT


def configure_logging(verbose: bool) -> None:
  """Send INFO records to stderr when verbose; otherwise leave logging unconfigured."""
  if verbose:
    logging.basicConfig(level=logging.INFO, format=LOG_FORMAT, stream=sys.stderr, force=True)


class OuterProductCLI:
  """Build a CLI from a command class and run it, mapping errors to exit codes."""

  def __init__(
    self, target: type = OuterProductCommands, title: str | None = None, prog: str = 'outerprod'
  ):
    """Initialize the CLI.

    :param target: Class whose public methods become sub-commands
    :param title: Description shown in help (class docstring by default)
    :param prog: Program name used in usage lines
    """
    self.discovery = CommandDiscovery(target)
    self.title = title or self.discovery.generate_title()
    self.parser_service = CommandParser(self.title, prog=prog)
    self.executor = CommandExecutor(target)
    self.commands = self.discovery.commands

  def create_parser(self) -> argparse.ArgumentParser:
    return self.parser_service.create_parser(self.commands, self.discovery.target_class)

  def run(self, args: list[str] | None = None) -> int:
    """Parse ``args`` (``sys.argv[1:]`` when None), execute, and return the exit code."""
    parser = self.create_parser()
    result: int

    try:
      parsed = parser.parse_args(args)
    except SystemExit as e:
      return e.code if isinstance(e.code, int) else EXIT_INPUT

    if not hasattr(parsed, '_cli_command'):
      parser.print_usage(sys.stderr)
      print('Error: a command is required', file=sys.stderr)
      return EXIT_INPUT

    configure_logging(bool(getattr(parsed, '_global_verbose', False)))

    try:
      result = int(self.executor.execute_command(parsed) or EXIT_OK)
    except OuterProductError as e:
      print(f'Error: {e}', file=sys.stderr)
      result = exit_code_for(e)
    except KeyboardInterrupt:
      print('\nOperation cancelled by user', file=sys.stderr)
      result = EXIT_INTERRUPTED

    return result

