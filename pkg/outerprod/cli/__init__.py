"""Introspection-based command line builder and the outerprod commands."""

from .argument_parser import ArgumentParser
from .command_discovery import CommandDiscovery, CommandInfo
from .command_executor import CommandExecutor
from .command_parser import CommandParser
from .commands import OuterProductCommands, SpectrumOption, StatementOption
from .docstring_parser import DocStringParser, ParamDoc
from .summary import render_summary

__all__ = [
  'ArgumentParser',
  'CommandDiscovery',
  'CommandExecutor',
  'CommandInfo',
  'CommandParser',
  'DocStringParser',
  'OuterProductCommands',
  'ParamDoc',
  'SpectrumOption',
  'StatementOption',
  'render_summary',
]
