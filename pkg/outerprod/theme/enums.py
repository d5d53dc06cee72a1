"""ANSI escape constants."""

from enum import Enum


class Fore(Enum):
  """Foreground colors (standard 16-color SGR codes)."""

  RED = '\x1b[31m'
  GREEN = '\x1b[32m'
  YELLOW = '\x1b[33m'
  BLUE = '\x1b[34m'
  MAGENTA = '\x1b[35m'
  CYAN = '\x1b[36m'


class Style(Enum):
  """Text style constants."""

  RESET_ALL = '\x1b[0m'
  ANSI_BOLD = '\x1b[1m'
  ANSI_UNDERLINE = '\x1b[4m'
