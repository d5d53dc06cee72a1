"""Terminal styling for command output."""

from .color_formatter import ColorFormatter
from .enums import Fore, Style
from .summary_theme import SummaryTheme, get_default_theme
from .theme_style import ThemeStyle

__all__ = [
  'ColorFormatter',
  'Fore',
  'Style',
  'SummaryTheme',
  'ThemeStyle',
  'get_default_theme',
]
