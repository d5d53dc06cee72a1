"""Handles color application and terminal compatibility."""

from __future__ import annotations

import os
import sys
from typing import TextIO

from .enums import Style
from .theme_style import ThemeStyle


class ColorFormatter:
  """Apply ThemeStyle to text via ANSI escapes when the terminal supports color."""

  def __init__(self, enable_colors: bool | None = None, stream: TextIO | None = None):
    """Initialize the formatter.

    :param enable_colors: Force colors on or off, or None for auto-detection
    :param stream: Stream whose TTY status drives auto-detection (stdout by default)
    """
    stream = stream or sys.stdout
    self.colors_enabled = self.is_color_terminal(stream) if enable_colors is None else enable_colors

  @staticmethod
  def is_color_terminal(stream: TextIO) -> bool:
    """Honour NO_COLOR, CLICOLOR and FORCE_COLOR, then fall back to TTY and TERM checks."""
    result = True

    if os.environ.get('NO_COLOR') or os.environ.get('CLICOLOR') == '0':
      result = False
    elif os.environ.get('FORCE_COLOR') or os.environ.get('CLICOLOR'):
      result = True
    elif not stream.isatty():
      result = False
    elif sys.platform != 'win32' and os.environ.get('TERM', '').lower() in ('dumb', ''):
      result = False

    return result

  def apply_style(self, text: str, style: ThemeStyle | None) -> str:
    """Apply a theme style to text.

    :param text: Text to style
    :param style: Style to apply
    :return: Styled text, or the original text when colors are disabled
    """
    result = text

    if self.colors_enabled and text and style is not None:
      codes: list[str] = []

      if style.fg is not None:
        codes.append(style.fg.value)
      if style.bold:
        codes.append(Style.ANSI_BOLD.value)
      if style.underline:
        codes.append(Style.ANSI_UNDERLINE.value)

      if codes:
        result = ''.join(codes) + text + Style.RESET_ALL.value

    return result
