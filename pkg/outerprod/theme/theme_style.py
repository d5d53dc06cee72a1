"""Individual style configuration for text formatting."""

from __future__ import annotations

from dataclasses import dataclass

from .enums import Fore


@dataclass(frozen=True)
class ThemeStyle:
  """Foreground color plus text decorations."""

  fg: Fore | None = None
  bold: bool = False
  underline: bool = False
