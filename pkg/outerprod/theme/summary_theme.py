"""Theme for campaign summaries and statement statuses."""

from __future__ import annotations

from dataclasses import dataclass

from outerprod.bounds.inequality_sides import SideStatus

from .enums import Fore
from .theme_style import ThemeStyle


@dataclass(frozen=True)
class SummaryTheme:
  """Styles for each statement status plus headings and highlighted numbers."""

  title: ThemeStyle
  heading: ThemeStyle
  number: ThemeStyle
  holds: ThemeStyle
  fails: ThemeStyle
  degenerate: ThemeStyle
  undefined: ThemeStyle

  def status_style(self, status: SideStatus) -> ThemeStyle:
    styles = {
      SideStatus.HOLDS: self.holds,
      SideStatus.FAILS: self.fails,
      SideStatus.DEGENERATE_LHS_NEG_INF: self.degenerate,
      SideStatus.RHS_UNDEFINED: self.undefined,
    }
    return styles[status]


def create_default_theme() -> SummaryTheme:
  """Green holds, bold red fails, yellow degenerate, magenta undefined."""
  return SummaryTheme(
    title=ThemeStyle(fg=Fore.CYAN, bold=True),
    heading=ThemeStyle(bold=True, underline=True),
    number=ThemeStyle(fg=Fore.BLUE),
    holds=ThemeStyle(fg=Fore.GREEN),
    fails=ThemeStyle(fg=Fore.RED, bold=True),
    degenerate=ThemeStyle(fg=Fore.YELLOW),
    undefined=ThemeStyle(fg=Fore.MAGENTA),
  )


def get_default_theme() -> SummaryTheme:
  """Return the default summary theme."""
  return create_default_theme()
