"""Text spinner showing campaign progress on stderr."""

from __future__ import annotations

import sys
import threading
import time
from collections.abc import Iterator
from contextlib import contextmanager
from typing import TextIO

from outerprod.theme.color_formatter import ColorFormatter
from outerprod.theme.summary_theme import get_default_theme


class ProgressSpinner:
  """Animated ``label [done/total]`` line, drawn only when the stream is a TTY."""

  FRAMES = ('⠋', '⠙', '⠹', '⠸', '⠼', '⠴', '⠦', '⠧', '⠇', '⠏')

  def __init__(
    self,
    color_formatter: ColorFormatter | None = None,
    stream: TextIO | None = None,
    enabled: bool | None = None,
  ):
    """Create a spinner.

    :param color_formatter: Styles the final status line
    :param stream: Output stream (stderr by default)
    :param enabled: Force drawing on or off; None draws only on a TTY
    """
    self.stream = stream or sys.stderr
    self.color_formatter = color_formatter
    self.enabled = self.stream.isatty() if enabled is None else enabled
    self.label = ''
    self.done = 0
    self.total = 0
    self.current = 0
    self.running = False
    self.thread: threading.Thread | None = None
    self._lock = threading.Lock()

  @property
  def status_line(self) -> str:
    return f'{self.label} [{self.done}/{self.total}]' if self.total else self.label

  def update(self, done: int, total: int) -> None:
    """Progress callback, compatible with ``fuzz_campaign(progress=...)``."""
    with self._lock:
      self.done, self.total = done, total

  def start(self, label: str) -> None:
    with self._lock:
      self.label = label
      if not self.enabled:
        return
      self.running = True
      self.thread = threading.Thread(target=self._spin, daemon=True)
      self.thread.start()

  def _spin(self) -> None:
    while self.running:
      with self._lock:
        line = f'\r{self.FRAMES[self.current]} {self.status_line}'
      self.stream.write(line)
      self.stream.flush()
      self.current = (self.current + 1) % len(self.FRAMES)
      time.sleep(0.1)

  def stop(self, success: bool = True) -> None:
    """Stop animating and leave a final ✓/✗ line."""
    self.running = False
    if self.thread:
      self.thread.join(timeout=0.5)
      self.thread = None

    if self.enabled:
      self.stream.write('\r' + ' ' * (len(self.status_line) + 3) + '\r')
      final = f'{"✓" if success else "✗"} {self.status_line}'
      if self.color_formatter:
        theme = get_default_theme()
        final = self.color_formatter.apply_style(final, theme.holds if success else theme.fails)
      self.stream.write(final + '\n')
      self.stream.flush()

  @contextmanager
  def track(self, label: str) -> Iterator[ProgressSpinner]:
    """Run the spinner for the duration of the block."""
    self.start(label)
    success = True
    try:
      yield self
    except BaseException:
      success = False
      raise
    finally:
      self.stop(success)
