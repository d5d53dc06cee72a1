"""Small numeric helpers for reporting."""


class MathUtil:
  """Percentages used in campaign summaries."""

  @classmethod
  def percent(cls, val: int | float, max_val: int | float) -> float:
    """Return 100 * val / max_val.

    :raises ValueError: If max_val is not positive
    """
    if max_val <= 0:
      raise ValueError('max_val must be positive')
    return 100.0 * val / float(max_val)
