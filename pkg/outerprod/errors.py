"""Exception hierarchy shared by every outerprod module."""

from __future__ import annotations

from typing import TYPE_CHECKING, Any

if TYPE_CHECKING:
  from outerprod.core.admissibility import AdmissibilityReport


class OuterProductError(Exception):
  """Base class for all outerprod errors."""


class InputError(OuterProductError, ValueError):
  """Malformed or inconsistent user input."""

  def __init__(self, message: str, argument: str | None = None):
    """Create an input error.

    :param message: Human readable description
    :param argument: Name of the offending argument, when known
    """
    self.argument = argument
    super().__init__(f'{argument}: {message}' if argument else message)


class ConfigurationError(InputError):
  """Invalid configuration value (norm kind, tolerances, campaign settings)."""


class HypothesisError(InputError):
  """The pair (a, b) violates the standing hypotheses of the bound statements."""

  def __init__(self, report: AdmissibilityReport):
    """Wrap the report of the rejected pair."""
    self.report = report
    self.failures = list(report.failures)
    names = ', '.join(failure.value for failure in self.failures)
    super().__init__(f'pair is not admissible: {names}')


class SamplerExhaustedError(ConfigurationError):
  """Too many consecutive rejections while sampling admissible pairs."""

  def __init__(self, attempts: int, coord_scale: float):
    """Record the attempt budget and the box half-width that exhausted it."""
    self.attempts = attempts
    self.coord_scale = coord_scale
    super().__init__(
      f'{attempts} consecutive rejections; coord_scale={coord_scale!r} is likely mis-configured'
    )


class NumericalError(OuterProductError, ArithmeticError):
  """A numerical routine could not deliver a result to the requested accuracy."""


class QuadratureError(NumericalError):
  """Adaptive quadrature exhausted its depth budget before meeting tolerance."""

  def __init__(self, estimate: float, error_bound: float, max_depth: int):
    """Keep the best estimate so callers can still report it."""
    self.estimate = estimate
    self.error_bound = error_bound
    self.max_depth = max_depth
    super().__init__(
      f'max_depth={max_depth} exhausted; best estimate {estimate!r}, error bound {error_bound!r}'
    )


class OracleMismatchError(NumericalError):
  """A closed form and its independent oracle disagree beyond tolerance."""

  def __init__(self, closed_form: float, oracle: float, tolerance: float):
    """Record both values and the tolerance they violated."""
    self.closed_form = closed_form
    self.oracle = oracle
    self.tolerance = tolerance
    super().__init__(
      f'closed form {closed_form!r} and oracle {oracle!r} differ by more than {tolerance!r}'
    )


class RhsUndefinedError(NumericalError):
  """A log argument 1 - 2*lam/s of a bound's right-hand side is not positive."""

  def __init__(self, eigenvalue: float, argument: float):
    """Record the eigenvalue and its non-positive log argument."""
    self.eigenvalue = eigenvalue
    self.argument = argument
    super().__init__(f'log argument {argument!r} for eigenvalue {eigenvalue!r} is not positive')


def describe(error: BaseException) -> dict[str, Any]:
  """Summarize an error for inclusion in a serialized record."""
  return {'type': type(error).__name__, 'message': str(error)}
