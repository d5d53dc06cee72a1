"""Tests for the closed-form log-distance integrals."""

import math

import pytest
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from outerprod.errors import InputError
from outerprod.integrals import (
  adaptive_simpson,
  integral_abs,
  integral_log_abs,
  log_abs_primitive,
)


class TestIntegralLogAbs:
  """Golden values and edge cases of integral_log_abs."""

  def test_eigenvalue_below_interval(self):
    result = integral_log_abs(2.0, 3.0, 0.0)
    assert result.value == pytest.approx(3 * math.log(3) - 2 * math.log(2) - 1, abs=1e-12)
    assert result.value == pytest.approx(0.9095425, abs=1e-7)
    assert not result.singular_interior
    assert len(result.pieces) == 1

  def test_eigenvalue_above_interval(self):
    result = integral_log_abs(2.0, 3.0, 6.0)
    assert result.value == pytest.approx(4 * math.log(4) - 3 * math.log(3) - 1, abs=1e-12)
    assert result.value == pytest.approx(1.2493405, abs=1e-7)

  def test_interior_singularity(self):
    result = integral_log_abs(1.0, 3.0, 2.0)
    assert result.value == pytest.approx(-2.0, abs=1e-12)
    assert result.singular_interior
    assert result.pieces == pytest.approx((-1.0, -1.0))

  def test_singularity_at_endpoint_is_not_interior(self):
    result = integral_log_abs(1.0, 2.0, 1.0)
    assert not result.singular_interior
    assert result.value == pytest.approx(-1.0, abs=1e-12)

  def test_empty_interval(self):
    assert integral_log_abs(2.0, 2.0, 0.0).value == 0.0

  def test_rejects_reversed_limits(self):
    with pytest.raises(InputError, match='alpha <= beta'):
      integral_log_abs(3.0, 2.0, 0.0)

  @pytest.mark.parametrize('bad', [math.inf, math.nan])
  def test_rejects_non_finite(self, bad):
    with pytest.raises(InputError):
      integral_log_abs(1.0, 2.0, bad)

  def test_primitive_limit_at_singularity(self):
    assert log_abs_primitive(2.0, 2.0) == 0.0
    assert log_abs_primitive(3.0, 2.0) == pytest.approx(-1.0)


class TestIntegralAbs:
  """Test suite for the integral of |t - lam|."""

  @pytest.mark.parametrize(
    ('lam', 'expected'),
    [(0.0, 2.5), (6.0, 3.5), (2.5, 0.25), (2.0, 0.5)],
  )
  def test_values_on_two_three(self, lam, expected):
    assert integral_abs(2.0, 3.0, lam) == pytest.approx(expected)


finite = st.floats(min_value=-10.0, max_value=10.0, allow_nan=False, allow_infinity=False)
widths = st.floats(min_value=0.0, max_value=10.0)


class TestIntegralLogAbsProperties:
  """Translation covariance and agreement with direct quadrature."""

  @given(finite, widths, finite, finite)
  def test_translation_covariance(self, alpha, width, lam, shift):
    beta = alpha + width
    moved = integral_log_abs(alpha + shift, beta + shift, lam + shift).value
    assert moved == pytest.approx(integral_log_abs(alpha, beta, lam).value, abs=1e-10)

  @settings(max_examples=100, suppress_health_check=[HealthCheck.filter_too_much])
  @given(finite, st.floats(min_value=0.01, max_value=5.0), finite)
  def test_matches_adaptive_simpson_away_from_the_eigenvalue(self, alpha, width, lam):
    beta = alpha + width
    assume(lam <= alpha - 0.1 or lam >= beta + 0.1)
    direct = adaptive_simpson(lambda t: math.log(abs(t - lam)), alpha, beta).value
    closed = integral_log_abs(alpha, beta, lam).value
    assert direct == pytest.approx(closed, rel=1e-8, abs=1e-9)
