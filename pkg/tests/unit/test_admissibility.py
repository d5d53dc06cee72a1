"""Tests for the standing hypotheses of the bound statements."""

import pytest

from outerprod.core.admissibility import AdmissibilityReport, Hypothesis, check_admissible
from outerprod.core.norm_kind import NormKind
from outerprod.core.vector import Vector
from outerprod.errors import InputError


class TestCheckAdmissible:
  """Test suite for check_admissible."""

  def test_orthogonal_pair_is_admissible(self, fixture_pair):
    report = check_admissible(*fixture_pair)
    assert report.failures == ()
    assert report.admissible()
    assert report.norm_a == pytest.approx(1.5)
    assert report.norm_b == pytest.approx(2.5)
    assert report.midpoint == pytest.approx(2.0)
    assert report.max_spec == 0.0

  def test_spectrum_bound_failure(self):
    report = check_admissible(Vector.of(2.0, 0.0), Vector.of(3.0, 0.0))
    assert report.failures == (Hypothesis.SPECTRUM_BOUND,)
    assert report.max_spec == pytest.approx(6.0)
    assert report.midpoint == pytest.approx(2.5)

  def test_norm_floor_failure(self):
    report = check_admissible(Vector.of(0.5, 0.0), Vector.of(0.0, 2.0))
    assert report.failures == (Hypothesis.NORM_FLOOR,)
    assert not report.admissible()
    assert report.admissible(relax_norm_floor=True)
    assert report.outside_hypotheses

  def test_equal_norms_fail_norm_order(self):
    report = check_admissible(Vector.of(2.0, 0.0), Vector.of(0.0, 2.0))
    assert Hypothesis.NORM_ORDER in report.failures

  def test_every_failure_reported(self):
    report = check_admissible(Vector.of(3.0, 0.0), Vector.of(0.5, 0.0))
    assert set(report.failures) == {Hypothesis.NORM_ORDER}
    ones = Vector.of(1.0, 1.0, 1.0, 1.0)
    report = check_admissible(ones, ones, NormKind.parse('linf'))
    assert set(report.failures) == {
      Hypothesis.NORM_ORDER,
      Hypothesis.NORM_FLOOR,
      Hypothesis.SPECTRUM_BOUND,
    }

  def test_norm_kind_changes_verdict(self):
    """(1, 1) has l1 norm 2 but euclidean norm sqrt(2)."""
    a, b = Vector.of(0.8, 0.8), Vector.of(-1.5, 1.5)
    assert Hypothesis.NORM_FLOOR not in check_admissible(a, b, NormKind.parse('l1')).failures
    assert Hypothesis.NORM_FLOOR in check_admissible(a, b, NormKind.parse('linf')).failures

  def test_dimension_mismatch(self):
    with pytest.raises(InputError):
      check_admissible(Vector.of(1.0, 2.0), Vector.of(1.0, 2.0, 3.0))

  def test_report_round_trip(self):
    report = check_admissible(Vector.of(0.9, 0.0), Vector.of(3.0, 0.0))
    assert AdmissibilityReport.from_dict(report.to_dict()) == report
    data = report.to_dict()
    assert data['failures'] == ['NormFloor', 'SpectrumBound']
    assert data['admissible'] is False
