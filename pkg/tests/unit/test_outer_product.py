"""Tests for the outer product (a; b)."""

import pytest

from outerprod.core.norm_kind import NormKind
from outerprod.core.vector import Vector
from outerprod.errors import InputError
from outerprod.integrals import OrientedInterval, outer_product, outer_product_terms
from outerprod.spectrum import SpectrumMode, rank_one_spectrum

from tests.utils.test_helpers import FIXTURE_OUTER_PRODUCT


class TestOuterProduct:
  """Golden values and structural identities."""

  def test_orthogonal_pair(self):
    value = outer_product(Vector.of(2.0, 0.0), Vector.of(0.0, 3.0))
    assert value == pytest.approx(1.8190850, abs=1e-7)

  def test_aligned_pair(self):
    value = outer_product(Vector.of(2.0, 0.0), Vector.of(3.0, 0.0))
    assert value == pytest.approx(2.1588830, abs=1e-7)

  def test_fixture_pair(self, fixture_pair):
    assert outer_product(*fixture_pair) == pytest.approx(FIXTURE_OUTER_PRODUCT, abs=1e-12)

  def test_set_mode_counts_distinct_eigenvalues_once(self):
    a, b = Vector.of(2.0, 0.0), Vector.of(0.0, 3.0)
    assert outer_product(a, b, mode=SpectrumMode.SET) == pytest.approx(1.8190850 / 2, abs=1e-7)

  def test_antisymmetric(self):
    a, b = Vector.of(1.2, -0.4, 2.0), Vector.of(-3.0, 1.0, 0.5)
    assert outer_product(a, b) + outer_product(b, a) == 0.0

  def test_self_annihilation(self):
    v = Vector.of(1.0, 2.0, 3.0)
    assert outer_product(v, v) == 0.0

  def test_equal_norms_vanish(self):
    assert outer_product(Vector.of(3.0, 4.0), Vector.of(5.0, 0.0)) == 0.0

  def test_norm_kind_changes_limits(self):
    a, b = Vector.of(1.0, 1.0), Vector.of(2.0, 0.0)
    assert outer_product(a, b, NormKind.parse('l1')) == 0.0
    assert outer_product(a, b) != 0.0

  def test_dimension_mismatch(self):
    with pytest.raises(InputError):
      outer_product(Vector.of(1.0), Vector.of(1.0, 2.0))


class TestOrientedInterval:
  """Test suite for the integration limits."""

  @pytest.mark.parametrize(
    ('norm_a', 'norm_b', 'sign'),
    [(1.0, 2.0, 1.0), (2.0, 1.0, -1.0), (2.0, 2.0, 0.0)],
  )
  def test_sign(self, norm_a, norm_b, sign):
    interval = OrientedInterval(norm_a, norm_b)
    assert interval.sign == sign
    assert interval.lo <= interval.hi

  def test_terms_carry_multiplicity(self):
    a, b = Vector.of(2.0, 0.0, 0.0), Vector.of(3.0, 0.0, 0.0)
    terms = outer_product_terms(rank_one_spectrum(a, b), OrientedInterval.of(a, b))
    assert [(lam, mult) for lam, mult, _ in terms] == [(6.0, 1), (0.0, 2)]
