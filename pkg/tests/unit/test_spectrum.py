"""Tests for the rank-1 spectrum and its polynomial and determinant oracles."""

import numpy as np
import pytest

from outerprod.core.vector import Vector
from outerprod.errors import InputError
from outerprod.spectrum import (
  SpectrumMode,
  char_poly,
  det_rank_one_shift,
  det_via_elimination,
  outer_matrix,
  rank_one_char_poly,
  rank_one_spectrum,
  shifted_outer_matrix,
  spectrum_counts,
)


class TestRankOneSpectrum:
  """Test suite for the analytic spectrum of a b^T."""

  def test_generic_pair(self):
    spec = rank_one_spectrum(Vector.of(1.0, 2.0, 0.0), Vector.of(3.0, 1.0, 4.0))
    assert spec.entries == ((5.0, 1), (0.0, 2))
    assert spec.count == 3
    assert spec.max_eigenvalue == 5.0
    assert spec.eigenvalues() == [5.0, 0.0, 0.0]

  def test_set_mode_drops_multiplicity(self):
    spec = rank_one_spectrum(
      Vector.of(1.0, 2.0, 0.0), Vector.of(3.0, 1.0, 4.0), SpectrumMode.SET
    )
    assert spec.entries == ((5.0, 1), (0.0, 1))
    assert spec.count == 2

  def test_orthogonal_pair_collapses_to_zero(self, fixture_pair):
    spec = rank_one_spectrum(*fixture_pair)
    assert spec.entries == ((0.0, 2),)
    assert rank_one_spectrum(*fixture_pair, mode=SpectrumMode.SET).count == 1

  def test_negative_inner_product(self):
    spec = rank_one_spectrum(Vector.of(1.0, 0.0), Vector.of(-2.0, 0.0))
    assert spec.max_eigenvalue == 0.0
    assert -2.0 in spec.eigenvalues()

  def test_one_dimensional(self):
    spec = rank_one_spectrum(Vector.of(3.0), Vector.of(2.0))
    assert spec.entries == ((6.0, 1),)

  def test_dimension_mismatch(self):
    with pytest.raises(InputError):
      rank_one_spectrum(Vector.of(1.0), Vector.of(1.0, 2.0))

  def test_to_dict(self):
    data = rank_one_spectrum(Vector.of(1.0, 1.0), Vector.of(1.0, 1.0)).to_dict()
    assert data == {
      'mode': 'multiset',
      'count': 2,
      'entries': [
        {'eigenvalue': 2.0, 'multiplicity': 1},
        {'eigenvalue': 0.0, 'multiplicity': 1},
      ],
    }

  @pytest.mark.parametrize(
    ('dim', 'inner', 'expected'),
    [(4, 1.5, {'multiset': 4, 'set': 2}), (4, 0.0, {'multiset': 4, 'set': 1}),
     (1, 2.0, {'multiset': 1, 'set': 1})],
  )
  def test_spectrum_counts(self, dim, inner, expected):
    assert spectrum_counts(dim, inner) == expected


class TestCharPoly:
  """Test suite for the Faddeev-LeVerrier oracle."""

  def test_two_by_two(self):
    poly = char_poly([[1.0, 2.0], [3.0, 4.0]])
    assert poly.degree == 2
    assert poly.coeffs == pytest.approx((1.0, -5.0, -2.0))

  def test_matches_numpy_poly(self):
    rng = np.random.default_rng(7)
    matrix = rng.normal(size=(6, 6))
    assert char_poly(matrix).coeffs == pytest.approx(tuple(np.poly(matrix)), rel=1e-9, abs=1e-9)

  def test_rank_one_closed_form_matches_recursion(self):
    a, b = Vector.of(1.0, -2.0, 0.5), Vector.of(0.5, 1.0, 3.0)
    oracle = char_poly(outer_matrix(a, b))
    closed = rank_one_char_poly(a, b)
    assert closed.coeffs == pytest.approx(oracle.coeffs, abs=1e-12)
    assert closed(a.dot(b)) == pytest.approx(0.0, abs=1e-12)
    assert closed(0.0) == 0.0

  @pytest.mark.parametrize('bad', [np.zeros((2, 3)), np.zeros((9, 9)), np.zeros((0, 0))])
  def test_rejects_bad_shapes(self, bad):
    with pytest.raises(InputError):
      char_poly(bad)


class TestDeterminant:
  """Test suite for the shifted-determinant closed form and elimination oracle."""

  def test_matrix_determinant_lemma_examples(self):
    a, b = Vector.of(1.0, 2.0), Vector.of(3.0, 4.0)
    assert det_rank_one_shift(a, b, 1.0) == pytest.approx(-10.0)
    assert det_rank_one_shift(Vector.of(2.0, 0.0), Vector.of(3.0, 0.0), 2.0) == pytest.approx(-8.0)
    assert det_rank_one_shift(Vector.of(1.0, 0.0), Vector.of(3.0, 0.0), -1.0) == pytest.approx(4.0)
    assert det_rank_one_shift(Vector.of(1.0, 0.0), Vector.of(4.0, 0.0), 5.0) == pytest.approx(5.0)

  def test_elimination_known_values(self):
    assert det_via_elimination([[1.0, 2.0], [3.0, 4.0]]) == pytest.approx(-2.0)
    assert det_via_elimination([[0.0, 1.0], [1.0, 0.0]]) == pytest.approx(-1.0)
    assert det_via_elimination([[1.0, 2.0], [2.0, 4.0]]) == 0.0
    assert det_via_elimination(np.eye(16) * 2.0) == pytest.approx(2.0**16)

  def test_elimination_matches_closed_form(self):
    rng = np.random.default_rng(11)
    for dim in range(1, 9):
      a = Vector.from_iterable(rng.uniform(-3, 3, dim))
      b = Vector.from_iterable(rng.uniform(-3, 3, dim))
      t = float(rng.uniform(-4, 4))
      expected = det_rank_one_shift(a, b, t)
      oracle = det_via_elimination(shifted_outer_matrix(a, b, t))
      assert oracle == pytest.approx(expected, rel=1e-9, abs=1e-9)

  def test_elimination_dimension_limit(self):
    with pytest.raises(InputError):
      det_via_elimination(np.eye(17))
