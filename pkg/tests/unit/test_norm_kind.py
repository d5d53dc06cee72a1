"""Tests for NormKind parsing and norm evaluation."""

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from outerprod.core.norm_kind import NormKind, NormTag, norm
from outerprod.core.vector import Vector
from outerprod.errors import ConfigurationError


class TestNorm:
  """Norm values on the (3, 4) example."""

  @pytest.mark.parametrize(
    ('label', 'expected'),
    [('l2', 5.0), ('l1', 7.0), ('linf', 4.0)],
  )
  def test_standard_norms(self, label, expected):
    assert norm(Vector.of(3.0, 4.0), NormKind.parse(label)) == pytest.approx(expected, rel=1e-15)

  def test_default_is_euclidean(self):
    assert norm(Vector.of(3.0, 4.0)) == pytest.approx(5.0)

  def test_p_norm(self):
    v = Vector.of(3.0, 4.0)
    expected = (3.0**3 + 4.0**3) ** (1 / 3)
    assert norm(v, NormKind.parse('lp:3')) == pytest.approx(expected, rel=1e-14)

  def test_norms_are_nonnegative_for_negative_coordinates(self):
    v = Vector.of(-3.0, -4.0)
    assert norm(v, NormKind.parse('l1')) == 7.0
    assert norm(v, NormKind.parse('linf')) == 4.0

  def test_large_p_does_not_overflow(self):
    assert norm(Vector.of(3.0, 4.0), NormKind.parse('lp:1000')) == pytest.approx(4.0, rel=1e-15)

  def test_large_p_does_not_underflow(self):
    assert norm(Vector.of(0.1, 0.0), NormKind.parse('lp:400')) == pytest.approx(0.1, rel=1e-15)

  def test_zero_vector(self):
    for label in ('l2', 'l1', 'linf', 'lp:7'):
      assert norm(Vector.of(0.0, 0.0, 0.0), NormKind.parse(label)) == 0.0


coordinates = st.lists(
  st.floats(min_value=-1e6, max_value=1e6, allow_nan=False, allow_infinity=False),
  min_size=3,
  max_size=3,
)
norm_labels = st.sampled_from(['l2', 'l1', 'linf', 'lp:1.5', 'lp:3', 'lp:250'])


class TestNormAxioms:
  """Homogeneity and the triangle inequality for every norm kind."""

  @given(coordinates, st.floats(min_value=-1e3, max_value=1e3), norm_labels)
  def test_absolute_homogeneity(self, coords, factor, label):
    kind, v = NormKind.parse(label), Vector(tuple(coords))
    expected = abs(factor) * norm(v, kind)
    assert norm(v.scaled(factor), kind) == pytest.approx(expected, rel=1e-12, abs=1e-300)

  @given(coordinates, coordinates, norm_labels)
  def test_triangle_inequality(self, first, second, label):
    kind = NormKind.parse(label)
    a, b = Vector(tuple(first)), Vector(tuple(second))
    total = Vector(tuple(x + y for x, y in zip(first, second, strict=True)))
    bound = norm(a, kind) + norm(b, kind)
    assert norm(total, kind) <= bound * (1 + 1e-12) + 1e-300


class TestNormKind:
  """Parsing, labels and validation."""

  def test_parse_and_label_are_inverse(self):
    for label in ('l2', 'l1', 'linf', 'lp:2.5'):
      assert NormKind.parse(label).label == label

  def test_parse_is_case_insensitive(self):
    assert NormKind.parse(' LINF ').tag is NormTag.INFINITY

  def test_order(self):
    assert NormKind.parse('linf').order == math.inf
    assert NormKind.parse('lp:4').order == 4.0

  @pytest.mark.parametrize('text', ['l3', 'lp:', 'lp:abc', 'lp:1', 'lp:0.5', 'lp:inf', ''])
  def test_invalid_norms_rejected(self, text):
    with pytest.raises(ConfigurationError) as exc_info:
      NormKind.parse(text)
    assert exc_info.value.argument == 'norm'

  def test_p_only_allowed_for_p_norm(self):
    with pytest.raises(ConfigurationError):
      NormKind(NormTag.ONE, 2.0)
