"""Tests for ExtendedReal arithmetic and ordering."""

import math

import pytest

from outerprod.bounds import ExtendedKind, ExtendedReal

NEG = ExtendedReal.neg_infinity()
POS = ExtendedReal.pos_infinity()


class TestExtendedReal:
  """Test suite for the extended real line."""

  def test_ordering(self):
    values = [POS, ExtendedReal.finite(1.0), NEG, ExtendedReal.finite(-5.0)]
    assert sorted(values) == [NEG, ExtendedReal.finite(-5.0), ExtendedReal.finite(1.0), POS]
    assert NEG < -1e308
    assert POS > 1e308

  def test_neg_infinity_absorbs_finite_addition(self):
    assert NEG + 3.0 == NEG
    assert 3.0 + NEG == NEG
    assert ExtendedReal.finite(1.5) + 2 == ExtendedReal.finite(3.5)

  def test_opposite_infinities_undefined(self):
    with pytest.raises(ArithmeticError):
      NEG + POS

  def test_finite_minus_neg_infinity_is_pos_infinity(self):
    margin = 2.0 - NEG
    assert margin.kind is ExtendedKind.POS_INFINITY
    assert margin.to_float() == math.inf

  def test_negation(self):
    assert -NEG == POS
    assert -ExtendedReal.finite(2.0) == ExtendedReal.finite(-2.0)

  def test_from_float(self):
    assert ExtendedReal.from_float(-math.inf) == NEG
    assert ExtendedReal.from_float(0.25).value == 0.25
    with pytest.raises(ValueError):
      ExtendedReal.from_float(math.nan)

  def test_finite_rejects_infinity(self):
    with pytest.raises(ValueError):
      ExtendedReal.finite(math.inf)

  def test_hash_consistent_with_equality(self):
    one = ExtendedReal.finite(1.0)
    assert len({NEG, ExtendedReal.neg_infinity(), one, ExtendedReal.finite(1.0)}) == 2

  def test_hash_agrees_with_equal_floats(self):
    for value, plain in ((ExtendedReal.finite(1.0), 1.0), (NEG, -math.inf), (POS, math.inf)):
      assert value == plain
      assert hash(value) == hash(plain)
    assert {ExtendedReal.finite(2.0), 2.0, 2} == {2.0}

  def test_json_literals(self):
    assert NEG.to_json() == '-inf'
    assert POS.to_json() == 'inf'
    assert ExtendedReal.finite(0.5).to_json() == 0.5
    assert ExtendedReal.from_json('-inf') == NEG
    assert ExtendedReal.from_json(2) == ExtendedReal.finite(2.0)
    with pytest.raises(ValueError):
      ExtendedReal.from_json('nan')

  def test_repr(self):
    assert repr(NEG) == '-inf'
    assert repr(ExtendedReal.finite(0.1)) == '0.1'
