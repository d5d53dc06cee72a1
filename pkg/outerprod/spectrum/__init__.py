"""Spectrum of rank-1 products and independent polynomial/determinant oracles."""

from .char_poly import CharPoly, char_poly, outer_matrix, rank_one_char_poly
from .determinant import det_rank_one_shift, det_via_elimination, shifted_outer_matrix
from .rank_one import SpectrumMode, SpectrumMultiset, rank_one_spectrum, spectrum_counts

__all__ = [
  'CharPoly',
  'SpectrumMode',
  'SpectrumMultiset',
  'char_poly',
  'det_rank_one_shift',
  'det_via_elimination',
  'outer_matrix',
  'rank_one_char_poly',
  'rank_one_spectrum',
  'shifted_outer_matrix',
  'spectrum_counts',
]
