"""Determinants of shifted rank-1 matrices: closed form and elimination oracle."""

from __future__ import annotations

import numpy as np

from outerprod.core.vector import Vector, require_same_dim

from .char_poly import as_square_matrix

MAX_ELIMINATION_DIM = 16


def det_rank_one_shift(a: Vector, b: Vector, t: float) -> float:
  """det(a b^T - t I) = (-t)^(n-1) (<a,b> - t), by the matrix determinant lemma."""
  n = require_same_dim(a, b)
  return (-t) ** (n - 1) * (a.dot(b) - t)


def det_via_elimination(m) -> float:
  """Determinant by Gaussian elimination with partial pivoting, n <= 16.

  Row swaps flip the sign; an exactly zero pivot column yields 0.
  """
  work = as_square_matrix(m, MAX_ELIMINATION_DIM).copy()
  n = work.shape[0]
  result = 1.0

  for col in range(n):
    pivot = col + int(np.argmax(np.abs(work[col:, col])))
    if work[pivot, col] == 0.0:
      return 0.0
    if pivot != col:
      work[[col, pivot]] = work[[pivot, col]]
      result = -result

    result *= work[col, col]
    factors = work[col + 1 :, col] / work[col, col]
    work[col + 1 :, col:] -= np.outer(factors, work[col, col:])

  return float(result)


def shifted_outer_matrix(a: Vector, b: Vector, t: float) -> np.ndarray:
  """a b^T - t I as a dense array."""
  n = require_same_dim(a, b)
  return np.outer(a.as_array(), b.as_array()) - t * np.eye(n)
