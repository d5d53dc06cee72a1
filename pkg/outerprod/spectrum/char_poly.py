"""Characteristic polynomial oracle (Faddeev-LeVerrier recursion)."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from outerprod.core.vector import Vector, require_same_dim
from outerprod.errors import InputError

MAX_CHAR_POLY_DIM = 8


@dataclass(frozen=True)
class CharPoly:
  """Monic polynomial det(tI - M), coefficients in descending degree."""

  coeffs: tuple[float, ...]

  @property
  def degree(self) -> int:
    """Polynomial degree, equal to the matrix dimension."""
    return len(self.coeffs) - 1

  def __call__(self, t: float) -> float:
    """Evaluate at t (Horner)."""
    return float(np.polyval(self.coeffs, t))


def as_square_matrix(m, max_dim: int) -> np.ndarray:
  """Coerce ``m`` to a square float64 array of dimension at most ``max_dim``.

  :raises InputError: On non-square shapes or oversized matrices
  """
  matrix = np.asarray(m, dtype=np.float64)
  if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1] or matrix.shape[0] == 0:
    raise InputError(f'expected a non-empty square matrix, got shape {matrix.shape}', 'matrix')
  if matrix.shape[0] > max_dim:
    raise InputError(f'dimension {matrix.shape[0]} exceeds oracle limit {max_dim}', 'matrix')
  return matrix


def char_poly(m) -> CharPoly:
  """Characteristic polynomial of a square matrix of dimension <= 8.

  Recursion: M_1 = I, c_{n-1} = -tr(A); M_k = A M_{k-1} + c_{n-k+1} I,
  c_{n-k} = -tr(A M_k) / k.
  Accumulates in ``np.longdouble``.
  """
  matrix = as_square_matrix(m, MAX_CHAR_POLY_DIM).astype(np.longdouble)
  n = matrix.shape[0]
  identity = np.eye(n, dtype=np.longdouble)

  coeffs = [np.longdouble(1.0)]
  basis = np.zeros((n, n), dtype=np.longdouble)
  for k in range(1, n + 1):
    basis = matrix @ basis + coeffs[-1] * identity
    coeffs.append(-np.trace(matrix @ basis) / k)

  return CharPoly(tuple(float(c) for c in coeffs))


def outer_matrix(a: Vector, b: Vector) -> np.ndarray:
  """The dense matrix a b^T."""
  require_same_dim(a, b)
  return np.outer(a.as_array(), b.as_array())


def rank_one_char_poly(a: Vector, b: Vector) -> CharPoly:
  """Closed-form characteristic polynomial t^(n-1) (t - <a,b>)."""
  n = require_same_dim(a, b)
  return CharPoly((1.0, -a.dot(b)) + (0.0,) * (n - 1))
