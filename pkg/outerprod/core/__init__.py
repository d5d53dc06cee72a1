"""Vectors, norms, and admissibility of (a, b) pairs."""

from .vector import Vector, require_same_dim  # isort: skip
from .norm_kind import NormKind, NormTag, norm  # isort: skip
from .admissibility import AdmissibilityReport, Hypothesis, check_admissible

__all__ = [
  'AdmissibilityReport',
  'Hypothesis',
  'NormKind',
  'NormTag',
  'Vector',
  'check_admissible',
  'norm',
  'require_same_dim',
]
