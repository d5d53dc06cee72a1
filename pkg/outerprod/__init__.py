"""outerprod: the outer product (a; b) of real vectors and its inequality bounds.

(a; b) sums, over the eigenvalues of a b^T, the integral of log|t - lam| from
||a|| to ||b||. The package evaluates it in closed form, cross-checks it
against quadrature of log|det(a b^T - t I)|, computes both sides of the
associated upper bounds, and fuzzes them with seeded campaigns.
"""

from .bounds import (
  ExtendedReal,
  InequalitySides,
  SideStatus,
  Statement,
  evaluate_statement,
  jensen_step_sides,
  prop_key_sides,
  theorem1_sides,
  theorem2_sides,
)
from .core import AdmissibilityReport, NormKind, Vector, check_admissible, norm
from .errors import (
  ConfigurationError,
  HypothesisError,
  InputError,
  NumericalError,
  OracleMismatchError,
  OuterProductError,
  QuadratureError,
)
from .harness import CampaignConfig, CampaignReport, fuzz_campaign
from .integrals import adaptive_logdet_integral, integral_log_abs, outer_product
from .spectrum import SpectrumMode, rank_one_spectrum

__all__ = [
  'AdmissibilityReport',
  'CampaignConfig',
  'CampaignReport',
  'ConfigurationError',
  'ExtendedReal',
  'HypothesisError',
  'InequalitySides',
  'InputError',
  'NormKind',
  'NumericalError',
  'OracleMismatchError',
  'OuterProductError',
  'QuadratureError',
  'SideStatus',
  'SpectrumMode',
  'Statement',
  'Vector',
  'adaptive_logdet_integral',
  'check_admissible',
  'evaluate_statement',
  'fuzz_campaign',
  'integral_log_abs',
  'jensen_step_sides',
  'norm',
  'outer_product',
  'prop_key_sides',
  'rank_one_spectrum',
  'theorem1_sides',
  'theorem2_sides',
]
