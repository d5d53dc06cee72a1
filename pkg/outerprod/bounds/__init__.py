"""Both sides of the outer-product inequality statements."""

from .extended_real import ExtendedKind, ExtendedReal
from .inequality_sides import CAMPAIGN_STATEMENTS, InequalitySides, SideStatus, Statement
from .statements import (
  PairContext,
  check_logdet_oracle,
  evaluate_statement,
  integrated_min_bound,
  integrated_rhs,
  jensen_step_sides,
  mean_abs_distance,
  min_log_distance,
  pointwise_rhs,
  prop_key_sides,
  rhs_correction_sum,
  summed_min_log_distance,
  theorem1_sides,
  theorem2_sides,
)

__all__ = [
  'CAMPAIGN_STATEMENTS',
  'ExtendedKind',
  'ExtendedReal',
  'InequalitySides',
  'PairContext',
  'SideStatus',
  'Statement',
  'check_logdet_oracle',
  'evaluate_statement',
  'integrated_min_bound',
  'integrated_rhs',
  'jensen_step_sides',
  'mean_abs_distance',
  'min_log_distance',
  'pointwise_rhs',
  'prop_key_sides',
  'rhs_correction_sum',
  'summed_min_log_distance',
  'theorem1_sides',
  'theorem2_sides',
]
