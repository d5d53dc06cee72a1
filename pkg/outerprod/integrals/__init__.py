"""Closed-form log integrals, the outer product, and quadrature oracles."""

from .log_integral import LogIntegralResult, integral_abs, integral_log_abs, log_abs_primitive
from .outer_product import OrientedInterval, outer_product, outer_product_terms
from .quadrature import (
  QuadratureConfig,
  QuadratureResult,
  adaptive_logdet_integral,
  adaptive_simpson,
  integrate_with_singular_ends,
  logdet_quadrature,
  roots_near_interval,
)

__all__ = [
  'LogIntegralResult',
  'OrientedInterval',
  'QuadratureConfig',
  'QuadratureResult',
  'adaptive_logdet_integral',
  'adaptive_simpson',
  'integral_abs',
  'integral_log_abs',
  'integrate_with_singular_ends',
  'log_abs_primitive',
  'logdet_quadrature',
  'outer_product',
  'outer_product_terms',
  'roots_near_interval',
]
