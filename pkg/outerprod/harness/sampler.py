"""Rejection sampler for admissible pairs."""

from __future__ import annotations

import logging
from dataclasses import dataclass

from outerprod.core.admissibility import check_admissible
from outerprod.core.norm_kind import NormKind, norm
from outerprod.core.vector import Vector
from outerprod.errors import SamplerExhaustedError

from .seeding import trial_rng

logger = logging.getLogger(__name__)

MAX_CONSECUTIVE_REJECTIONS = 10_000
# ||a|| lands here after rescaling, just clear of the NormFloor boundary.
NORM_FLOOR_TARGET = 1.0 + 2.0**-10


@dataclass(frozen=True)
class SampleOutcome:
  """An admissible pair and the number of raw draws discarded before it."""

  a: Vector
  b: Vector
  rejections: int

  @property
  def dim(self) -> int:
    return self.a.dim


def sample_admissible_pair(
  sub_seed: int,
  dims: tuple[int, int],
  coord_scale: float,
  norm_kind: NormKind | None = None,
  relax_norm_floor: bool = False,
  max_rejections: int = MAX_CONSECUTIVE_REJECTIONS,
) -> SampleOutcome:
  """Draw (a, b) until the pair passes every hypothesis.

  The dimension is drawn once from ``dims`` (inclusive). Each attempt draws
  both vectors uniformly from [-coord_scale, coord_scale]^n, orders them so
  that ||b|| > ||a||, and, unless ``relax_norm_floor`` is set, scales both by
  the common factor that lifts ||a|| just above 1. Attempts failing any
  remaining hypothesis are rejected.

  :param sub_seed: Per-trial seed; equal seeds give equal pairs
  :param dims: Inclusive dimension range
  :param coord_scale: Half-width of the coordinate box
  :param norm_kind: Norm used by the hypotheses
  :param relax_norm_floor: Accept pairs with ||a|| <= 1 and skip rescaling
  :raises SamplerExhaustedError: After ``max_rejections`` consecutive rejections
  """
  rng = trial_rng(sub_seed)
  dim = int(rng.integers(dims[0], dims[1], endpoint=True))

  for rejections in range(max_rejections):
    first, second = rng.uniform(-coord_scale, coord_scale, size=(2, dim))
    a, b = Vector.from_iterable(first), Vector.from_iterable(second)
    norm_a, norm_b = norm(a, norm_kind), norm(b, norm_kind)
    if norm_a > norm_b:
      a, b, norm_a = b, a, norm_b

    if not relax_norm_floor and 0 < norm_a <= 1:
      factor = NORM_FLOOR_TARGET / norm_a
      a, b = a.scaled(factor), b.scaled(factor)

    if check_admissible(a, b, norm_kind).admissible(relax_norm_floor):
      return SampleOutcome(a, b, rejections)

  logger.warning(
    'sampler gave up after %d rejections (dim=%d, coord_scale=%r)', max_rejections, dim, coord_scale
  )
  raise SamplerExhaustedError(max_rejections, coord_scale)
