"""Validated settings for a fuzz campaign."""

from __future__ import annotations

from dataclasses import dataclass, field, fields
from typing import Any

from outerprod.core.norm_kind import NormKind
from outerprod.errors import ConfigurationError
from outerprod.integrals.quadrature import QuadratureConfig
from outerprod.spectrum.rank_one import SpectrumMode

from .seeding import MAX_SEED

MIN_DIM = 2
MAX_DIM = 8


@dataclass(frozen=True)
class CampaignConfig:
  """Everything that determines a campaign's report.

  The report is a pure function of this value; worker count is an execution
  detail passed to ``fuzz_campaign`` separately.
  """

  trials: int = 1000
  seed: int = 0
  dim_min: int = 2
  dim_max: int = 6
  norm_kind: NormKind = field(default_factory=NormKind.euclidean)
  coord_scale: float = 5.0
  modes: tuple[SpectrumMode, ...] = (SpectrumMode.MULTISET, SpectrumMode.SET)
  quadrature: QuadratureConfig = field(default_factory=QuadratureConfig)
  check_quadrature_every: int = 100
  relax_norm_floor: bool = False

  def __post_init__(self):
    """Validate ranges and normalize ``modes``."""
    if self.trials < 1:
      raise ConfigurationError(f'must be at least 1, got {self.trials!r}', 'trials')
    if not 0 <= self.seed <= MAX_SEED:
      raise ConfigurationError(f'must be an unsigned 64-bit integer, got {self.seed!r}', 'seed')
    for name in ('dim_min', 'dim_max'):
      value = getattr(self, name)
      if not MIN_DIM <= value <= MAX_DIM:
        raise ConfigurationError(f'must lie in [{MIN_DIM}, {MAX_DIM}], got {value!r}', name)
    if self.dim_min > self.dim_max:
      raise ConfigurationError(
        f'dim_min={self.dim_min} exceeds dim_max={self.dim_max}', 'dim_min'
      )
    if not self.coord_scale > 0:
      raise ConfigurationError(f'must be positive, got {self.coord_scale!r}', 'coord_scale')
    if self.check_quadrature_every < 1:
      raise ConfigurationError(
        f'must be at least 1, got {self.check_quadrature_every!r}', 'check_quadrature_every'
      )

    modes = tuple(mode for mode in SpectrumMode if mode in set(self.modes))
    if not modes:
      raise ConfigurationError('at least one spectrum mode is required', 'modes')
    object.__setattr__(self, 'modes', modes)

  @property
  def dims(self) -> tuple[int, int]:
    return self.dim_min, self.dim_max

  @classmethod
  def from_kwargs(cls, **kwargs) -> CampaignConfig:
    """Build from flat keyword arguments, ignoring unknown keys and None values.

    Quadrature settings (``abs_tol``, ``rel_tol``, ``max_depth``,
    ``singularity_margin``) are routed into the nested ``QuadratureConfig``;
    ``norm_kind`` and ``modes`` accept their wire strings.
    """
    quadrature = kwargs.get('quadrature')
    if not isinstance(quadrature, QuadratureConfig):
      quadrature = QuadratureConfig.from_kwargs(**kwargs)
    names = {f.name for f in fields(cls)} - {'quadrature'}
    values: dict[str, Any] = {k: v for k, v in kwargs.items() if k in names and v is not None}

    if isinstance(values.get('norm_kind'), str):
      values['norm_kind'] = NormKind.parse(values['norm_kind'])
    if 'modes' in values:
      values['modes'] = tuple(SpectrumMode(mode) for mode in values['modes'])

    return cls(quadrature=quadrature, **values)

  def to_dict(self) -> dict[str, Any]:
    """JSON-friendly echo of the configuration."""
    return {
      'trials': self.trials,
      'seed': self.seed,
      'dim_min': self.dim_min,
      'dim_max': self.dim_max,
      'norm_kind': self.norm_kind.label,
      'coord_scale': self.coord_scale,
      'modes': [mode.value for mode in self.modes],
      'quadrature': self.quadrature.to_dict(),
      'check_quadrature_every': self.check_quadrature_every,
      'relax_norm_floor': self.relax_norm_floor,
    }

  @classmethod
  def from_dict(cls, data: dict[str, Any]) -> CampaignConfig:
    """Inverse of ``to_dict``."""
    flat = {k: v for k, v in data.items() if k != 'quadrature'}
    return cls.from_kwargs(**flat, **data.get('quadrature', {}))
