"""The outerprod commands; every public method becomes a sub-command."""

from __future__ import annotations

import logging
from enum import Enum
from pathlib import Path

from outerprod.bounds.inequality_sides import CAMPAIGN_STATEMENTS, SideStatus, Statement
from outerprod.bounds.statements import check_logdet_oracle, evaluate_statement
from outerprod.core.admissibility import check_admissible
from outerprod.core.norm_kind import NormKind
from outerprod.core.vector import Vector, require_same_dim
from outerprod.harness.campaign import CampaignReport, run_trials
from outerprod.harness.campaign_config import CampaignConfig
from outerprod.harness.report_writer import (
  replay_fixture,
  write_counterexample_fixtures,
  write_report_json,
  write_trials_csv,
)
from outerprod.integrals.outer_product import outer_product
from outerprod.integrals.quadrature import QuadratureConfig
from outerprod.spectrum.determinant import MAX_ELIMINATION_DIM
from outerprod.spectrum.rank_one import SpectrumMode, rank_one_spectrum
from outerprod.theme.color_formatter import ColorFormatter
from outerprod.utils.data_struct_util import DataStructUtil
from outerprod.utils.spinner import ProgressSpinner

from .summary import render_summary

logger = logging.getLogger(__name__)


class SpectrumOption(Enum):
  """``--mode`` values."""

  MULTISET = 'multiset'
  SET = 'set'
  BOTH = 'both'

  @property
  def modes(self) -> tuple[SpectrumMode, ...]:
    return tuple(SpectrumMode) if self is SpectrumOption.BOTH else (SpectrumMode(self.value),)


class StatementOption(Enum):
  """``--statement`` values; ``all`` means the three campaign statements."""

  PROP_KEY = 'prop_key'
  THEOREM1 = 'theorem1'
  THEOREM2 = 'theorem2'
  JENSEN_STEP = 'jensen_step'
  ALL = 'all'

  @property
  def statements(self) -> tuple[Statement, ...]:
    return CAMPAIGN_STATEMENTS if self is StatementOption.ALL else (Statement(self.value),)


def parse_pair(a: str, b: str) -> tuple[Vector, Vector]:
  """Parse the ``--a``/``--b`` JSON arrays and require equal dimensions."""
  first, second = Vector.from_json(a, argument='a'), Vector.from_json(b, argument='b')
  require_same_dim(first, second)
  return first, second


def emit(payload: object) -> None:
  """Print a value as indented, key-sorted JSON on stdout."""
  print(DataStructUtil.to_json(payload, indent=2))


class OuterProductCommands:
  """Outer product (a; b) of real vectors: evaluation, bounds and fuzz campaigns."""

  def __init__(self, verbose: bool = False, no_color: bool = False):
    """Global options.

    :param verbose: Log progress at INFO level on stderr
    :param no_color: Disable colored output
    """
    self.verbose = verbose
    self.color_formatter = ColorFormatter(enable_colors=False if no_color else None)

  def eval(
    self, a: str, b: str, norm: str = 'l2', mode: SpectrumOption = SpectrumOption.MULTISET
  ) -> int:
    """Print the outer product (a; b).

    :param a: First vector as a JSON array, e.g. "[2,0]"
    :param b: Second vector as a JSON array
    :param norm: l2, l1, linf or lp:<p>
    :param mode: Count eigenvalues as a multiset, a set, or both
    """
    first, second = parse_pair(a, b)
    kind = NormKind.parse(norm)
    values = {m.value: outer_product(first, second, kind, m) for m in mode.modes}
    emit(values if mode is SpectrumOption.BOTH else values[mode.value])
    return 0

  def spectrum(self, a: str, b: str, mode: SpectrumOption = SpectrumOption.MULTISET) -> int:
    """Print the spectrum of a b^T.

    :param a: First vector as a JSON array
    :param b: Second vector as a JSON array
    :param mode: Count eigenvalues as a multiset, a set, or both
    """
    first, second = parse_pair(a, b)
    spectra = {m.value: rank_one_spectrum(first, second, m).to_dict() for m in mode.modes}
    emit(spectra if mode is SpectrumOption.BOTH else spectra[mode.value])
    return 0

  def check(self, a: str, b: str, norm: str = 'l2') -> int:
    """Print which standing hypotheses the pair satisfies; never fails on inadmissible pairs.

    :param a: First vector as a JSON array
    :param b: Second vector as a JSON array
    :param norm: l2, l1, linf or lp:<p>
    """
    first, second = parse_pair(a, b)
    emit(check_admissible(first, second, NormKind.parse(norm)))
    return 0

  def bounds(
    self,
    a: str,
    b: str,
    norm: str = 'l2',
    mode: SpectrumOption = SpectrumOption.MULTISET,
    statement: StatementOption = StatementOption.ALL,
    log_base: float | None = None,
    relax_norm_floor: bool = False,
    abs_tol: float | None = None,
    rel_tol: float | None = None,
    max_depth: int | None = None,
  ) -> int:
    """Print both sides, the margin and the status of each inequality statement.

    The theorem2 left-hand side is cross-checked against log-determinant
    quadrature whenever the dimension allows it.

    :param a: First vector as a JSON array
    :param b: Second vector as a JSON array
    :param norm: l2, l1, linf or lp:<p>
    :param mode: Spectrum counting used for #Spec
    :param statement: Statement to evaluate
    :param log_base: Report sides in this logarithm base instead of e
    :param relax_norm_floor: Allow ||a|| <= 1; results are flagged outside_hypotheses
    :param abs_tol: Quadrature absolute tolerance
    :param rel_tol: Quadrature relative tolerance
    :param max_depth: Quadrature recursion limit
    """
    first, second = parse_pair(a, b)
    kind = NormKind.parse(norm)
    quadrature = QuadratureConfig.from_kwargs(abs_tol=abs_tol, rel_tol=rel_tol, max_depth=max_depth)

    results = [
      evaluate_statement(s, first, second, kind, m, relax_norm_floor)
      for s in statement.statements
      for m in mode.modes
    ]
    if Statement.THEOREM2 in statement.statements and first.dim <= MAX_ELIMINATION_DIM:
      discrepancy = check_logdet_oracle(first, second, kind, quadrature)
      logger.info('theorem2 quadrature cross-check discrepancy %.3g', discrepancy)

    if log_base is not None:
      results = [sides.in_log_base(log_base) for sides in results]
    emit(results)
    return 0

  def fuzz(
    self,
    out: Path,
    trials: int = 1000,
    seed: int = 0,
    dim_min: int = 2,
    dim_max: int = 6,
    norm: str = 'l2',
    mode: SpectrumOption = SpectrumOption.BOTH,
    coord_scale: float = 5.0,
    abs_tol: float | None = None,
    rel_tol: float | None = None,
    max_depth: int | None = None,
    check_quadrature_every: int = 100,
    relax_norm_floor: bool = False,
    workers: int = 1,
    csv: Path | None = None,
  ) -> int:
    """Run a seeded campaign; exit status 1 when any statement fails on some trial.

    :param out: Path of the JSON report; counterexample fixtures go next to it
    :param trials: Number of trials
    :param seed: Campaign seed (unsigned 64-bit)
    :param dim_min: Smallest dimension sampled
    :param dim_max: Largest dimension sampled
    :param norm: l2, l1, linf or lp:<p>
    :param mode: Spectrum counting modes to evaluate
    :param coord_scale: Coordinates are drawn from [-coord_scale, coord_scale]
    :param abs_tol: Quadrature absolute tolerance
    :param rel_tol: Quadrature relative tolerance
    :param max_depth: Quadrature recursion limit
    :param check_quadrature_every: Spot-check the closed form every this many trials
    :param relax_norm_floor: Sample pairs with ||a|| <= 1 as well
    :param workers: Worker processes; the report does not depend on it
    :param csv: Optional per-trial CSV path
    """
    cfg = CampaignConfig.from_kwargs(
      trials=trials,
      seed=seed,
      dim_min=dim_min,
      dim_max=dim_max,
      norm_kind=norm,
      coord_scale=coord_scale,
      modes=[m.value for m in mode.modes],
      abs_tol=abs_tol,
      rel_tol=rel_tol,
      max_depth=max_depth,
      check_quadrature_every=check_quadrature_every,
      relax_norm_floor=relax_norm_floor,
    )

    spinner = ProgressSpinner(self.color_formatter, enabled=False if self.verbose else None)
    with spinner.track('fuzz'):
      records = run_trials(cfg, workers, progress=spinner.update)

    report = CampaignReport.from_records(cfg, records)
    write_report_json(report, out)
    if csv is not None:
      write_trials_csv(records, cfg.modes, csv)
    write_counterexample_fixtures(report, out)

    print(render_summary(report, self.color_formatter))
    return 1 if report.fails else 0

  def replay(self, fixture: Path) -> int:
    """Re-evaluate a counterexample fixture; exit status 1 if it still fails.

    :param fixture: Path of a counterexample-<trial>.json file
    """
    statuses = replay_fixture(fixture)
    emit(statuses)
    return 1 if SideStatus.FAILS in statuses.values() else 0
