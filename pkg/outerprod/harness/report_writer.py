"""Campaign persistence: JSON report, per-trial CSV, replayable counterexample fixtures."""

from __future__ import annotations

import csv
import json
import logging
from pathlib import Path
from typing import Any

from outerprod.bounds.inequality_sides import CAMPAIGN_STATEMENTS, SideStatus
from outerprod.bounds.statements import evaluate_statement
from outerprod.core.norm_kind import NormKind
from outerprod.errors import InputError
from outerprod.spectrum.rank_one import SpectrumMode
from outerprod.utils.data_struct_util import DataStructUtil

from .campaign import CampaignReport
from .campaign_config import CampaignConfig
from .trial import TrialRecord, sides_key

logger = logging.getLogger(__name__)

FIXTURE_VERSION = 1


def write_report_json(report: CampaignReport, path: Path | str) -> Path:
  """Write the complete report; identical configs produce identical bytes."""
  path = Path(path)
  path.parent.mkdir(parents=True, exist_ok=True)
  path.write_text(DataStructUtil.to_json(report.to_dict(), indent=2) + '\n', encoding='utf-8')
  logger.info('wrote report %s', path)
  return path


def read_report_json(path: Path | str) -> CampaignReport:
  """Load a report written by ``write_report_json``."""
  return CampaignReport.from_dict(json.loads(Path(path).read_text(encoding='utf-8')))


def csv_columns(modes: tuple[SpectrumMode, ...]) -> list[str]:
  """Header of the per-trial CSV."""
  columns = ['trial_index', 'sub_seed', 'dim', 'norm_a', 'norm_b', 'inner_product', 'rejections']
  for statement in CAMPAIGN_STATEMENTS:
    for mode in modes:
      key = sides_key(statement, mode).replace(':', '_')
      columns.extend([f'{key}_margin', f'{key}_status'])
  columns.append('quadrature_discrepancy')
  return columns


def csv_row(record: TrialRecord, modes: tuple[SpectrumMode, ...]) -> list[Any]:
  """Cells for one trial, aligned with ``csv_columns``."""
  row: list[Any] = [
    record.trial_index,
    record.sub_seed,
    record.dim,
    repr(record.admissibility.norm_a),
    repr(record.admissibility.norm_b),
    repr(record.a.dot(record.b)),
    record.rejections,
  ]
  for statement in CAMPAIGN_STATEMENTS:
    for mode in modes:
      sides = record.sides[sides_key(statement, mode)]
      margin = '' if sides.margin is None else sides.margin.to_json()
      row.extend([margin if isinstance(margin, str) else repr(margin), sides.status.value])

  check = record.quadrature_check
  row.append('' if check is None or check.discrepancy is None else repr(check.discrepancy))
  return row


def write_trials_csv(
  records: list[TrialRecord], modes: tuple[SpectrumMode, ...], path: Path | str
) -> Path:
  """One row per trial, in trial order."""
  path = Path(path)
  path.parent.mkdir(parents=True, exist_ok=True)
  with path.open('w', newline='', encoding='utf-8') as handle:
    writer = csv.writer(handle, lineterminator='\n')
    writer.writerow(csv_columns(modes))
    for record in sorted(records, key=lambda r: r.trial_index):
      writer.writerow(csv_row(record, modes))
  logger.info('wrote %d trial rows to %s', len(records), path)
  return path


def fixture_directory(report_path: Path | str) -> Path:
  """``<dir>/<stem>-counterexamples`` next to the JSON report."""
  report_path = Path(report_path)
  return report_path.with_name(f'{report_path.stem}-counterexamples')


def fixture_payload(record: TrialRecord, cfg: CampaignConfig) -> dict[str, Any]:
  """A standalone fixture: the record plus the settings needed to re-evaluate it."""
  return {
    'version': FIXTURE_VERSION,
    'seed': cfg.seed,
    'norm_kind': cfg.norm_kind.label,
    'relax_norm_floor': cfg.relax_norm_floor,
    'record': record.to_dict(),
  }


def write_counterexample_fixtures(report: CampaignReport, report_path: Path | str) -> list[Path]:
  """Write one ``counterexample-<trial_index>.json`` per failing trial.

  :return: Paths written, in trial order (empty, and no directory, when nothing failed)
  """
  written: list[Path] = []
  if report.counterexamples:
    directory = fixture_directory(report_path)
    directory.mkdir(parents=True, exist_ok=True)
    for record in report.counterexamples:
      path = directory / f'counterexample-{record.trial_index}.json'
      payload = fixture_payload(record, report.config)
      path.write_text(DataStructUtil.to_json(payload, indent=2) + '\n', encoding='utf-8')
      written.append(path)
    logger.info('wrote %d counterexample fixtures to %s', len(written), directory)
  return written


def load_fixture(path: Path | str) -> tuple[TrialRecord, NormKind, bool]:
  """Read a counterexample fixture.

  :raises InputError: If the file is missing or malformed
  """
  path = Path(path)
  try:
    data = json.loads(path.read_text(encoding='utf-8'))
    result = (
      TrialRecord.from_dict(data['record']),
      NormKind.parse(data.get('norm_kind', 'l2')),
      bool(data.get('relax_norm_floor', False)),
    )
  except FileNotFoundError as e:
    raise InputError(f'no such file {str(path)!r}', 'fixture') from e
  except (json.JSONDecodeError, KeyError, TypeError) as e:
    raise InputError(f'malformed fixture {str(path)!r}: {e}', 'fixture') from e
  return result


def replay_record(
  record: TrialRecord, kind: NormKind | None = None, relax_norm_floor: bool = False
) -> dict[str, SideStatus]:
  """Re-evaluate every statement/mode stored in ``record`` from its vectors alone."""
  statuses: dict[str, SideStatus] = {}
  for key in record.sides:
    statement, mode = record.sides[key].statement, record.sides[key].mode
    sides = evaluate_statement(statement, record.a, record.b, kind, mode, relax_norm_floor)
    statuses[key] = sides.status
  return statuses


def replay_fixture(path: Path | str) -> dict[str, SideStatus]:
  """Load a fixture and replay it."""
  record, kind, relax = load_fixture(path)
  return replay_record(record, kind, relax)
