"""Human-readable campaign summary."""

from __future__ import annotations

from outerprod.bounds.inequality_sides import SideStatus
from outerprod.harness.campaign import CampaignReport
from outerprod.theme.color_formatter import ColorFormatter
from outerprod.theme.summary_theme import SummaryTheme, get_default_theme
from outerprod.utils.math_util import MathUtil

STATUS_LABELS = {
  SideStatus.HOLDS: 'holds',
  SideStatus.FAILS: 'fails',
  SideStatus.DEGENERATE_LHS_NEG_INF: 'degenerate',
  SideStatus.RHS_UNDEFINED: 'undefined',
}


def render_summary(
  report: CampaignReport,
  formatter: ColorFormatter | None = None,
  theme: SummaryTheme | None = None,
) -> str:
  """Tally per statement/mode plus rejection and quadrature figures.

  :param report: Aggregated campaign
  :param formatter: Styles the output; plain text when None
  :param theme: Summary theme (default theme when None)
  """
  formatter = formatter or ColorFormatter(enable_colors=False)
  theme = theme or get_default_theme()
  cfg = report.config

  def number(value: object) -> str:
    return formatter.apply_style(str(value), theme.number)

  lines = [
    formatter.apply_style(
      f'Campaign: {cfg.trials} trials, seed {cfg.seed}, norm {cfg.norm_kind.label}', theme.title
    ),
    f'  rejections: {number(report.rejection_count)} '
    f'({MathUtil.percent(report.rejection_count, report.draws):.1f}% of draws)',
    f'  quadrature: {number(report.quadrature.checks)} checks, '
    f'{number(report.quadrature.failures)} failures, '
    f'{number(report.quadrature.singular_checks)} singular, '
    f'max non-singular discrepancy {report.quadrature.max_nonsingular_discrepancy:.3g}',
  ]
  if report.outside_hypotheses:
    lines.append(f'  outside hypotheses: {number(report.outside_hypotheses)} trials')

  lines.append(formatter.apply_style('Statuses', theme.heading))
  width = max(len(key) for key in report.totals)
  for key, totals in report.totals.items():
    cells = [
      formatter.apply_style(f'{label} {totals[status.value]}', theme.status_style(status))
      if totals[status.value]
      else f'{label} 0'
      for status, label in STATUS_LABELS.items()
    ]
    stats = report.margins.get(key)
    median = '' if stats is None else f'  median margin {stats["p50"]:.6g}'
    lines.append(f'  {key.ljust(width)}  ' + '  '.join(cells) + median)

  verdict = (
    formatter.apply_style(f'{report.fails} counterexample trials', theme.fails)
    if report.fails
    else formatter.apply_style('no counterexamples', theme.holds)
  )
  lines.append(verdict)
  return '\n'.join(lines)
