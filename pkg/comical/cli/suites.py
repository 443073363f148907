"""
Suite command

Runs one named verification suite, or all of them, and reports pass/fail.
A failing suite exits with status 1.
"""

import json
import logging

import click

from comical.cli import cli
from comical.cli.context import CliContext, handle_errors, pass_cli
from comical.services.suite_service import SUITE_NAMES, SuiteService

logger = logging.getLogger(__name__)


def _echo_report(report) -> None:
    counts = report.counts()
    click.echo(f'{report.name}: {report.status} '
               f'({counts["pass"]} passed, {counts["fail"]} failed, {counts["skip"]} skipped, '
               f'{report.wall_time:.2f}s)')
    for check in report.failures():
        detail = f' {json.dumps(check.counterexample)}' if check.counterexample else ''
        click.echo(f'  FAIL {check.key}{detail}')


@cli.command()
@click.argument('name', type=click.Choice(SUITE_NAMES + ('all',)))
@click.option('--max-dim', type=int, default=None, help='Override the suite dimension bound.')
@click.option('--seed', type=int, default=None, help='Seed for randomized sampling.')
@click.option('--json', 'as_json', is_flag=True, help='Print the JSON report.')
@click.option('--no-timing', is_flag=True, help='Leave wall times out of JSON reports.')
@click.option('-o', '--output', type=click.Path(dir_okay=False), default=None,
              help='Write the JSON report to a file.')
@pass_cli
@handle_errors
def suite(ctx: CliContext, name, max_dim, seed, as_json, no_timing, output):
    """Run a verification suite."""
    if seed is None:
        seed = int(ctx.app.config.get('DEFAULT_SEED', 0))
    service = SuiteService(ctx.app.search_limit)
    names = SUITE_NAMES if name == 'all' else (name,)
    reports = [service.run_suite(each, max_dim, seed) for each in names]

    documents = [report.to_dict(timing=not no_timing) for report in reports]
    payload = documents[0] if len(documents) == 1 else documents
    if output:
        ctx.io.save(payload, output, ctx.indent)
    if as_json or ctx.as_json:
        ctx.echo_json(payload)
    else:
        for report in reports:
            _echo_report(report)

    if not all(report.passed for report in reports):
        ctx.app.logger.error(f'{sum(not r.passed for r in reports)} suite(s) failed')
        raise click.exceptions.Exit(1)
