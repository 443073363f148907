"""
Command-line interface

The click group collects the computation commands and the suite runner,
each registered from its own module.
"""

import click

from comical import create_app
from comical.cli.context import CliContext

CONFIG_CHOICES = ('development', 'testing', 'production', 'default')


@click.group()
@click.option('--json', 'as_json', is_flag=True, help='Machine-readable output.')
@click.option('--config', 'config_name', type=click.Choice(CONFIG_CHOICES), default=None,
              help='Configuration to use (defaults to COMICAL_ENV).')
@click.pass_context
def cli(ctx, as_json, config_name):
    """Marked cubical sets, Gray tensors, triangulation and verification suites."""
    ctx.obj = CliContext(create_app(config_name), as_json)


# register commands
from comical.cli import compute, suites  # noqa: E402,F401

__all__ = ['cli']
