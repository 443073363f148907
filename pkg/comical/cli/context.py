"""
Shared CLI plumbing: the per-invocation context, error translation and output
"""

import functools
import json
import logging
from typing import Any, Optional

import click

from comical import ComicalApp
from comical.exceptions import ComicalError, PreconditionError
from comical.models.presheaf import MarkedCubicalSet, MarkedPresheaf, MarkedSimplicialSet
from comical.services.io_service import ObjectIOService

logger = logging.getLogger(__name__)


class CliContext:
    """Engine instance and services shared by the commands of one invocation"""

    def __init__(self, app: ComicalApp, as_json: bool = False):
        self.app = app
        self.as_json = as_json
        self.io = ObjectIOService(app.search_limit)

    @property
    def indent(self) -> int:
        return int(self.app.config.get('REPORT_INDENT', 2))

    def load_object(self, source: str, kind=None) -> MarkedPresheaf:
        X = self.io.load_object(source)
        if kind is not None and not isinstance(X, kind):
            expected = 'simplicial' if kind is MarkedSimplicialSet else 'cubical'
            raise PreconditionError(f'{source} is not a marked {expected} set')
        return X

    def load_cubical(self, source: str) -> MarkedCubicalSet:
        return self.load_object(source, MarkedCubicalSet)

    def load_simplicial(self, source: str) -> MarkedSimplicialSet:
        return self.load_object(source, MarkedSimplicialSet)

    def write_document(self, document: Any, output: Optional[str]) -> None:
        """Object and map documents go to the output file, or to stdout"""
        if output:
            self.io.save(document, output, self.indent)
            click.echo(f'wrote {output}', err=True)
        else:
            click.echo(self.io.dumps(document, self.indent))

    def echo_json(self, document: Any) -> None:
        click.echo(json.dumps(document, indent=self.indent, ensure_ascii=False))


pass_cli = click.make_pass_decorator(CliContext)


def handle_errors(command):
    """Turn engine errors into click errors (exit code 1)"""
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except ComicalError as exc:
            logger.debug(f'{command.__name__} failed: {exc!r}')
            raise click.ClickException(f'{type(exc).__name__}: {exc}') from exc
    return wrapper


def yes_no(flag: bool) -> str:
    return 'true' if flag else 'false'
