"""
Computation commands

Features:
1. boxnf: normal form of an operator word
2. tensor / leibniz: Gray tensors of objects and Leibniz tensors of maps
3. triangulate / compare / reflect: the triangulation functor and its comparisons
4. ho1: homotopy category of a marked cubical set
5. rlp / srlp: lifting checks; sgray / sprod: simplicial Gray tensor and product
"""

import logging

import click

from comical.cli import cli
from comical.cli.context import CliContext, handle_errors, pass_cli, yes_no
from comical.models.box_operator import format_operator
from comical.services.gray_service import TENSOR_MODE_ALIASES, TENSOR_MODES, GrayService
from comical.services.homotopy_service import HomotopyService
from comical.services.simpset_service import SimpSetService
from comical.services.triangulation_service import COMPARISON_MODES, TriangulationService
from comical.utils.operator_parser import parse_box_operator

logger = logging.getLogger(__name__)

tensor_mode_option = click.option('--mode', type=click.Choice(TENSOR_MODES + tuple(TENSOR_MODE_ALIASES)),
                                  default='lax', show_default=True)

output_option = click.option('-o', '--output', type=click.Path(dir_okay=False), default=None,
                             help='Write the resulting document to a file.')


@cli.command()
@click.argument('word')
@click.option('--dim', type=int, default=None, help='Source dimension (inferred when omitted).')
@pass_cli
@handle_errors
def boxnf(ctx: CliContext, word, dim):
    """Print the normal form of a cubical operator word."""
    op = parse_box_operator(word, dim)
    if ctx.as_json:
        ctx.echo_json({'input': word, 'normal_form': format_operator(op),
                       'src_dim': op.src_dim, 'tgt_dim': op.tgt_dim})
    else:
        click.echo(format_operator(op))


@cli.command()
@click.argument('first')
@click.argument('second')
@tensor_mode_option
@output_option
@pass_cli
@handle_errors
def tensor(ctx: CliContext, first, second, mode, output):
    """Gray tensor of two marked cubical sets."""
    X, Y = ctx.load_cubical(first), ctx.load_cubical(second)
    result = GrayService().tensor(X, Y, mode)
    ctx.write_document(ctx.io.object_to_document(result), output)


@cli.command()
@click.argument('first')
@click.argument('second')
@tensor_mode_option
@output_option
@pass_cli
@handle_errors
def leibniz(ctx: CliContext, first, second, mode, output):
    """Leibniz Gray tensor of two maps of marked cubical sets."""
    f, g = ctx.io.load_map(first), ctx.io.load_map(second)
    result = GrayService().leibniz(f, g, mode).map
    ctx.write_document(ctx.io.map_to_document(result), output)


@cli.command()
@click.argument('source')
@click.option('--raw', is_flag=True, help='Skip the pre-complicial reflection.')
@output_option
@pass_cli
@handle_errors
def triangulate(ctx: CliContext, source, raw, output):
    """Triangulate a marked cubical set."""
    X = ctx.load_cubical(source)
    result = TriangulationService(ctx.app.search_limit).triangulate(X, reflect=not raw)
    ctx.write_document(ctx.io.object_to_document(result), output)


@cli.command()
@click.argument('first')
@click.argument('second')
@click.option('--mode', type=click.Choice(COMPARISON_MODES), default='lax', show_default=True)
@pass_cli
@handle_errors
def compare(ctx: CliContext, first, second, mode):
    """Is the monoidal comparison map of the triangulation an isomorphism?"""
    X, Y = ctx.load_cubical(first), ctx.load_cubical(second)
    comparison = TriangulationService(ctx.app.search_limit).monoidal_comparison(X, Y, mode)
    if ctx.as_json:
        ctx.echo_json({'mode': mode, 'iso': comparison.iso, 'mismatch': comparison.mismatch})
    else:
        click.echo(f'iso: {yes_no(comparison.iso)}')
        if comparison.mismatch:
            click.echo(f'mismatch: {comparison.mismatch}')


@cli.command()
@click.argument('source')
@output_option
@pass_cli
@handle_errors
def reflect(ctx: CliContext, source, output):
    """Pre-complicial reflection of a marked simplicial set."""
    S = ctx.load_simplicial(source)
    result = SimpSetService(ctx.app.search_limit).precomplicial_reflect(S)
    ctx.write_document(ctx.io.object_to_document(result), output)


@cli.command()
@click.argument('source')
@pass_cli
@handle_errors
def ho1(ctx: CliContext, source):
    """Homotopy 1-category of a marked cubical set."""
    X = ctx.load_cubical(source)
    category = HomotopyService().ho1(X)
    document = {
        'objects': category.objects,
        'arrows': {f: list(ends) for f, ends in sorted(category.arrows.items())},
        'identities': dict(sorted(category.identities.items())),
        'composition': [{'first': f, 'second': g, 'composite': h}
                        for (g, f), h in sorted(category.composition.items())],
    }
    if ctx.as_json:
        ctx.echo_json(document)
        return
    click.echo(f'objects: {", ".join(category.objects)}')
    for f, (a, b) in sorted(category.arrows.items()):
        marker = ' (identity)' if category.is_identity(f) else ''
        click.echo(f'{f}: {a} -> {b}{marker}')
    for (g, f), h in sorted(category.composition.items()):
        if not (category.is_identity(f) or category.is_identity(g)):
            click.echo(f'{g} . {f} = {h}')


def _lifting(ctx: CliContext, X, f, limit):
    service = SimpSetService(ctx.app.search_limit)
    result = service.enumeration.has_rlp(X, f, limit=limit)
    counterexample = None
    if result.counterexample is not None:
        counterexample = ctx.io.map_to_document(result.counterexample)['assign']
    if ctx.as_json:
        ctx.echo_json({'holds': result.holds, 'checked': result.checked,
                       'overflow': result.overflow, 'counterexample': counterexample})
        return
    click.echo(f'holds: {yes_no(result.holds)} ({result.checked} maps checked)')
    if result.overflow:
        click.echo('warning: search limit reached', err=True)
    if counterexample:
        for cell, value in counterexample.items():
            click.echo(f'  {cell} -> {value["cell"]} [{value["op"]}]')


@cli.command()
@click.argument('source')
@click.argument('generator')
@click.option('--limit', type=int, default=None, help='Cap on search nodes.')
@pass_cli
@handle_errors
def rlp(ctx: CliContext, source, generator, limit):
    """Does a marked cubical set lift against a monomorphism?"""
    _lifting(ctx, ctx.load_cubical(source), ctx.io.load_map(generator), limit)


@cli.command()
@click.argument('source')
@click.argument('generator')
@click.option('--limit', type=int, default=None, help='Cap on search nodes.')
@pass_cli
@handle_errors
def srlp(ctx: CliContext, source, generator, limit):
    """Does a marked simplicial set lift against a monomorphism?"""
    _lifting(ctx, ctx.load_simplicial(source), ctx.io.load_map(generator), limit)


@cli.command()
@click.argument('first')
@click.argument('second')
@output_option
@pass_cli
@handle_errors
def sgray(ctx: CliContext, first, second, output):
    """Gray tensor of two marked simplicial sets."""
    S, T = ctx.load_simplicial(first), ctx.load_simplicial(second)
    result = SimpSetService(ctx.app.search_limit).verity_gray(S, T)
    ctx.write_document(ctx.io.object_to_document(result), output)


@cli.command()
@click.argument('first')
@click.argument('second')
@output_option
@pass_cli
@handle_errors
def sprod(ctx: CliContext, first, second, output):
    """Cartesian product of two marked simplicial sets."""
    S, T = ctx.load_simplicial(first), ctx.load_simplicial(second)
    result = SimpSetService(ctx.app.search_limit).product(S, T)
    ctx.write_document(ctx.io.object_to_document(result), output)


__all__ = ['boxnf', 'tensor', 'leibniz', 'triangulate', 'compare', 'reflect', 'ho1',
           'rlp', 'srlp', 'sgray', 'sprod']
