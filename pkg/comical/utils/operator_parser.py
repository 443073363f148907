#!/usr/bin/env python3
"""
Operator word parser
Reads the text syntax for cubical and simplicial operators:
d{i},{e} faces, s{i} degeneracies, g{i},{e} connections, joined by ';'
in application order (first applied first); 'id' is the identity.
"""
import logging
import re
from typing import List, Optional, Tuple

from comical.exceptions import OperatorSyntaxError, ParameterError
from comical.models.box_operator import (
    BoxOperator, compose, connection, degeneracy, face, identity,
)

logger = logging.getLogger(__name__)

TOKEN_PATTERN = re.compile(r'^([dsg])(\d+)(?:,([01]))?$')

MAX_INFERRED_DIM = 32


def tokenize(text: str, simplicial: bool = False) -> List[Tuple[str, int, Optional[int]]]:
    """Split a word into (kind, index, sign) steps"""
    text = text.strip()
    if not text:
        raise OperatorSyntaxError('empty operator word')
    if text == 'id':
        return []
    steps = []
    for position, token in enumerate(text.split(';'), start=1):
        match = TOKEN_PATTERN.match(token.strip())
        if not match:
            raise OperatorSyntaxError(f'bad token {token!r} at position {position}')
        kind, index, sign = match.group(1), int(match.group(2)), match.group(3)
        if simplicial and (kind == 'g' or sign is not None):
            raise OperatorSyntaxError(f'simplicial words take unsigned d and s only, got {token!r}')
        if not simplicial and kind in ('d', 'g') and sign is None:
            raise OperatorSyntaxError(f'{kind}{index} needs a sign at position {position}')
        if kind == 's' and sign is not None:
            raise OperatorSyntaxError(f'degeneracy takes no sign at position {position}')
        steps.append((kind, index, None if sign is None else int(sign)))
    return steps


def _fits(steps, dim: int, simplicial: bool) -> bool:
    for kind, index, _ in steps:
        if kind == 'd':
            dim += 1
            low = 0 if simplicial else 1
            if not low <= index <= dim:
                return False
        elif kind == 's':
            if simplicial:
                if not 0 <= index <= dim - 1:
                    return False
                dim -= 1
            else:
                if not 1 <= index <= dim:
                    return False
                dim -= 1
        else:
            if simplicial or not 1 <= index <= dim - 1:
                return False
            dim -= 1
    return True


def infer_source_dim(steps, simplicial: bool = False) -> int:
    """Least source dimension at which every step is in range"""
    for dim in range(MAX_INFERRED_DIM):
        if _fits(steps, dim, simplicial):
            return dim
    raise OperatorSyntaxError('no source dimension makes the word well formed')


def parse_box_operator(text: str, src_dim: Optional[int] = None) -> BoxOperator:
    """Parse a cubical operator word into its normal form"""
    steps = tokenize(text)
    if src_dim is None:
        src_dim = infer_source_dim(steps)
    elif not _fits(steps, src_dim, simplicial=False):
        raise OperatorSyntaxError(f'{text!r} is not defined on [1]^{src_dim}')
    if not steps:
        return identity(src_dim)

    generators = []
    dim = src_dim
    for kind, index, sign in steps:
        if kind == 'd':
            dim += 1
            generators.append(face(dim, index, sign))
        elif kind == 's':
            generators.append(degeneracy(dim, index))
            dim -= 1
        else:
            generators.append(connection(dim, index, sign))
            dim -= 1
    try:
        return compose(*reversed(generators))
    except ParameterError as exc:
        raise OperatorSyntaxError(str(exc)) from exc


def parse_simplicial_operator(text: str, src_dim: Optional[int] = None):
    """Parse a simplicial operator word (d{j} faces, s{j} degeneracies)"""
    from comical.models.simplicial_operator import (
        compose_s, degeneracy_s, face_s, identity_s,
    )

    steps = tokenize(text, simplicial=True)
    if src_dim is None:
        src_dim = infer_source_dim(steps, simplicial=True)
    elif not _fits(steps, src_dim, simplicial=True):
        raise OperatorSyntaxError(f'{text!r} is not defined on [{src_dim}]')
    if not steps:
        return identity_s(src_dim)

    generators = []
    dim = src_dim
    for kind, index, _ in steps:
        if kind == 'd':
            dim += 1
            generators.append(face_s(dim, index))
        else:
            dim -= 1
            generators.append(degeneracy_s(dim, index))
    return compose_s(*reversed(generators))
