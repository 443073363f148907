"""
Object file service

Features:
1. JSON documents for finite marked cubical and simplicial sets
2. Map documents with embedded or referenced source and target
3. '@kind:params' references to the standard objects and maps
4. Schema errors that name the offending JSON path
"""

import json
import logging
import os
from typing import Any, Callable, Dict, List, Union

from comical.exceptions import OperatorSyntaxError, ParameterError, SchemaError
from comical.models.finite_category import FiniteCategory
from comical.models.presheaf import (
    MarkedCubicalSet, MarkedPresheaf, MarkedSimplicialSet, PresheafMap,
)
from comical.services.comical_service import ComicalService
from comical.services.cubeset_service import CubeSetService
from comical.services.nerve_service import NerveService
from comical.services.simpset_service import SimpSetService

logger = logging.getLogger(__name__)

OBJECT_TYPES = {
    'cubical': MarkedCubicalSet,
    'simplicial': MarkedSimplicialSet,
}

NERVE_FIXTURES = {
    'chain': FiniteCategory.chain,
    'square': FiniteCategory.commuting_square,
    'iso': FiniteCategory.free_isomorphism,
    'point': FiniteCategory.terminal,
}

Document = Dict[str, Any]


def _type_name(X: MarkedPresheaf) -> str:
    return 'simplicial' if isinstance(X, MarkedSimplicialSet) else 'cubical'


def _spec_params(text: str) -> List[Union[int, str]]:
    if not text:
        return []
    return [int(p) if p.lstrip('-').isdigit() else p for p in text.split(',')]


class ObjectIOService:
    """Reads and writes object and map documents"""

    def __init__(self, search_limit: int = None):
        self.cubes = CubeSetService()
        self.simplicial = SimpSetService() if search_limit is None else SimpSetService(search_limit)
        self.comical = ComicalService() if search_limit is None else ComicalService(search_limit)
        self.nerves = NerveService()
        self.object_builders: Dict[str, Callable[..., MarkedPresheaf]] = {
            'cube': self.cubes.cube,
            'boundary': self.cubes.boundary,
            'open_box': self.cubes.open_box,
            'marked_cube': self.cubes.marked_cube,
            'comical_cube': self.cubes.comical_cube,
            'comical_open_box': self.cubes.comical_open_box,
            'simplex': self.simplicial.simplex,
            'marker': self.simplicial.marker,
            'complicial': self.simplicial.complicial,
            'horn': self.simplicial.horn,
            'prime': self.simplicial.prime,
            'double_prime': self.simplicial.double_prime,
            'nerve': self._nerve,
        }
        self.map_builders: Dict[str, Callable[..., PresheafMap]] = {
            'boundary_inclusion': self.cubes.boundary_inclusion,
            'open_box_inclusion': self.cubes.open_box_inclusion,
            'comical_box_inclusion': self.cubes.comical_box_inclusion,
            'cube_marker': self.cubes.marker,
            'marking_extension_pair': self.cubes.marking_extension_pair,
            'rezk_basic': self.cubes.rezk_basic,
            'rezk_map': self.comical.rezk_map,
            'horn_inclusion': self.simplicial.horn_inclusion,
            'marking_extension': self.simplicial.marking_extension,
        }

    def _nerve(self, fixture: str, *params) -> MarkedCubicalSet:
        if fixture not in NERVE_FIXTURES:
            raise ParameterError(f'unknown nerve fixture {fixture!r}')
        return self.nerves.cubical_nerve(NERVE_FIXTURES[fixture](*params))

    # ------------------------------------------------------------------
    # Standard references
    # ------------------------------------------------------------------

    def _resolve(self, reference: str, builders: Dict[str, Callable], what: str):
        kind, _, params = reference[1:].partition(':')
        if kind not in builders:
            raise SchemaError(f'unknown standard {what} {kind!r}')
        try:
            return builders[kind](*_spec_params(params))
        except TypeError as exc:
            raise SchemaError(f'bad parameters for {kind}: {params!r}') from exc

    # ------------------------------------------------------------------
    # Objects
    # ------------------------------------------------------------------

    def object_to_document(self, X: MarkedPresheaf) -> Document:
        shape = X.shape
        cells = []
        for cell in X.sorted_cells():
            n = X.dim(cell)
            faces = {}
            for key in shape.face_keys(n) if n >= 1 else []:
                down, lower = X.face(cell, key)
                faces[shape.format_key(key)] = {'op': shape.format(down), 'cell': lower}
            cells.append({'id': cell, 'dim': n, 'marked': X.is_marked(cell), 'faces': faces})
        return {'type': _type_name(X), 'name': X.name, 'dims': X.dimension, 'cells': cells}

    def document_to_object(self, doc: Any, path: str = '$') -> MarkedPresheaf:
        if not isinstance(doc, dict):
            raise SchemaError('object document must be a JSON object', path)
        entries = doc.get('cells')
        if not isinstance(entries, list):
            raise SchemaError('"cells" must be a list', f'{path}.cells')

        kind = doc.get('type') or self._infer_type(entries)
        if kind not in OBJECT_TYPES:
            raise SchemaError(f'unknown object type {kind!r}', f'{path}.type')
        presheaf_class = OBJECT_TYPES[kind]
        shape = presheaf_class.shape

        cells: Dict[str, int] = {}
        for i, entry in enumerate(entries):
            where = f'{path}.cells[{i}]'
            if not isinstance(entry, dict):
                raise SchemaError('cell entry must be an object', where)
            cell, n = entry.get('id'), entry.get('dim')
            if not isinstance(cell, str):
                raise SchemaError('"id" must be a string', f'{where}.id')
            if not isinstance(n, int) or isinstance(n, bool) or n < 0:
                raise SchemaError('"dim" must be a non-negative integer', f'{where}.dim')
            if cell in cells:
                raise SchemaError(f'duplicate cell id {cell!r}', f'{where}.id')
            cells[cell] = n

        faces, marked = {}, set()
        for i, entry in enumerate(entries):
            where = f'{path}.cells[{i}]'
            cell, n = entry['id'], entry['dim']
            flag = entry.get('marked', False)
            if not isinstance(flag, bool):
                raise SchemaError('"marked" must be a boolean', f'{where}.marked')
            if flag:
                marked.add(cell)
            table = {}
            raw_faces = entry.get('faces', {})
            if not isinstance(raw_faces, dict):
                raise SchemaError('"faces" must be an object', f'{where}.faces')
            for text, value in raw_faces.items():
                key_path = f'{where}.faces.{text}'
                try:
                    key = shape.parse_key(text)
                except ValueError as exc:
                    raise SchemaError(f'bad face key {text!r}', key_path) from exc
                table[key] = self._parse_value(value, n - 1, cells, shape, key_path)
            faces[cell] = table

        dims = doc.get('dims')
        if dims is not None and dims != max(cells.values(), default=-1):
            raise SchemaError(f'"dims" is {dims} but the largest cell has dimension '
                              f'{max(cells.values(), default=-1)}', f'{path}.dims')
        X = presheaf_class(cells, faces, marked, name=doc.get('name', ''))
        return X.validate()

    @staticmethod
    def _infer_type(entries) -> str:
        for entry in entries:
            if isinstance(entry, dict) and isinstance(entry.get('faces'), dict):
                for key in entry['faces']:
                    return 'cubical' if ',' in str(key) else 'simplicial'
        return 'cubical'

    @staticmethod
    def _parse_value(value, src_dim: int, cells: Dict[str, int], shape, path: str):
        if not isinstance(value, dict) or not isinstance(value.get('cell'), str):
            raise SchemaError('value must be {"op": ..., "cell": ...}', path)
        if value['cell'] not in cells:
            raise SchemaError(f'unknown cell {value["cell"]!r}', f'{path}.cell')
        try:
            text = value.get('op', 'id')
            if not isinstance(text, str):
                raise SchemaError('"op" must be a string', f'{path}.op')
            op = shape.parse(text, src_dim)
        except (OperatorSyntaxError, ParameterError) as exc:
            raise SchemaError(str(exc), f'{path}.op') from exc
        return op, value['cell']

    def load_object(self, source: str) -> MarkedPresheaf:
        """Read an object from a JSON file or an '@kind:params' reference"""
        if source.startswith('@'):
            return self._resolve(source, self.object_builders, 'object')
        X = self.document_to_object(self.read_document(source))
        X.name = X.name or os.path.splitext(os.path.basename(source))[0]
        logger.debug(f'loaded {X!r} from {source}')
        return X

    # ------------------------------------------------------------------
    # Maps
    # ------------------------------------------------------------------

    def map_to_document(self, f: PresheafMap) -> Document:
        shape = f.source.shape
        assign = {cell: {'op': shape.format(down), 'cell': image}
                  for cell, (down, image) in sorted(f.assignment.items())}
        return {'source': self.object_to_document(f.source),
                'target': self.object_to_document(f.target),
                'assign': assign}

    def document_to_map(self, doc: Any, path: str = '$', base: str = '.') -> PresheafMap:
        if not isinstance(doc, dict):
            raise SchemaError('map document must be a JSON object', path)
        ends = []
        for end in ('source', 'target'):
            value = doc.get(end)
            if isinstance(value, str):
                reference = value if value.startswith('@') else os.path.join(base, value)
                ends.append(self.load_object(reference))
            elif isinstance(value, dict):
                ends.append(self.document_to_object(value, f'{path}.{end}'))
            else:
                raise SchemaError(f'"{end}" must be an object or a reference', f'{path}.{end}')
        source, target = ends
        if type(source) is not type(target):
            raise SchemaError('source and target have different types', path)

        raw = doc.get('assign')
        if raw is None:
            missing = [c for c in source.cells if c not in target]
            if missing:
                raise SchemaError(f'no "assign" and {missing[0]!r} is not a target cell', path)
            raw = {c: {'op': 'id', 'cell': c} for c in source.cells}
        if not isinstance(raw, dict):
            raise SchemaError('"assign" must be an object', f'{path}.assign')
        assignment = {}
        for cell, value in raw.items():
            if cell not in source:
                raise SchemaError(f'unknown source cell {cell!r}', f'{path}.assign.{cell}')
            assignment[cell] = self._parse_value(value, source.dim(cell), target.cells,
                                                 target.shape, f'{path}.assign.{cell}')
        return PresheafMap(source, target, assignment).validate()

    def load_map(self, source: str) -> PresheafMap:
        if source.startswith('@'):
            return self._resolve(source, self.map_builders, 'map')
        return self.document_to_map(self.read_document(source), base=os.path.dirname(source) or '.')

    # ------------------------------------------------------------------
    # Files
    # ------------------------------------------------------------------

    @staticmethod
    def read_document(path: str) -> Any:
        try:
            with open(path, 'r', encoding='utf-8') as file:
                return json.load(file)
        except OSError as exc:
            raise SchemaError(f'cannot read {path}: {exc.strerror}') from exc
        except json.JSONDecodeError as exc:
            raise SchemaError(f'invalid JSON at line {exc.lineno}: {exc.msg}') from exc

    @staticmethod
    def dumps(document: Document, indent: int = 2) -> str:
        return json.dumps(document, indent=indent, ensure_ascii=False)

    def save(self, document: Document, path: str, indent: int = 2) -> None:
        with open(path, 'w', encoding='utf-8') as file:
            file.write(self.dumps(document, indent))
            file.write('\n')
        logger.debug(f'wrote {path}')


def load_any(io: ObjectIOService, source: str) -> Union[MarkedPresheaf, PresheafMap]:
    """Object or map, whichever the reference or document describes"""
    if source.startswith('@'):
        kind = source[1:].partition(':')[0]
        return io.load_map(source) if kind in io.map_builders else io.load_object(source)
    doc = io.read_document(source)
    if isinstance(doc, dict) and 'cells' not in doc:
        return io.document_to_map(doc, base=os.path.dirname(source) or '.')
    return io.document_to_object(doc)


__all__ = ['ObjectIOService', 'OBJECT_TYPES', 'NERVE_FIXTURES', 'load_any']
