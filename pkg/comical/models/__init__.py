"""
Value types: operators, marked presheaves and their maps, finite categories
"""

from .box_operator import BoxOperator, CubicalShape
from .simplicial_operator import SimplicialOperator, SimplicialShape
from .presheaf import MarkedPresheaf, MarkedCubicalSet, MarkedSimplicialSet, PresheafMap
from .cube_simplex import CubeSimplex
from .finite_category import FiniteCategory

__all__ = [
    'BoxOperator', 'CubicalShape', 'SimplicialOperator', 'SimplicialShape',
    'MarkedPresheaf', 'MarkedCubicalSet', 'MarkedSimplicialSet', 'PresheafMap',
    'CubeSimplex', 'FiniteCategory',
]
