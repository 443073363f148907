"""
Service layer
"""

from .colimit_service import ColimitService
from .enumeration_service import EnumerationService
from .cubeset_service import CubeSetService
from .gray_service import GrayService
from .comical_service import ComicalService
from .nerve_service import NerveService
from .simpset_service import SimpSetService
from .triangulation_service import TriangulationService
from .filtration_service import FiltrationService
from .homotopy_service import HomotopyService
from .io_service import ObjectIOService
from .oracle_service import OracleService
from .suite_service import SuiteService

__all__ = [
    'ColimitService', 'EnumerationService', 'CubeSetService', 'GrayService',
    'ComicalService', 'NerveService', 'SimpSetService', 'TriangulationService',
    'FiltrationService', 'HomotopyService', 'ObjectIOService', 'OracleService',
    'SuiteService',
]
