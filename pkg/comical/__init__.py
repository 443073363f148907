"""
Comical engine

Computational toolkit for marked cubical sets with connections:
1. Box category operators in normal form
2. Finite marked cubical and simplicial sets, maps, pushouts and lifting checks
3. Lax and pseudo Gray tensor products
4. Triangulation into pre-complicial marked simplicial sets
5. Homotopy 1-categories and named verification suites
"""

import logging
import os
from typing import Any, Dict, Optional

from config import config
from comical.exceptions import ParameterError

__version__ = '0.3.0'


class ComicalApp:
    """Configured engine instance: config mapping plus logger"""

    def __init__(self, name: str):
        self.name = name
        self.config: Dict[str, Any] = {}
        self.logger = logging.getLogger(name)
        self.debug = False
        self.testing = False

    @property
    def search_limit(self) -> int:
        return int(self.config.get('SEARCH_LIMIT', 1_000_000))

    def __repr__(self):
        return f'<ComicalApp {self.name} limit={self.search_limit}>'


def create_app(config_name: Optional[str] = None) -> ComicalApp:
    """Application factory"""
    if config_name is None:
        config_name = os.environ.get('COMICAL_ENV') or 'default'
    if config_name not in config:
        raise ParameterError(f'unknown configuration {config_name!r}')

    config_class = config[config_name]
    app = ComicalApp('comical')
    app.config.update({key: getattr(config_class, key)
                       for key in dir(config_class) if key.isupper()})
    app.debug = bool(app.config.get('DEBUG'))
    app.testing = bool(app.config.get('TESTING'))

    logging.basicConfig(format='%(asctime)s %(levelname)s %(name)s: %(message)s')
    logging.getLogger('comical').setLevel(app.config.get('LOG_LEVEL', 'INFO'))

    config_class.init_app(app)
    app.logger.debug(f'Created app with {config_name} configuration')
    return app


__all__ = ['ComicalApp', 'create_app', '__version__']
