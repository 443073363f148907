import os

from dotenv import load_dotenv

basedir = os.path.abspath(os.path.dirname(__file__))
load_dotenv(os.path.join(basedir, '.env'))


class Config:
    """Base configuration"""

    # search budget for map enumeration (partial assignments)
    SEARCH_LIMIT = int(os.environ.get('COMICAL_SUITE_BUDGET') or 1_000_000)

    # randomized property sampling
    DEFAULT_SEED = int(os.environ.get('COMICAL_SEED') or 0)

    # report output
    REPORT_INDENT = 2

    # logging
    LOG_LEVEL = os.environ.get('LOG_LEVEL') or 'INFO'
    LOG_FILE = os.environ.get('COMICAL_LOG_FILE') or os.path.join(basedir, 'logs', 'comical.log')

    DEBUG = False
    TESTING = False

    @staticmethod
    def init_app(app):
        """Application init callback"""
        pass


class DevelopmentConfig(Config):
    """Development configuration"""
    DEBUG = True
    LOG_LEVEL = os.environ.get('LOG_LEVEL') or 'DEBUG'


class TestingConfig(Config):
    """Testing configuration"""
    TESTING = True
    SEARCH_LIMIT = int(os.environ.get('COMICAL_SUITE_BUDGET') or 200_000)


class ProductionConfig(Config):
    """Production configuration"""
    LOG_LEVEL = os.environ.get('LOG_LEVEL') or 'WARNING'

    @classmethod
    def init_app(cls, app):
        Config.init_app(app)

        import logging
        from logging.handlers import RotatingFileHandler

        if not app.debug and not app.testing:
            log_dir = os.path.dirname(cls.LOG_FILE)
            if not os.path.exists(log_dir):
                os.makedirs(log_dir)

            file_handler = RotatingFileHandler(cls.LOG_FILE,
                                               maxBytes=10240, backupCount=10)
            file_handler.setFormatter(logging.Formatter(
                '%(asctime)s %(levelname)s: %(message)s '
                '[in %(pathname)s:%(lineno)d]'
            ))
            file_handler.setLevel(logging.INFO)
            app.logger.addHandler(file_handler)

            app.logger.setLevel(logging.INFO)
            app.logger.info('Comical engine startup')


config = {
    'development': DevelopmentConfig,
    'testing': TestingConfig,
    'production': ProductionConfig,
    'default': DevelopmentConfig
}
