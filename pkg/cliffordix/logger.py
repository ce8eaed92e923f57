"""Logging utilities for cliffordix."""

import functools
import sys

from loguru import logger as _loguru

LOG_FORMAT = "{time:YYYY-MM-DD HH:mm:ss} - {extra[name]} - {level} - {message}"


class Logger:
    """Centralized logging for the package, backed by loguru."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super(Logger, cls).__new__(cls)
            cls._instance._initialize_logger()
        return cls._instance

    def _initialize_logger(self):
        """Set up the console sink."""
        _loguru.remove()
        self.logger = _loguru.bind(name="cliffordix")
        self._console_id = _loguru.add(sys.stderr, level="WARNING", format=LOG_FORMAT)
        self._file_id = None

    def configure(self, level="WARNING", log_file=None):
        """Reset the console level and optionally attach a log file."""
        _loguru.remove(self._console_id)
        self._console_id = _loguru.add(sys.stderr, level=level, format=LOG_FORMAT)
        if self._file_id is not None:
            _loguru.remove(self._file_id)
            self._file_id = None
        if log_file:
            self._file_id = _loguru.add(log_file, level="DEBUG", format=LOG_FORMAT)

    def debug(self, message):
        """Log debug message."""
        self.logger.debug(message)

    def info(self, message):
        """Log info message."""
        self.logger.info(message)

    def warning(self, message):
        """Log warning message."""
        self.logger.warning(message)

    def error(self, message):
        """Log error message."""
        self.logger.error(message)

    def exception(self, message):
        """Log message with the active traceback."""
        self.logger.opt(exception=True).error(message)


def log_exceptions(func):
    """Log any exception escaping func, then re-raise it."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except Exception as e:
            Logger().exception(f"Exception in {func.__name__}: {e}")
            raise

    return wrapper
