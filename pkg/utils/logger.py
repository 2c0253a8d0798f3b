"""
Structured logging for xx_entropy

Messages carry their context as key=value pairs after a bar:

    2026-01-01 12:00:00 | core.spectrum | DEBUG | Spectrum computed | order=200 k_F=1.0472

Everything goes to stderr; stdout belongs to CSV/JSON results.
"""
import logging
import sys
import time
from contextlib import contextmanager
from pathlib import Path
from typing import Any, Dict, Optional

_CONSOLE_FORMAT = '%(asctime)s | %(name)s | %(levelname)s | %(message)s'
_FILE_FORMAT = '%(asctime)s | %(name)s | %(levelname)s | %(funcName)s:%(lineno)d | %(message)s'
_DATE_FORMAT = '%Y-%m-%d %H:%M:%S'


def _render_value(value: Any) -> str:
    if isinstance(value, float):
        return f"{value:.6g}"
    if isinstance(value, complex):
        return f"{value.real:.6g}{value.imag:+.6g}j"
    return str(value)


def _render_context(context: Dict[str, Any]) -> str:
    if not context:
        return ""
    return " | " + " ".join(f"{key}={_render_value(value)}" for key, value in context.items())


def _handler(handler: logging.Handler, fmt: str) -> logging.Handler:
    handler.setLevel(logging.DEBUG)
    handler.setFormatter(logging.Formatter(fmt, datefmt=_DATE_FORMAT))
    return handler


class EntropyLogger:
    """Custom logger for xx_entropy with structured output"""

    def __init__(self, name: str, log_file: Optional[str] = None, level: str = "INFO"):
        self.logger = logging.getLogger(name)
        self.set_level(level)

        # Prevent duplicate handlers
        if self.logger.handlers:
            return

        self.logger.addHandler(_handler(logging.StreamHandler(sys.stderr), _CONSOLE_FORMAT))
        if log_file:
            Path(log_file).parent.mkdir(parents=True, exist_ok=True)
            self.logger.addHandler(_handler(logging.FileHandler(log_file), _FILE_FORMAT))

    def set_level(self, level: str):
        self.logger.setLevel(getattr(logging, level.upper()))

    def _log(self, level: int, msg: str, context: Dict[str, Any]):
        if self.logger.isEnabledFor(level):
            self.logger.log(level, f"{msg}{_render_context(context)}", stacklevel=3)

    def debug(self, msg: str, **kwargs):
        self._log(logging.DEBUG, msg, kwargs)

    def info(self, msg: str, **kwargs):
        self._log(logging.INFO, msg, kwargs)

    def warning(self, msg: str, **kwargs):
        self._log(logging.WARNING, msg, kwargs)

    def error(self, msg: str, **kwargs):
        self._log(logging.ERROR, msg, kwargs)

    @contextmanager
    def timed(self, msg: str, **kwargs):
        """Log msg at INFO with the wall time of the block as elapsed_s"""
        start = time.perf_counter()
        try:
            yield
        finally:
            self.info(msg, **kwargs, elapsed_s=time.perf_counter() - start)


_loggers: Dict[str, EntropyLogger] = {}


def get_logger(name: str, log_file: Optional[str] = None, level: str = "INFO") -> EntropyLogger:
    """Get or create a logger instance"""
    if name not in _loggers:
        _loggers[name] = EntropyLogger(name, log_file, level)
    return _loggers[name]


def set_global_level(level: str):
    """Apply a level to every logger handed out so far"""
    for entropy_logger in _loggers.values():
        entropy_logger.set_level(level)
