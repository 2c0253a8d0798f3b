"""
Utilities module for xx_entropy
"""
from .logger import get_logger, set_global_level, EntropyLogger
from .errors import (
    EntropyError,
    DomainError,
    SizeLimitError,
    HalfFillingError,
    ConfigurationError,
    ComputationError,
    IntegrityError,
    ValidationFailure
)
from .helpers import (
    format_number,
    round_significant,
    safe_json_dumps,
    parse_number_list,
    format_duration
)

__all__ = [
    'get_logger',
    'set_global_level',
    'EntropyLogger',
    'EntropyError',
    'DomainError',
    'SizeLimitError',
    'HalfFillingError',
    'ConfigurationError',
    'ComputationError',
    'IntegrityError',
    'ValidationFailure',
    'format_number',
    'round_significant',
    'safe_json_dumps',
    'parse_number_list',
    'format_duration'
]
