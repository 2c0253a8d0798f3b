"""
Validation module for xx_entropy
"""
from .base_check import BaseCheck, CheckLevel, CheckResult
from .registry import CheckRegistry, ValidationReport, registry, register_default_checks

__all__ = [
    'BaseCheck',
    'CheckLevel',
    'CheckResult',
    'CheckRegistry',
    'ValidationReport',
    'registry',
    'register_default_checks'
]
