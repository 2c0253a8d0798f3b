"""
Interfaces module for xx_entropy
"""
from .runner import ScanSpec, OutputRow, run_compute, run_scan, run_validate
from .cli import main

__all__ = [
    'ScanSpec',
    'OutputRow',
    'run_compute',
    'run_scan',
    'run_validate',
    'main'
]
