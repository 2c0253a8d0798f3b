"""
Shared pytest setup: flat-layout imports and the slow marker
"""
import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: large-L studies, deselect with -m 'not slow'")


@pytest.fixture
def fresh_cache():
    """Empty constant cache for tests that count computations"""
    from core.asymptotics import constant_cache
    constant_cache.clear()
    yield constant_cache
    constant_cache.clear()
