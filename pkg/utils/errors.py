"""
Custom exceptions for xx_entropy
"""


class EntropyError(Exception):
    """Base exception for xx_entropy"""
    exit_code = 1


class DomainError(EntropyError):
    """Input outside the domain of an operation"""
    exit_code = 1


class SizeLimitError(DomainError):
    """Problem size beyond a configured cap"""
    exit_code = 1


class HalfFillingError(DomainError):
    """Zero-energy single-particle mode makes the filling ambiguous"""
    exit_code = 1


class ConfigurationError(EntropyError):
    """Configuration errors"""
    exit_code = 1


class ComputationError(EntropyError):
    """Eigensolver or quadrature failures"""
    exit_code = 2


class IntegrityError(ComputationError):
    """A computed quantity broke an identity it must satisfy"""
    exit_code = 2


class ValidationFailure(EntropyError):
    """One or more validation checks failed"""
    exit_code = 3
