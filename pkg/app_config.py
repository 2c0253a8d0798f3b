"""
Configuration management for xx_entropy
"""
import os
from pathlib import Path
from typing import Any, Dict, Optional
from dataclasses import dataclass, field, fields, replace

import yaml


def _env_float(name: str, default: float) -> float:
    value = os.getenv(name)
    return float(value) if value else default


def _env_int(name: str, default: int) -> int:
    value = os.getenv(name)
    return int(value) if value else default


@dataclass(frozen=True)
class QuadratureConfig:
    """Quadrature settings for the constant-term integrals"""
    abs_tol: float = field(default_factory=lambda: _env_float("ENTROPY_QUAD_TOL", 1e-12))
    rel_tol: float = 1e-10
    split_point: float = 5.0  # interior break of the t-integral
    series_cutoff: float = 0.5  # below this t the integrand is summed as a series
    t_max: float = 60.0
    w_max: float = 20.0
    limit: int = 200

    def __post_init__(self):
        if self.abs_tol <= 0 or self.rel_tol <= 0:
            raise ValueError("quadrature tolerances must be positive")
        if self.split_point <= 0 or self.series_cutoff <= 0:
            raise ValueError("split_point and series_cutoff must be positive")


@dataclass
class SpectrumConfig:
    """Correlation-matrix construction and eigensolver guards"""
    clamp_tol: float = 1e-8
    clamp_warn_tol: float = 1e-10
    trace_tol: float = 1e-8
    max_order: int = 20000
    pole_tol: float = 1e-15


@dataclass
class BarnesConfig:
    """Barnes G pair product truncation"""
    n_terms: int = 2000


@dataclass
class OracleConfig:
    """Exact-diagonalization oracle limits"""
    max_sites: int = 12
    degeneracy_gap: float = 1e-10
    zero_mode_tol: float = 1e-12
    dense_limit: int = 8  # above this many sites use sparse Lanczos


@dataclass
class ScanConfig:
    """Parameter-scan execution"""
    workers: int = field(default_factory=lambda: _env_int("ENTROPY_WORKERS", 1))
    significant_digits: int = 12


@dataclass
class EntropyConfig:
    """Main xx_entropy configuration"""
    quadrature: QuadratureConfig = field(default_factory=QuadratureConfig)
    spectrum: SpectrumConfig = field(default_factory=SpectrumConfig)
    barnes: BarnesConfig = field(default_factory=BarnesConfig)
    oracle: OracleConfig = field(default_factory=OracleConfig)
    scan: ScanConfig = field(default_factory=ScanConfig)

    log_level: str = field(default_factory=lambda: os.getenv("ENTROPY_LOG_LEVEL", "INFO"))
    log_file: Optional[str] = field(default_factory=lambda: os.getenv("ENTROPY_LOG_FILE"))

    def __post_init__(self):
        if self.log_file:
            Path(self.log_file).parent.mkdir(parents=True, exist_ok=True)


_SECTIONS = {
    "quadrature": QuadratureConfig,
    "spectrum": SpectrumConfig,
    "barnes": BarnesConfig,
    "oracle": OracleConfig,
    "scan": ScanConfig,
}


def _build_section(name: str, values: Dict[str, Any], base: Any) -> Any:
    known = {f.name for f in fields(_SECTIONS[name])}
    unknown = set(values) - known
    if unknown:
        from utils.errors import ConfigurationError
        raise ConfigurationError(f"Unknown keys in section '{name}': {sorted(unknown)}")
    return replace(base, **values)


def load_config(path: str) -> EntropyConfig:
    """
    Load configuration from a YAML file

    Top-level keys mirror the dataclass sections; anything not given keeps
    its default.
    """
    from utils.errors import ConfigurationError

    try:
        with open(Path(path).expanduser(), "r", encoding="utf-8") as f:
            raw = yaml.safe_load(f) or {}
    except (OSError, yaml.YAMLError) as e:
        raise ConfigurationError(f"Cannot read config {path}: {e}")

    if not isinstance(raw, dict):
        raise ConfigurationError(f"Config {path} must be a mapping")

    base = EntropyConfig()
    kwargs: Dict[str, Any] = {}
    for key, value in raw.items():
        if key in _SECTIONS:
            if not isinstance(value, dict):
                raise ConfigurationError(f"Section '{key}' must be a mapping")
            try:
                kwargs[key] = _build_section(key, value, getattr(base, key))
            except ValueError as e:
                raise ConfigurationError(f"Invalid section '{key}': {e}")
        elif key in ("log_level", "log_file"):
            kwargs[key] = value
        else:
            raise ConfigurationError(f"Unknown config key: {key}")

    return replace(base, **kwargs)


def apply_config(new_config: EntropyConfig):
    """Swap the global configuration in place so module-level references see it"""
    for f in fields(EntropyConfig):
        setattr(config, f.name, getattr(new_config, f.name))


# Global config instance
config = EntropyConfig()
