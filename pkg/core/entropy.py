"""
Block entropies from the correlation spectrum

Each eigenvalue nu of G_L is one fermionic mode of the block, occupied with
probability (1 + nu)/2. The reduced density matrix is the product of these
two-level states, so every entropy is a sum over modes:

    von Neumann   S     = sum_m e(1, nu_m)
    Renyi         S_a   = sum_m s_a(nu_m),  s_a = ln(p^a + q^a) / (1 - a)
    Tsallis       S_T   = (exp((1 - a) S_a) - 1) / (1 - a)
"""
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import numpy as np
from scipy.special import xlogy

from app_config import config
from core.model import ModelParams
from core.spectrum import CorrelationSpectrum, spectrum_for
from utils import get_logger, DomainError, SizeLimitError


logger = get_logger(__name__, config.log_file, config.log_level)

PURE_MODE_EDGE = 1.0 - 1e-15
MAX_DENSITY_ORDER = 20


class EntropyKind(str, Enum):
    VON_NEUMANN = "vonNeumann"
    RENYI = "renyi"
    TSALLIS = "tsallis"

    @classmethod
    def parse(cls, text: str) -> "EntropyKind":
        aliases = {"vn": cls.VON_NEUMANN, "vonneumann": cls.VON_NEUMANN,
                   "renyi": cls.RENYI, "tsallis": cls.TSALLIS}
        try:
            return aliases[text.lower()]
        except KeyError:
            raise DomainError(f"Unknown entropy kind: {text}")


@dataclass(frozen=True)
class EntropyReport:
    """Entropy in nats for one (L, h, alpha)"""
    params: Optional[ModelParams]
    alpha: float
    value: float
    kind: EntropyKind
    boundary_flag: bool = False
    order: int = 0


@dataclass(frozen=True)
class DensitySpectrum:
    """All 2^L eigenvalues of the reduced density matrix"""
    eigenvalues: np.ndarray

    def shannon_entropy(self) -> float:
        return float(-np.sum(xlogy(self.eigenvalues, self.eigenvalues)))

    def power_sum(self, alpha: float) -> float:
        """Tr rho^alpha"""
        positive = self.eigenvalues[self.eigenvalues > 0.0]
        return float(np.sum(positive ** alpha))


def _check_alpha(alpha: float):
    if not (alpha > 0.0) or not math.isfinite(alpha):
        raise DomainError(f"Entropy index alpha must be positive, got {alpha}")


def binary_entropy_term(x, nu):
    """
    e(x, nu) = -((x+nu)/2) ln((x+nu)/2) - ((x-nu)/2) ln((x-nu)/2), 0 ln 0 = 0

    Works elementwise on arrays.

    Raises:
        DomainError: x < |nu| somewhere
    """
    x = np.asarray(x, dtype=float)
    nu = np.asarray(nu, dtype=float)
    if np.any(x < np.abs(nu)):
        raise DomainError("binary_entropy_term needs x >= |nu|")

    plus = (x + nu) / 2.0
    minus = (x - nu) / 2.0
    value = -xlogy(plus, plus) - xlogy(minus, minus)
    # modes sitting on +-1 carry no entropy
    pure = (x == 1.0) & (np.abs(nu) >= PURE_MODE_EDGE)
    value = np.where(pure, 0.0, value)
    return float(value) if value.ndim == 0 else value


def renyi_mode_term(nu, alpha: float):
    """
    s_alpha(nu) = ln(p^alpha + q^alpha) / (1 - alpha), p, q = (1 +- nu)/2

    Summed in log space so the smaller power cannot underflow. alpha == 1
    returns e(1, nu).
    """
    _check_alpha(alpha)
    if alpha == 1.0:
        return binary_entropy_term(1.0, nu)

    nu = np.clip(np.asarray(nu, dtype=float), -1.0, 1.0)
    with np.errstate(divide="ignore"):
        log_p = np.log((1.0 + nu) / 2.0)
        log_q = np.log((1.0 - nu) / 2.0)
    value = np.logaddexp(alpha * log_p, alpha * log_q) / (1.0 - alpha)
    value = np.where(np.abs(nu) >= PURE_MODE_EDGE, 0.0, value)
    return float(value) if value.ndim == 0 else value


def von_neumann_entropy(spec: CorrelationSpectrum, params: Optional[ModelParams] = None) -> EntropyReport:
    """S = sum_m e(1, nu_m)"""
    value = float(np.sum(binary_entropy_term(1.0, spec.values)))
    return EntropyReport(params=params, alpha=1.0, value=max(value, 0.0),
                         kind=EntropyKind.VON_NEUMANN, order=spec.order)


def renyi_entropy(spec: CorrelationSpectrum, alpha: float,
                  params: Optional[ModelParams] = None) -> EntropyReport:
    """S_alpha = sum_m s_alpha(nu_m); alpha == 1 is the von Neumann entropy"""
    _check_alpha(alpha)
    if alpha == 1.0:
        return von_neumann_entropy(spec, params)
    value = float(np.sum(renyi_mode_term(spec.values, alpha)))
    return EntropyReport(params=params, alpha=alpha, value=max(value, 0.0),
                         kind=EntropyKind.RENYI, order=spec.order)


def renyi_to_tsallis(renyi_value: float, alpha: float) -> float:
    """(Tr rho^alpha - 1)/(1 - alpha) with Tr rho^alpha = exp((1 - alpha) S_alpha)"""
    if alpha == 1.0:
        return renyi_value
    return math.expm1((1.0 - alpha) * renyi_value) / (1.0 - alpha)


def tsallis_entropy(spec: CorrelationSpectrum, alpha: float,
                    params: Optional[ModelParams] = None) -> EntropyReport:
    """S_T from the Renyi entropy; alpha == 1 is the von Neumann entropy"""
    _check_alpha(alpha)
    if alpha == 1.0:
        return von_neumann_entropy(spec, params)
    renyi = renyi_entropy(spec, alpha, params)
    value = renyi_to_tsallis(renyi.value, alpha)
    return EntropyReport(params=params, alpha=alpha, value=max(value, 0.0),
                         kind=EntropyKind.TSALLIS, order=spec.order)


def density_matrix_spectrum(spec: CorrelationSpectrum) -> DensitySpectrum:
    """
    All products prod_i (1 + (-1)^{x_i} nu_i)/2 over x in {0,1}^L

    The first mode is the slowest-varying bit of the index.
    """
    if spec.order > MAX_DENSITY_ORDER:
        raise SizeLimitError(f"2^L spectrum capped at L={MAX_DENSITY_ORDER}, got L={spec.order}")

    eigenvalues = np.ones(1)
    for nu in spec.values:
        eigenvalues = np.kron(eigenvalues, np.array([(1.0 + nu) / 2.0, (1.0 - nu) / 2.0]))
    return DensitySpectrum(eigenvalues=eigenvalues)


def entropy_from_spectrum(spec: CorrelationSpectrum, alpha: float, kind: EntropyKind,
                          params: Optional[ModelParams] = None) -> EntropyReport:
    if kind == EntropyKind.VON_NEUMANN:
        return von_neumann_entropy(spec, params)
    if kind == EntropyKind.RENYI:
        return renyi_entropy(spec, alpha, params)
    return tsallis_entropy(spec, alpha, params)


def exact_entropy(params: ModelParams, alpha: float = 1.0,
                  kind: EntropyKind = EntropyKind.VON_NEUMANN) -> EntropyReport:
    """
    Full pipeline: G_L -> spectrum -> entropy

    At |h| = 2 the ground state is fully polarized; the report carries value 0
    and boundary_flag instead of running a degenerate Toeplitz construction.
    """
    _check_alpha(alpha)
    if kind == EntropyKind.VON_NEUMANN:
        alpha = 1.0
    if params.at_critical_field:
        logger.info("Field at boundary of criticality; entropy is zero", L=params.L, h=params.h)
        effective = EntropyKind.VON_NEUMANN if alpha == 1.0 else kind
        return EntropyReport(params=params, alpha=alpha, value=0.0, kind=effective,
                             boundary_flag=True, order=params.L)

    spec = spectrum_for(params.L, params.k_F)
    return entropy_from_spectrum(spec, alpha, kind, params)
