"""
Toeplitz matrix G_L generated by the jump symbol g(theta)

g(theta) = +1 on (-k_F, k_F) and -1 elsewhere on the circle. Its Fourier
coefficients have the closed form

    g_0 = 2 k_F / pi - 1,    g_l = 2 sin(k_F l) / (pi l)   (l != 0)

and G_L[i, j] = g_{i-j}. Since g_l = g_{-l} the matrix is real symmetric.
"""
import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

import numpy as np
from scipy.linalg import toeplitz

from app_config import config
from utils import get_logger, DomainError, SizeLimitError


logger = get_logger(__name__, config.log_file, config.log_level)


class SymbolKind(str, Enum):
    GROUND = "ground"
    SHIFTED = "shifted"


@dataclass(frozen=True)
class SymbolSpec:
    """
    Bookkeeping for the two symbols in play

    GROUND is g(theta) with values +1/-1. SHIFTED is lambda - g(theta), the
    symbol of lambda*I - G_L, with values lambda - 1 inside (-k_F, k_F) and
    lambda + 1 outside. No separate matrix is ever built for SHIFTED.
    """
    k_F: float
    kind: SymbolKind = SymbolKind.GROUND
    lam: Optional[complex] = None

    def __post_init__(self):
        _check_momentum(self.k_F)
        if self.kind == SymbolKind.SHIFTED and self.lam is None:
            raise DomainError("Shifted symbol needs lambda")

    def values(self) -> Tuple[complex, complex]:
        """(value inside the Fermi window, value outside)"""
        if self.kind == SymbolKind.GROUND:
            return 1.0, -1.0
        return self.lam - 1.0, self.lam + 1.0

    def evaluate(self, theta: np.ndarray) -> np.ndarray:
        """Symbol on the circle; theta is reduced to (-pi, pi]"""
        theta = np.angle(np.exp(1j * np.asarray(theta, dtype=float)))
        inside, outside = self.values()
        return np.where(np.abs(theta) < self.k_F, inside, outside)


@dataclass(frozen=True)
class SignMatrix:
    """G_L stored both as its first row and densely"""
    order: int
    k_F: float
    first_row: np.ndarray
    dense: np.ndarray

    def shifted(self, lam: complex) -> np.ndarray:
        """lambda*I - G_L"""
        return lam * np.eye(self.order) - self.dense


def _check_momentum(k_F: float):
    if not (0.0 < k_F < math.pi):
        raise DomainError(f"Fermi momentum must lie in (0, pi), got {k_F}")


def fourier_coefficient(l: int, k_F: float) -> float:
    """Closed-form g_l of the ground symbol"""
    _check_momentum(k_F)
    if l == 0:
        return 2.0 * k_F / math.pi - 1.0
    return 2.0 * math.sin(k_F * l) / (math.pi * l)


def fourier_coefficients(L: int, k_F: float) -> np.ndarray:
    """g_0 ... g_{L-1}; sin(k_F l)/l evaluated directly for every l"""
    _check_momentum(k_F)
    l = np.arange(L, dtype=float)
    row = np.empty(L)
    row[0] = 2.0 * k_F / math.pi - 1.0
    if L > 1:
        row[1:] = 2.0 * np.sin(k_F * l[1:]) / (math.pi * l[1:])
    return row


def build_sign_matrix(L: int, k_F: float) -> SignMatrix:
    """Dense G_L from O(L) coefficients"""
    if isinstance(L, bool) or int(L) != L or L < 1:
        raise DomainError(f"Matrix order must be a positive integer, got {L}")
    L = int(L)
    if L > config.spectrum.max_order:
        raise SizeLimitError(f"Matrix order {L} exceeds cap {config.spectrum.max_order}")

    row = fourier_coefficients(L, k_F)
    dense = toeplitz(row)
    logger.debug("Built sign matrix", order=L, k_F=k_F)
    return SignMatrix(order=L, k_F=k_F, first_row=row, dense=dense)


def frobenius_from_coefficients(row: np.ndarray) -> float:
    """sum_{|l|<L} (L-|l|) g_l^2, the squared Frobenius norm of G_L"""
    L = len(row)
    weights = L - np.arange(L, dtype=float)
    return float(weights[0] * row[0] ** 2 + 2.0 * np.sum(weights[1:] * row[1:] ** 2))
