"""
Special functions: complex digamma and the Barnes G pair product
"""
import numpy as np
from scipy import special

from app_config import config
from utils import get_logger, ComputationError


logger = get_logger(__name__, config.log_file, config.log_level)

EULER_GAMMA = float(np.euler_gamma)


def digamma(z):
    """psi(z) for complex z away from the non-positive integers"""
    value = special.psi(np.asarray(z, dtype=complex))
    return complex(value) if np.ndim(value) == 0 else value


def digamma_critical_line(w):
    """Re psi(1/2 + i w); psi(1/2 - i w) + psi(1/2 + i w) is twice this"""
    w = np.asarray(w, dtype=float)
    value = np.real(digamma(0.5 + 1j * w))
    return float(value) if np.ndim(value) == 0 else value


def _zeta_tail(s: int, n: int) -> float:
    """sum_{k>n} k^{-s}"""
    return float(special.zeta(s, n + 1))


def log_barnes_g_pair(beta: complex, n_terms: int = None) -> complex:
    """
    ln[G(1 + beta) G(1 - beta)]

        = -(1 + gamma_E) beta^2 + sum_n [n ln(1 - beta^2/n^2) + beta^2/n]

    The sum is truncated after n_terms and the remainder, whose expansion
    starts at -beta^4/(2 n^3), is added from zeta tails. The imaginary part
    is defined up to multiples of 2 pi i.
    """
    n_terms = n_terms or config.barnes.n_terms
    b2 = complex(beta) ** 2
    n = np.arange(1, n_terms + 1, dtype=float)
    terms = n * np.log1p(-b2 / n ** 2) + b2 / n
    if not np.all(np.isfinite(terms)):
        raise ComputationError(f"Barnes product diverged at beta={beta}")

    tail = -(b2 ** 2) / 2.0 * _zeta_tail(3, n_terms) - (b2 ** 3) / 3.0 * _zeta_tail(5, n_terms)
    return -(1.0 + EULER_GAMMA) * b2 + complex(np.sum(terms)) + tail


def barnes_g_pair(beta: complex, n_terms: int = None) -> complex:
    """
    G(1 + beta) G(1 - beta)

    Zero at beta = +-1, +-2, ... where the n = |beta| factor vanishes.
    """
    beta = complex(beta)
    nearest = round(beta.real)
    if nearest != 0 and abs(beta - nearest) < 1e-14:
        return 0j
    value = np.exp(log_barnes_g_pair(beta, n_terms))
    if not np.isfinite(value):
        raise ComputationError(f"Barnes G pair overflowed at beta={beta}")
    return complex(value)
