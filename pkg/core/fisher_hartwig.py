"""
Fisher-Hartwig asymptotics of D_L(lambda) = det(lambda I - G_L)

The symbol lambda - g(theta) has two jumps, at +-k_F, with exponents -beta
and +beta,

    beta(lambda) = ln((lambda + 1)/(lambda - 1)) / (2 pi i),
    -pi <= arg((lambda + 1)/(lambda - 1)) < pi.

For lambda off [-1, 1], |Re beta| < 1/2 and the asymptotic law is a theorem:

    D_L ~ (2 - 2 cos 2k_F)^(-beta^2) [G(1 + beta) G(1 - beta)]^2
          [(lambda + 1) ((lambda + 1)/(lambda - 1))^(-k_F/pi)]^L  L^(-2 beta^2)

All complex powers are taken as exp(exponent * log) on the same branch.
"""
import cmath
import math
from dataclasses import dataclass

import numpy as np

from app_config import config
from core.model import ModelParams
from core.spectrum import CorrelationSpectrum, spectrum_for
from core.special import log_barnes_g_pair
from core.toeplitz import SymbolSpec, SymbolKind
from utils import get_logger, DomainError, IntegrityError


logger = get_logger(__name__, config.log_file, config.log_level)

_CUT_TOL = 1e-15


@dataclass(frozen=True)
class JumpExponent:
    lam: complex
    beta: complex


@dataclass(frozen=True)
class FHEvaluation:
    """Asymptotic and exact determinants, kept in log form as well"""
    lam: complex
    order: int
    log_asymptotic: complex
    log_exact: complex

    @property
    def asymptotic(self) -> complex:
        return cmath.exp(self.log_asymptotic)

    @property
    def exact(self) -> complex:
        return cmath.exp(self.log_exact)

    @property
    def ratio(self) -> complex:
        """exact / asymptotic"""
        return cmath.exp(self.log_exact - self.log_asymptotic)

    @property
    def relative_gap(self) -> float:
        return abs(self.ratio - 1.0)


def _on_cut(lam: complex) -> bool:
    return abs(lam.imag) <= _CUT_TOL and -1.0 <= lam.real <= 1.0


def branch_log(z: complex) -> complex:
    """Logarithm with argument in [-pi, pi)"""
    value = cmath.log(z)
    if value.imag >= math.pi:
        value -= 2j * math.pi
    return value


def beta_exponent(lam: complex) -> JumpExponent:
    """
    beta(lambda) on the fixed branch

    Raises:
        DomainError: lambda on the cut [-1, 1]
    """
    lam = complex(lam)
    if _on_cut(lam):
        raise DomainError(f"lambda={lam} lies on the cut [-1, 1]")
    beta = branch_log((lam + 1.0) / (lam - 1.0)) / (2j * math.pi)
    if not abs(beta.real) < 0.5:
        raise IntegrityError(f"|Re beta| = {abs(beta.real)} outside the proven window")
    return JumpExponent(lam=lam, beta=beta)


def boundary_beta(x: float, side: int = 1) -> complex:
    """beta(x + i0^+) for side = +1, beta(x + i0^-) for side = -1, x in (-1, 1)"""
    if not -1.0 < x < 1.0:
        raise DomainError(f"Boundary value needs x in (-1, 1), got {x}")
    w = math.log((1.0 + x) / (1.0 - x)) / (2.0 * math.pi)
    return -1j * w - side * 0.5


def shifted_symbol_values(lam: complex, k_F: float):
    """(lambda - 1, lambda + 1): the shifted symbol inside and outside the Fermi window"""
    return SymbolSpec(k_F=k_F, kind=SymbolKind.SHIFTED, lam=complex(lam)).values()


def log_fh_determinant(lam: complex, L: int, k_F: float) -> complex:
    """ln D_L^FH, defined up to 2 pi i"""
    if L < 1:
        raise DomainError(f"Block length must be >= 1, got {L}")
    if not (0.0 < k_F < math.pi):
        raise DomainError(f"Fermi momentum must lie in (0, pi), got {k_F}")

    exponent = beta_exponent(lam)
    beta = exponent.beta
    b2 = beta * beta
    lam = exponent.lam

    log_quotient = branch_log((lam + 1.0) / (lam - 1.0))
    log_base = branch_log(lam + 1.0) - (k_F / math.pi) * log_quotient

    return (-b2 * math.log(2.0 - 2.0 * math.cos(2.0 * k_F))
            + 2.0 * log_barnes_g_pair(beta)
            + L * log_base
            - 2.0 * b2 * math.log(L))


def fh_determinant(lam: complex, L: int, k_F: float) -> complex:
    """D_L^FH(lambda); may overflow for large L, use log_fh_determinant then"""
    return cmath.exp(log_fh_determinant(lam, L, k_F))


def log_exact_determinant(lam: complex, spec: CorrelationSpectrum) -> complex:
    """sum_m ln(lambda - nu_m); -inf when lambda hits an eigenvalue"""
    lam = complex(lam)
    gaps = lam - spec.values.astype(complex)
    hit = np.abs(gaps) < config.spectrum.pole_tol
    if np.any(hit):
        logger.warning("lambda coincides with an eigenvalue", lam=lam,
                       index=int(np.flatnonzero(hit)[0]))
        return complex(-math.inf)
    return complex(np.sum(np.log(gaps)))


def exact_determinant(lam: complex, spec: CorrelationSpectrum) -> complex:
    """prod_m (lambda - nu_m) via exp(sum ln); 0 at a pole"""
    log_value = log_exact_determinant(lam, spec)
    if math.isinf(log_value.real):
        return 0j
    return cmath.exp(log_value)


def compare_determinants(lam: complex, params: ModelParams,
                         spec: CorrelationSpectrum = None) -> FHEvaluation:
    """Exact determinant against the asymptotic law at one (lambda, L, h)"""
    spec = spec or spectrum_for(params.L, params.k_F)
    evaluation = FHEvaluation(
        lam=complex(lam),
        order=params.L,
        log_asymptotic=log_fh_determinant(lam, params.L, params.k_F),
        log_exact=log_exact_determinant(lam, spec),
    )
    logger.debug("Compared determinants", lam=lam, L=params.L, gap=evaluation.relative_gap)
    return evaluation
