"""
Closed-form predictions for the block entropy

Large blocks:
    S       = (1/3) ln Lsc + Y1
    S_alpha = ((1 + 1/alpha)/6) ln Lsc + Y1(alpha)
Small blocks (0 < Lsc < 1): G_L is close to a matrix with one eigenvalue
Lsc/pi - 1 and the rest -1, so the block holds a single mode occupied with
probability Lsc/(2 pi).

Lsc = 2 L sqrt(1 - (h/2)^2) is the scaling variable. The constants are

    Y1        = -int_0^inf dt [e^-t/(3t) + 1/(t sinh^2(t/2)) - cosh(t/2)/(2 sinh^3(t/2))]
    Y1(alpha) = -(1/pi^2) int_{-1}^{1} dx s_alpha(x)/(1 - x^2) [psi(1/2 - iW) + psi(1/2 + iW)]

with W(x) = ln((1 + x)/(1 - x)) / (2 pi). Y1(1) coincides with Y1.
"""
import math
import threading
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, Hashable, Optional, Sequence

import numpy as np
from scipy.integrate import quad

from app_config import config, QuadratureConfig
from core.entropy import renyi_to_tsallis
from core.model import ModelParams
from core.special import digamma_critical_line, EULER_GAMMA
from utils import get_logger, DomainError, ComputationError


logger = get_logger(__name__, config.log_file, config.log_level)

UPSILON1_REFERENCE = 0.4950179
ACCURATE_SCALE = 10.0


class Regime(str, Enum):
    LARGE = "largeL"
    SMALL = "smallL"


@dataclass(frozen=True)
class AsymptoticPrediction:
    """A closed-form entropy prediction and the constant it used"""
    params: ModelParams
    alpha: float
    regime: Regime
    value: float
    constant_used: Optional[float] = None

    def as_tsallis(self) -> float:
        return renyi_to_tsallis(self.value, self.alpha)


class ConstantCache:
    """
    Memo for the integral constants

    Keys are (alpha, QuadratureConfig). Each key is computed at most once; a
    second caller asking for a key in flight waits for the first.
    """

    def __init__(self):
        self._values: Dict[Hashable, float] = {}
        self._locks: Dict[Hashable, threading.Lock] = {}
        self._guard = threading.Lock()

    def get(self, key: Hashable, compute: Callable[[], float]) -> float:
        if key in self._values:
            return self._values[key]
        with self._guard:
            lock = self._locks.setdefault(key, threading.Lock())
        with lock:
            if key not in self._values:
                self._values[key] = compute()
                logger.debug("Cached constant", key=str(key), value=self._values[key])
        return self._values[key]

    def clear(self):
        with self._guard:
            self._values.clear()
            self._locks.clear()

    def __len__(self) -> int:
        return len(self._values)


constant_cache = ConstantCache()


def _integrate(func: Callable[[float], float], a: float, b: float,
               cfg: QuadratureConfig, **kwargs) -> float:
    """
    Adaptive Gauss-Kronrod on [a, b]

    QUADPACK diagnostics are accepted when the error estimate is still small;
    otherwise the integral is reported as not converged.
    """
    result = quad(func, a, b, epsabs=cfg.abs_tol, epsrel=cfg.rel_tol,
                  limit=cfg.limit, full_output=1, **kwargs)
    value, error = result[0], result[1]
    if not math.isfinite(value):
        raise ComputationError(f"Quadrature on [{a}, {b}] returned {value}")
    if len(result) > 3:
        accepted = max(1e3 * cfg.abs_tol, 1e-9)
        if error > accepted:
            raise ComputationError(
                f"Quadrature on [{a}, {b}] did not converge: error {error:.2e}, {result[3]}"
            )
        logger.debug("Quadrature diagnostic accepted", interval=(a, b), error=error)
    return value


# ------------------------------------------------------------------ Y1, t-form

# Coefficients c_k of u^(2k-1), u = t/2, in the bracket minus (e^-t - 1)/(3t):
# they come from csch^2 u = 1/u^2 + sum a_k u^(2k) as a_k (k + 1)/2.
_SERIES = (
    1.0 / 15.0,
    -1.0 / 63.0,
    2.0 / 675.0,
    -5.0 / 10395.0,
    3.0 * 15202.0 / 638512875.0,
)


def t_integrand_series(t: float) -> float:
    """Small-t form of the bracket; the two 4/t^3 poles cancel analytically"""
    u = 0.5 * t
    odd = sum(c * u ** (2 * k + 1) for k, c in enumerate(_SERIES))
    return math.expm1(-t) / (3.0 * t) + odd


def t_integrand_direct(t: float) -> float:
    half = 0.5 * t
    s = math.sinh(half)
    return (math.exp(-t) / (3.0 * t)
            + 1.0 / (t * s * s)
            - math.cosh(half) / (2.0 * s ** 3))


def t_integrand(t: float, cutoff: float = None) -> float:
    """The bracket of the Y1 integral, finite at t -> 0 (limit -1/3)"""
    cutoff = config.quadrature.series_cutoff if cutoff is None else cutoff
    if t == 0.0:
        return -1.0 / 3.0
    if t < cutoff:
        return t_integrand_series(t)
    return t_integrand_direct(t)


def _upsilon1_t_route(cfg: QuadratureConfig) -> float:
    cut = cfg.series_cutoff
    split = max(cfg.split_point, cut)
    total = _integrate(t_integrand_series, 0.0, cut, cfg)
    if split > cut:
        total += _integrate(t_integrand_direct, cut, split, cfg)
    total += _integrate(t_integrand_direct, split, cfg.t_max, cfg)
    # bracket ~ -2 e^{-t} beyond t_max
    total += -2.0 * math.exp(-cfg.t_max)
    return -total


def upsilon1(cfg: QuadratureConfig = None) -> float:
    """Y1, the constant of the von Neumann law; about 0.4950179"""
    cfg = cfg or config.quadrature
    return constant_cache.get((1.0, cfg), lambda: _upsilon1_t_route(cfg))


# ----------------------------------------------------------- Y1(alpha), w-form

def _mode_entropy_on_w(w: float, alpha: float) -> float:
    """s_alpha(tanh(pi w)) from log-probabilities, exact for large w"""
    a = math.pi * w
    log_norm = np.logaddexp(a, -a)  # ln(2 cosh(pi w))
    log_p = a - log_norm
    log_q = -a - log_norm
    if alpha == 1.0:
        return float(log_norm - a * math.tanh(a))
    return float(np.logaddexp(alpha * log_p, alpha * log_q) / (1.0 - alpha))


def _upsilon_w_route(alpha: float, cfg: QuadratureConfig) -> float:
    # x = tanh(pi w) turns dx/(1 - x^2) into pi dw; both factors are even in w
    def integrand(w: float) -> float:
        return _mode_entropy_on_w(w, alpha) * digamma_critical_line(w)

    w_max = cfg.w_max
    body = _integrate(integrand, 0.0, w_max, cfg, points=[1.0])
    # mode entropy decays like exp(-2 pi min(alpha, 1) w)
    tail = integrand(w_max) / (2.0 * math.pi * min(alpha, 1.0))
    return -4.0 / math.pi * (body + tail)


def upsilon_alpha(alpha: float, cfg: QuadratureConfig = None) -> float:
    """Y1(alpha), the constant of the Renyi law; upsilon_alpha(1) == upsilon1()"""
    if not (alpha > 0.0) or not math.isfinite(alpha):
        raise DomainError(f"alpha must be positive, got {alpha}")
    if alpha == 1.0:
        return upsilon1(cfg)
    cfg = cfg or config.quadrature
    return constant_cache.get((float(alpha), cfg), lambda: _upsilon_w_route(alpha, cfg))


# ----------------------------------------------------------- Y1(alpha), x-form

def upsilon_alpha_x_route(alpha: float, cfg: QuadratureConfig = None) -> float:
    """
    Y1(alpha) integrated in x directly

    Uses the evenness in x and the variable delta = 1 - x, so the
    probabilities (2 - delta)/2 and delta/2 are formed without cancellation.
    Independent of the w-substitution used by upsilon_alpha.
    """
    if not (alpha > 0.0) or not math.isfinite(alpha):
        raise DomainError(f"alpha must be positive, got {alpha}")
    cfg = cfg or config.quadrature

    def integrand(delta: float) -> float:
        log_p = math.log1p(-0.5 * delta)
        log_q = math.log(0.5 * delta)
        if alpha == 1.0:
            s = -math.exp(log_p) * log_p - math.exp(log_q) * log_q
        else:
            s = float(np.logaddexp(alpha * log_p, alpha * log_q)) / (1.0 - alpha)
        w = (log_p - log_q) / (2.0 * math.pi)
        return s / (delta * (2.0 - delta)) * digamma_critical_line(w)

    body = _integrate(integrand, 0.0, 1.0, cfg, points=[1e-6, 1e-3])
    return -4.0 / math.pi ** 2 * body


def upsilon0(cfg: QuadratureConfig = None) -> float:
    """Y0 = Y1 - (1 + gamma_E)/3, the n-sum form of the constant"""
    return upsilon1(cfg) - (1.0 + EULER_GAMMA) / 3.0


# ------------------------------------------------------------------ predictions

def leading_coefficient(alpha: float) -> float:
    """(1 + 1/alpha)/6, which is 1/3 at alpha = 1"""
    return (1.0 + 1.0 / alpha) / 6.0


def large_block_entropy(params: ModelParams, alpha: float = 1.0) -> AsymptoticPrediction:
    """
    ((1 + 1/alpha)/6) ln Lsc + Y1(alpha)

    Raises:
        DomainError: Lsc <= 0
    """
    lsc = params.scaled_length
    if lsc <= 0.0:
        raise DomainError(f"Scaled length must be positive, got {lsc}")
    if lsc <= 1.0:
        logger.warning("Large-block law used outside its regime", scaled_length=lsc)
    elif lsc < ACCURATE_SCALE:
        logger.warning("Large-block law is inaccurate at this scale", scaled_length=lsc)

    constant = upsilon_alpha(alpha)
    value = leading_coefficient(alpha) * math.log(lsc) + constant
    return AsymptoticPrediction(params=params, alpha=alpha, regime=Regime.LARGE,
                                value=value, constant_used=constant)


def field_form_entropy(params: ModelParams) -> float:
    """The von Neumann law written with L and h separately"""
    ratio = params.abs_h / 2.0
    return (math.log(params.L) / 3.0
            + math.log((1.0 - ratio) * (1.0 + ratio)) / 6.0
            + math.log(2.0) / 3.0
            + upsilon1())


def small_block_entropy(params: ModelParams, alpha: float = 1.0) -> AsymptoticPrediction:
    """
    Entropy of one mode occupied with probability Lsc/(2 pi)

    alpha = 1: binary Shannon entropy of p = Lsc/(2 pi); its leading term is
    (Lsc/2pi) ln(2pi/Lsc). alpha != 1: ln(p^alpha + (1-p)^alpha)/(1 - alpha).
    In terms of the folded momentum, Lsc/(2 pi) is L k~_F/pi to leading order.

    Raises:
        DomainError: Lsc outside (0, 1)
    """
    if not (alpha > 0.0) or not math.isfinite(alpha):
        raise DomainError(f"alpha must be positive, got {alpha}")
    lsc = params.scaled_length
    if not (0.0 < lsc < 1.0):
        raise DomainError(f"Small-block law needs 0 < scaled length < 1, got {lsc}")

    p = lsc / (2.0 * math.pi)
    if alpha == 1.0:
        value = -p * math.log(p) - (1.0 - p) * math.log1p(-p)
    else:
        value = math.log(p ** alpha + (1.0 - p) ** alpha) / (1.0 - alpha)
    return AsymptoticPrediction(params=params, alpha=alpha, regime=Regime.SMALL, value=value)


def richardson_extrapolate(lengths: Sequence[int], values: Sequence[float],
                           order: float = 2.0) -> float:
    """
    Limit of values(L) assuming values = limit + c L^-order + ...

    Lengths must form a geometric sequence with ratio r; repeated
    elimination removes the powers order, 2*order, ...
    """
    if len(lengths) != len(values) or len(lengths) < 2:
        raise DomainError("Richardson extrapolation needs at least two matched points")
    ratio = lengths[1] / lengths[0]
    for a, b in zip(lengths, lengths[1:]):
        if not math.isclose(b / a, ratio, rel_tol=1e-12):
            raise DomainError("Richardson extrapolation needs geometric lengths")

    table = [float(v) for v in values]
    power = order
    while len(table) > 1:
        factor = ratio ** power
        table = [(factor * hi - lo) / (factor - 1.0) for lo, hi in zip(table, table[1:])]
        power += order
    return table[0]
