"""
Eigenvalues nu_m of G_L, sanitized into [-1, 1]
"""
import math
from dataclasses import dataclass, field
from typing import List, Tuple

import numpy as np
from scipy.linalg import eigvalsh, LinAlgError

from app_config import config
from core.toeplitz import SignMatrix, build_sign_matrix
from utils import get_logger, ComputationError, IntegrityError


logger = get_logger(__name__, config.log_file, config.log_level)


@dataclass(frozen=True)
class CorrelationSpectrum:
    """
    Ascending eigenvalues of G_L

    source is (L, |h|); |h| is recovered as 2 cos(k_F). clamp_log lists
    (index, overshoot) for every value pulled back onto +-1.
    """
    values: np.ndarray
    k_F: float
    clamp_log: List[Tuple[int, float]] = field(default_factory=list)

    @property
    def order(self) -> int:
        return len(self.values)

    @property
    def source(self) -> Tuple[int, float]:
        return self.order, 2.0 * math.cos(self.k_F)

    @property
    def trace(self) -> float:
        return float(np.sum(self.values))

    @property
    def second_moment(self) -> float:
        return float(np.sum(self.values ** 2))


def correlation_spectrum(G: SignMatrix) -> CorrelationSpectrum:
    """
    Dense symmetric eigensolve of G_L

    Raises:
        ComputationError: eigensolver did not converge
        IntegrityError: an eigenvalue overshoots +-1 by more than clamp_tol,
            or the trace misses L*g_0
    """
    if not np.array_equal(G.dense, G.dense.T):
        raise IntegrityError("Sign matrix is not symmetric")

    try:
        # LAPACK syevr via eigvalsh returns ascending order
        values = eigvalsh(G.dense, check_finite=True)
    except (LinAlgError, ValueError) as e:
        logger.error("Eigensolver failed", order=G.order, error=str(e))
        raise ComputationError(f"Eigensolver failed for L={G.order}: {e}")

    values = np.array(values, dtype=float)
    tol = config.spectrum.clamp_tol
    clamp_log: List[Tuple[int, float]] = []

    overshoot = np.abs(values) - 1.0
    for index in np.flatnonzero(overshoot > 0.0):
        excess = float(overshoot[index])
        if excess > tol:
            raise IntegrityError(
                f"Eigenvalue {values[index]} at index {index} exceeds 1 by {excess:.3e}"
            )
        clamp_log.append((int(index), excess))
        values[index] = math.copysign(1.0, values[index])

    if clamp_log:
        # the sine kernel pins many eigenvalues at +-1 to within rounding
        worst = max(excess for _, excess in clamp_log)
        log = logger.warning if worst > config.spectrum.clamp_warn_tol else logger.debug
        log("Clamped eigenvalues into [-1, 1]", count=len(clamp_log), order=G.order, worst=worst)

    expected = G.order * G.first_row[0]
    if abs(np.sum(values) - expected) > config.spectrum.trace_tol * G.order:
        raise IntegrityError(
            f"Trace {np.sum(values)} differs from L*g_0 = {expected}"
        )

    values.setflags(write=False)
    return CorrelationSpectrum(values=values, k_F=G.k_F, clamp_log=clamp_log)


def spectrum_for(L: int, k_F: float) -> CorrelationSpectrum:
    """Build G_L and diagonalize it"""
    return correlation_spectrum(build_sign_matrix(L, k_F))
