"""
Exact-diagonalization oracle on small open chains

    H = -sum_{n<N} (sx_n sx_{n+1} + sy_n sy_{n+1}) - h sum_n sz_n

Basis states are tensor products with site 1 as the slowest-varying index
and up = (1, 0). The block entropy is computed twice: by a partial trace of
the many-body ground state and from the free-fermion correlation matrix of
the same open chain. Both must agree whenever the ground state is unique.
"""
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
import scipy.sparse as sp
from scipy.linalg import eigh, eigvalsh
from scipy.sparse.linalg import eigsh, ArpackNoConvergence

from app_config import config
from core.entropy import DensitySpectrum, binary_entropy_term, renyi_mode_term
from utils import get_logger, DomainError, SizeLimitError, HalfFillingError, ComputationError


logger = get_logger(__name__, config.log_file, config.log_level)

_RAISE = sp.csr_matrix(np.array([[0.0, 1.0], [0.0, 0.0]]))
_LOWER = sp.csr_matrix(np.array([[0.0, 0.0], [1.0, 0.0]]))
_SZ = sp.csr_matrix(np.diag([1.0, -1.0]))


@dataclass(frozen=True)
class FiniteChainSpec:
    """
    Open chain of n_sites spins with a block of block_len sites

    block_start = 0 is the edge block of the first block_len sites. The
    many-body route is capped at config.oracle.max_sites; the correlation
    route works for any chain length.
    """
    n_sites: int
    block_len: int
    h: float
    block_start: int = 0
    boundary: str = "open"

    def __post_init__(self):
        if self.boundary != "open":
            raise DomainError(f"Only open boundaries are supported, got {self.boundary}")
        if self.n_sites < 2:
            raise DomainError(f"Chain needs at least 2 sites, got {self.n_sites}")
        if self.block_len < 1 or self.block_start < 0:
            raise DomainError("Block needs block_len >= 1 and block_start >= 0")
        if self.block_start + self.block_len > self.n_sites:
            raise DomainError(
                f"Block [{self.block_start}, {self.block_start + self.block_len}) "
                f"does not fit in {self.n_sites} sites"
            )
        if self.block_start == 0 and self.block_len == self.n_sites:
            raise DomainError("Block must leave a non-empty complement")
        if not math.isfinite(self.h):
            raise DomainError(f"Field must be finite, got {self.h}")

    @property
    def complement(self) -> "FiniteChainSpec":
        """The sites after an edge block, as a block of their own"""
        if self.block_start != 0:
            raise DomainError("Complement is defined for edge blocks only")
        return FiniteChainSpec(n_sites=self.n_sites, block_len=self.n_sites - self.block_len,
                               h=self.h, block_start=self.block_len)


@dataclass(frozen=True)
class OracleResult:
    """Both routes for one chain; entropy_correlation is None for a degenerate ground state"""
    entropy_partial_trace: float
    entropy_correlation: Optional[float]
    ground_energy: float
    degeneracy_flag: bool
    gap: float = 0.0

    @property
    def discrepancy(self) -> Optional[float]:
        if self.entropy_correlation is None:
            return None
        return abs(self.entropy_partial_trace - self.entropy_correlation)


def _site_operator(op: sp.spmatrix, site: int, n_sites: int) -> sp.csr_matrix:
    left = sp.identity(2 ** site, format="csr")
    right = sp.identity(2 ** (n_sites - site - 1), format="csr")
    return sp.kron(sp.kron(left, op, format="csr"), right, format="csr")


def chain_hamiltonian(n_sites: int, h: float) -> sp.csr_matrix:
    """Sparse open-chain Hamiltonian; sx sx + sy sy = 2 (s+ s- + s- s+)"""
    dim = 2 ** n_sites
    H = sp.csr_matrix((dim, dim))
    for n in range(n_sites - 1):
        hop = sp.kron(_RAISE, _LOWER, format="csr") + sp.kron(_LOWER, _RAISE, format="csr")
        left = sp.identity(2 ** n, format="csr")
        right = sp.identity(2 ** (n_sites - n - 2), format="csr")
        H = H - 2.0 * sp.kron(sp.kron(left, hop, format="csr"), right, format="csr")
    for n in range(n_sites):
        H = H - h * _site_operator(_SZ, n, n_sites)
    return H.tocsr()


def _lowest_pair(H: sp.csr_matrix, n_sites: int):
    """(E0, E1, ground-state vector)"""
    if n_sites <= config.oracle.dense_limit:
        energies, vectors = eigh(H.toarray())
        return energies[0], energies[1], vectors[:, 0]
    try:
        energies, vectors = eigsh(H, k=2, which="SA", v0=np.ones(H.shape[0]), tol=1e-14)
    except ArpackNoConvergence as e:
        raise ComputationError(f"Lanczos did not converge for N={n_sites}: {e}")
    order = np.argsort(energies)
    return energies[order[0]], energies[order[1]], vectors[:, order[0]]


def reduced_density_matrix(psi: np.ndarray, spec: FiniteChainSpec) -> np.ndarray:
    """Trace out everything but the block; psi is indexed site 1 first"""
    before = 2 ** spec.block_start
    block = 2 ** spec.block_len
    after = 2 ** (spec.n_sites - spec.block_start - spec.block_len)
    tensor = np.asarray(psi).reshape(before, block, after)
    return np.einsum("ikj,ilj->kl", tensor, tensor.conj())


def _entropy_of_density(rho: np.ndarray, alpha: float) -> float:
    weights = np.clip(eigvalsh(rho), 0.0, None)
    spectrum = DensitySpectrum(eigenvalues=weights)
    if alpha == 1.0:
        return max(spectrum.shannon_entropy(), 0.0)
    return max(math.log(spectrum.power_sum(alpha)) / (1.0 - alpha), 0.0)


def _mode_energies(spec: FiniteChainSpec) -> np.ndarray:
    k = np.arange(1, spec.n_sites + 1, dtype=float)
    return -2.0 * np.cos(math.pi * k / (spec.n_sites + 1)) - spec.h


def _filled_modes(spec: FiniteChainSpec) -> np.ndarray:
    energies = _mode_energies(spec)
    zero = np.abs(energies) < config.oracle.zero_mode_tol
    if np.any(zero):
        raise HalfFillingError(
            f"Zero-energy mode at k={int(np.flatnonzero(zero)[0]) + 1} for N={spec.n_sites}, h={spec.h}"
        )
    return np.flatnonzero(energies < 0.0) + 1


def free_fermion_ground_energy(spec: FiniteChainSpec) -> float:
    """E0 = 2 sum_{eps_k < 0} eps_k + h N"""
    energies = _mode_energies(spec)
    return float(2.0 * np.sum(energies[energies < 0.0]) + spec.h * spec.n_sites)


def finite_chain_correlation_entropy(spec: FiniteChainSpec, alpha: float = 1.0) -> float:
    """
    Block entropy from C_mn = sum_{filled k} phi_k(m) phi_k(n)

    phi_k(n) = sqrt(2/(N+1)) sin(pi k n/(N+1)); only the block rows are built.

    Raises:
        HalfFillingError: a single-particle energy within zero_mode_tol of 0
    """
    if not (alpha > 0.0):
        raise DomainError(f"alpha must be positive, got {alpha}")
    filled = _filled_modes(spec)
    # an empty or a full band is a product state
    if filled.size == 0 or filled.size == spec.n_sites:
        return 0.0

    N = spec.n_sites
    sites = np.arange(spec.block_start + 1, spec.block_start + spec.block_len + 1, dtype=float)
    modes = math.sqrt(2.0 / (N + 1)) * np.sin(math.pi * np.outer(sites, filled) / (N + 1))
    occupations = eigvalsh(modes @ modes.T)
    nu = np.clip(2.0 * occupations - 1.0, -1.0, 1.0)

    if alpha == 1.0:
        return max(float(np.sum(binary_entropy_term(1.0, nu))), 0.0)
    return max(float(np.sum(renyi_mode_term(nu, alpha))), 0.0)


def ed_ground_state_entropy(spec: FiniteChainSpec, alpha: float = 1.0) -> OracleResult:
    """
    Partial-trace entropy of the many-body ground state, with the
    correlation-matrix value alongside when the ground state is unique

    Raises:
        SizeLimitError: n_sites above config.oracle.max_sites
    """
    if spec.n_sites > config.oracle.max_sites:
        raise SizeLimitError(f"ED capped at {config.oracle.max_sites} sites, got {spec.n_sites}")
    if not (alpha > 0.0):
        raise DomainError(f"alpha must be positive, got {alpha}")

    H = chain_hamiltonian(spec.n_sites, spec.h)
    e0, e1, psi = _lowest_pair(H, spec.n_sites)
    gap = float(e1 - e0)
    degenerate = gap < config.oracle.degeneracy_gap

    entropy_trace = _entropy_of_density(reduced_density_matrix(psi, spec), alpha)

    entropy_corr = None
    if degenerate:
        logger.warning("Degenerate ground state; correlation route skipped",
                       n_sites=spec.n_sites, h=spec.h, gap=gap)
    else:
        entropy_corr = finite_chain_correlation_entropy(spec, alpha)

    logger.debug("ED oracle", n_sites=spec.n_sites, block=spec.block_len, h=spec.h,
                 partial_trace=entropy_trace, correlation=entropy_corr)
    return OracleResult(
        entropy_partial_trace=entropy_trace,
        entropy_correlation=entropy_corr,
        ground_energy=float(e0),
        degeneracy_flag=degenerate,
        gap=gap,
    )
