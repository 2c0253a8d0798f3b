import math

import numpy as np
import pytest

from core.entropy import exact_entropy
from core.model import ModelParams
from oracles.ed_oracle import (
    FiniteChainSpec, chain_hamiltonian, ed_ground_state_entropy,
    finite_chain_correlation_entropy, free_fermion_ground_energy, reduced_density_matrix
)
from utils import DomainError, HalfFillingError, SizeLimitError


def test_two_site_singlet_like_state():
    result = ed_ground_state_entropy(FiniteChainSpec(n_sites=2, block_len=1, h=0.0))
    np.testing.assert_allclose(result.entropy_partial_trace, math.log(2.0), rtol=1e-12)
    np.testing.assert_allclose(result.entropy_correlation, math.log(2.0), rtol=1e-12)
    np.testing.assert_allclose(result.ground_energy, -2.0, rtol=1e-12)
    assert not result.degeneracy_flag


def test_two_site_correlation_route():
    value = finite_chain_correlation_entropy(FiniteChainSpec(2, 1, 0.0))
    np.testing.assert_allclose(value, math.log(2.0), rtol=1e-12)


def test_hamiltonian_is_symmetric_and_conserves_magnetization():
    H = chain_hamiltonian(4, 0.7).toarray()
    np.testing.assert_allclose(H, H.T)
    # nonzero entries only connect states with equal number of up spins
    rows, cols = np.nonzero(H)
    for r, c in zip(rows, cols):
        assert bin(r).count("1") == bin(c).count("1")


@pytest.mark.parametrize('n_sites', [2, 4, 6, 8, 10])
@pytest.mark.parametrize('h', [0.3, 0.7, 1.3])
def test_routes_agree(n_sites, h):
    for block_len in sorted({1, n_sites // 2}):
        result = ed_ground_state_entropy(FiniteChainSpec(n_sites, block_len, h))
        if result.degeneracy_flag:
            assert result.entropy_correlation is None
            continue
        assert result.discrepancy < 1e-10
        assert result.entropy_partial_trace >= 0.0


@pytest.mark.parametrize('alpha', [0.5, 2.0, 3.0])
def test_routes_agree_for_renyi(alpha):
    result = ed_ground_state_entropy(FiniteChainSpec(8, 3, 0.7), alpha)
    assert not result.degeneracy_flag
    assert result.discrepancy < 1e-10


@pytest.mark.parametrize('n_sites, h', [(4, 0.3), (6, 0.7), (10, 1.3), (9, 0.5)])
def test_ground_energy_matches_free_fermions(n_sites, h):
    spec = FiniteChainSpec(n_sites, 1, h)
    result = ed_ground_state_entropy(spec)
    np.testing.assert_allclose(result.ground_energy, free_fermion_ground_energy(spec), atol=1e-9)


@pytest.mark.parametrize('n_sites, block_len, h', [(6, 2, 0.7), (8, 3, 0.3), (7, 3, 1.3)])
def test_complementary_blocks_share_entropy(n_sites, block_len, h):
    spec = FiniteChainSpec(n_sites, block_len, h)
    left = ed_ground_state_entropy(spec)
    right = ed_ground_state_entropy(spec.complement)
    assert abs(left.entropy_partial_trace - right.entropy_partial_trace) < 1e-10


def test_inner_block_routes_agree():
    spec = FiniteChainSpec(10, 4, 0.5, block_start=3)
    result = ed_ground_state_entropy(spec)
    assert result.discrepancy < 1e-10


def test_regression_point():
    spec = FiniteChainSpec(10, 5, 0.5)
    result = ed_ground_state_entropy(spec)
    assert not result.degeneracy_flag
    assert result.discrepancy < 1e-10
    assert 0.0 < result.entropy_partial_trace < 5 * math.log(2.0)


def test_reduced_density_matrix_is_a_state():
    spec = FiniteChainSpec(4, 2, 0.0)
    psi = np.zeros(16)
    psi[0b0110] = psi[0b1001] = 1.0 / math.sqrt(2.0)
    rho = reduced_density_matrix(psi, spec)
    assert rho.shape == (4, 4)
    np.testing.assert_allclose(np.trace(rho), 1.0)
    np.testing.assert_allclose(rho, rho.T.conj())


def test_half_filling_ambiguity():
    # N = 3, h = 0 has the single-particle energy -2 cos(pi/2) = 0
    spec = FiniteChainSpec(3, 1, 0.0)
    with pytest.raises(HalfFillingError):
        finite_chain_correlation_entropy(spec)
    result = ed_ground_state_entropy(spec)
    assert result.degeneracy_flag
    assert result.entropy_correlation is None
    assert result.discrepancy is None


def test_size_cap():
    with pytest.raises(SizeLimitError):
        ed_ground_state_entropy(FiniteChainSpec(13, 2, 0.3))


@pytest.mark.parametrize('kwargs', [
    dict(n_sites=1, block_len=1, h=0.0),
    dict(n_sites=4, block_len=0, h=0.0),
    dict(n_sites=4, block_len=4, h=0.0),
    dict(n_sites=4, block_len=2, h=0.0, block_start=3),
    dict(n_sites=4, block_len=2, h=0.0, boundary="periodic"),
    dict(n_sites=4, block_len=2, h=math.nan),
])
def test_invalid_chain_specs(kwargs):
    with pytest.raises(DomainError):
        FiniteChainSpec(**kwargs)


@pytest.mark.parametrize('h', [2.5, -2.5])
def test_saturated_band_has_no_entropy(h):
    # one sign fills every mode, the other none
    assert finite_chain_correlation_entropy(FiniteChainSpec(6, 3, h)) == 0.0


@pytest.mark.parametrize('alpha', [1.0, 2.0])
def test_entropy_is_even_in_field(alpha):
    up = ed_ground_state_entropy(FiniteChainSpec(8, 3, 0.7), alpha)
    down = ed_ground_state_entropy(FiniteChainSpec(8, 3, -0.7), alpha)
    assert abs(up.entropy_partial_trace - down.entropy_partial_trace) < 1e-10


def _centered(n_sites, block_len, h):
    return FiniteChainSpec(n_sites, block_len, h, block_start=(n_sites - block_len) // 2)


def test_bulk_limit_within_1e_3():
    value = finite_chain_correlation_entropy(_centered(100000, 10, 0.0))
    expected = exact_entropy(ModelParams(h=0.0, L=10)).value
    assert abs(value - expected) < 1e-3


@pytest.mark.slow
@pytest.mark.parametrize('block_len', [5, 20])
def test_bulk_limit_within_1e_4(block_len):
    value = finite_chain_correlation_entropy(_centered(1000000, block_len, 0.0))
    expected = exact_entropy(ModelParams(h=0.0, L=block_len)).value
    assert abs(value - expected) < 1e-4
