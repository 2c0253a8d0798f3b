"""
Independent ground truth for xx_entropy
"""
from .ed_oracle import (
    FiniteChainSpec,
    OracleResult,
    chain_hamiltonian,
    reduced_density_matrix,
    ed_ground_state_entropy,
    finite_chain_correlation_entropy,
    free_fermion_ground_energy
)

__all__ = [
    'FiniteChainSpec',
    'OracleResult',
    'chain_hamiltonian',
    'reduced_density_matrix',
    'ed_ground_state_entropy',
    'finite_chain_correlation_entropy',
    'free_fermion_ground_energy'
]
