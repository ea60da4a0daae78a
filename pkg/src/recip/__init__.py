"""Exact tools for reciprocal linear systems: Bezoutians, McMillan degree,
extended Cauchy index, signature-symmetric realizations and storage-element
bounds for RLCT networks."""

from .bezoutian import BezoutianMatrix, bezoutian, cauchy_sweep, gamma_delta_bez
from .inertia import InertiaResult, inertia, sylvester_bounds_check
from .network import BoundsReport, NetworkData, element_bounds, network_realization, validate_network
from .polymat import Poly, PolyMatrix, coprime_decompose, det, normalrank, zeta
from .ratmfd import LeftMFD, gamma, is_proper, is_symmetric_tf, markov, mcmillan_degree
from .realization import (
    SignatureRealization, StateSpace, check_theorem9, minimal_signature_realization,
    transfer_function, verify_theorem5,
)

__all__ = [
    "BezoutianMatrix", "BoundsReport", "InertiaResult", "LeftMFD", "NetworkData", "Poly",
    "PolyMatrix", "SignatureRealization", "StateSpace", "bezoutian", "cauchy_sweep",
    "check_theorem9", "coprime_decompose", "det", "element_bounds", "gamma", "gamma_delta_bez",
    "inertia", "is_proper", "is_symmetric_tf", "markov", "mcmillan_degree",
    "minimal_signature_realization", "network_realization", "normalrank",
    "sylvester_bounds_check", "transfer_function", "validate_network", "verify_theorem5", "zeta",
]
