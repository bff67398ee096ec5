"""
Information quantities of a density matrix.

All quantities are counted in bit. The capacity C is always derived from the
matrix dimension, C = log₂ N, so compound systems satisfy C_S + C_M = C_SM.
"""

import math

from collections import namedtuple

import numpy as np

from qinfo.exceptions import OutOfRange
from qinfo.logging import log_report
from qinfo.matrix import as_array, off_diagonal_part, purity

TYPE1_PURE = "Type1Pure"
TYPE2_DIAGONAL = "Type2Diagonal"
INTERMEDIATE = "Intermediate"

CLASSIFY_TOLERANCE = 1e-9

# Classically there is no information amount below one bit
CLASSICAL_THRESHOLD = 1.0

# K_Q within this distance of the threshold counts as reaching it
THRESHOLD_TOLERANCE = 1e-12

InformationReport = namedtuple("InformationReport", [
    "capacity_c",
    "i_q",
    "i_tilde",
    "k_q",
    "purity",
    "classification",
    "is_classical",
])


def total_capacity(n_dim):
    """Returns C = log₂ N, the number of yes/no questions fixing a state."""
    if n_dim < 1:
        raise OutOfRange("Dimension must be at least 1, got {}".format(n_dim))

    return math.log2(n_dim)


def quantum_information(rho):
    """I_Q = C tr ρ²"""
    return total_capacity(rho.dim) * purity(rho)


def classical_information(rho):
    """Ĩ_Q = C tr ρ̃², the share of I_Q held by the diagonal."""
    diagonal = np.diag(as_array(rho))
    return total_capacity(rho.dim) * float(np.sum(np.abs(diagonal) ** 2))


def surplus_knowledge(rho):
    """K_Q = C tr (ρ - ρ̃)², the share of I_Q held by the off-diagonals.

    Depends on the basis in which rho is written. Exactly zero when all
    off-diagonal entries are zero.
    """
    off_diagonal = off_diagonal_part(rho)
    return total_capacity(rho.dim) * float(np.sum(np.abs(off_diagonal) ** 2))


def interaction_information(rho_s, rho_m):
    """I_Q^I = (C_S + C_M) tr (ρ_S ⊗ ρ_M)², the information M carries about S."""
    capacity = total_capacity(rho_s.dim) + total_capacity(rho_m.dim)
    return capacity * purity(rho_s) * purity(rho_m)


def classify(rho, tolerance=CLASSIFY_TOLERANCE):
    """
    Returns TYPE1_PURE if ρ² = ρ, TYPE2_DIAGONAL if ρ is diagonal and
    INTERMEDIATE otherwise. Pure basis states are both and count as pure.
    """
    m = as_array(rho)

    if np.max(np.abs(m @ m - m)) <= tolerance:
        return TYPE1_PURE

    if np.max(np.abs(off_diagonal_part(m))) <= tolerance:
        return TYPE2_DIAGONAL

    return INTERMEDIATE


def below_threshold(k_q):
    """True if a surplus knowledge value is strictly below one bit. Values that
    only miss the threshold by rounding count as reaching it."""
    return k_q < CLASSICAL_THRESHOLD - THRESHOLD_TOLERANCE


def is_classical(rho):
    """True if the object counts as classical relative to the basis of rho,
    i.e. its surplus knowledge is strictly below one bit."""
    return below_threshold(surplus_knowledge(rho))


def max_surplus(n_qubits):
    """The largest K_Q of n two-state objects, n(1 - 1/2ⁿ)."""
    if n_qubits < 1:
        raise OutOfRange("Number of qubits must be at least 1, got {}".format(n_qubits))

    return n_qubits * (1 - 2.0 ** -n_qubits)


def information_report(rho, tolerance=CLASSIFY_TOLERANCE, label=None):
    k_q = surplus_knowledge(rho)

    report = InformationReport(
        capacity_c=total_capacity(rho.dim),
        i_q=quantum_information(rho),
        i_tilde=classical_information(rho),
        k_q=k_q,
        purity=purity(rho),
        classification=classify(rho, tolerance),
        is_classical=below_threshold(k_q),
    )

    if label:
        log_report(label, report)

    return report
