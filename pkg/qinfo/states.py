"""
Constructors for the state families: pure states, diagonal mixtures, basis
changes, products, the EPR singlet, GHZ states and phase tagged ensembles of
identical photons.

Qubit basis convention: |0⟩ = (1, 0)ᵀ, |1⟩ = (0, 1)ᵀ. In tensor products the
first factor is the major index.
"""

import numpy as np

from qinfo import EnsembleSpec
from qinfo.exceptions import (DimensionMismatch, EmptyPhaseList, NegativeProbability,
                              NotNormalized, OutOfRange, ValidationError, ZeroVector)
from qinfo.matrix import (DEFAULT_TOLERANCE, DensityMatrix, UnitaryMatrix, diagonalizing_unitary_for_pure,
                          kron, unitary_conjugate)

# Change of basis from σ_z to σ_x eigenstates
HADAMARD = UnitaryMatrix(np.array([[1, 1], [1, -1]]) / np.sqrt(2))

GHZ_MIN_QUBITS = 2
GHZ_MAX_QUBITS = 6


class PureState:
    """A unit norm amplitude vector, use `pure_state` to construct."""

    def __init__(self, amplitudes):
        amplitudes = np.array(amplitudes, dtype=complex)
        amplitudes.setflags(write=False)
        self.amplitudes = amplitudes

    @property
    def dim(self):
        return len(self.amplitudes)

    def __repr__(self):
        return "PureState({})".format(np.array2string(self.amplitudes, precision=6))


def pure_state(amplitudes, tolerance=DEFAULT_TOLERANCE):
    if isinstance(amplitudes, PureState):
        return amplitudes

    amplitudes = np.array(amplitudes, dtype=complex).ravel()
    if len(amplitudes) == 0:
        raise ZeroVector(0.0, message="A pure state needs at least one amplitude")

    if not np.all(np.isfinite(amplitudes)):
        raise ValidationError(float(np.max(np.abs(amplitudes))), "finite entries")

    norm_sq = float(np.sum(np.abs(amplitudes) ** 2))
    if norm_sq == 0:
        raise ZeroVector(0.0)

    if abs(norm_sq - 1) > tolerance:
        raise NotNormalized(abs(norm_sq - 1))

    return PureState(amplitudes)


def qubit(a1_sq, phase=0.0):
    """A photon a₁|0⟩ + a₂|1⟩ with real a₁ = √a1_sq and a₂ = √(1 - a1_sq)·e^{iφ}."""
    if not 0 <= a1_sq <= 1:
        raise OutOfRange("a1_sq must be in [0, 1], got {}".format(a1_sq))

    return PureState([np.sqrt(a1_sq), np.sqrt(1 - a1_sq) * np.exp(1j * phase)])


def pure_density(psi):
    """ρ_ij = a_i a_j*"""
    a = pure_state(psi).amplitudes
    return DensityMatrix(np.outer(a, a.conj()))


def diagonal_mixture(probabilities, tolerance=DEFAULT_TOLERANCE):
    """The type 2 density matrix diag(p₁, ..., p_N)."""
    p = np.array(probabilities, dtype=float).ravel()
    if len(p) == 0:
        raise NotNormalized(1.0, message="At least one probability is required")

    if np.min(p) < 0:
        raise NegativeProbability(-np.min(p))

    if abs(np.sum(p) - 1) > tolerance:
        raise NotNormalized(abs(np.sum(p) - 1))

    return DensityMatrix(np.diag(p))


def rebasis(rho, u):
    """Represents rho relative to another measurement basis, U ρ U†."""
    return unitary_conjugate(rho, u)


def rebasis_x(rho_z):
    """Represents a qubit given in the σ_z eigenbasis in the σ_x eigenbasis."""
    if rho_z.dim != 2:
        raise DimensionMismatch("rebasis_x expects a qubit, got dimension {}".format(rho_z.dim))

    return unitary_conjugate(rho_z, HADAMARD)


def eigenbasis(psi):
    """Represents a pure state relative to the basis in which it is the first
    eigenstate, where it has no surplus knowledge."""
    return unitary_conjugate(pure_density(psi), diagonalizing_unitary_for_pure(psi))


def product(rho_a, rho_b):
    return kron(rho_a, rho_b)


def product_surplus_closed_form(a, b):
    """K_Q of the product of two pure qubits with amplitudes a and b."""
    a1, a2 = np.abs(a) ** 2
    b1, b2 = np.abs(b) ** 2
    return 4 * ((a1 * b1 + a2 * b2) * (a1 * b2 + a2 * b1) + 2 * a1 * a2 * b1 * b2)


def epr_singlet():
    """(|01⟩ - |10⟩)/√2 with respect to the σ_z eigenbasis."""
    m = np.zeros((4, 4))
    m[1:3, 1:3] = [[1, -1], [-1, 1]]
    return DensityMatrix(m / 2)


def ghz(n_qubits):
    """(|0…0⟩ + |1…1⟩)/√2, four entries of 1/2 in the corners."""
    if not GHZ_MIN_QUBITS <= n_qubits <= GHZ_MAX_QUBITS:
        raise OutOfRange("GHZ states are supported for {} to {} qubits, got {}".format(
            GHZ_MIN_QUBITS, GHZ_MAX_QUBITS, n_qubits))

    n = 2 ** n_qubits
    m = np.zeros((n, n))
    m[0, 0] = m[0, -1] = m[-1, 0] = m[-1, -1] = 0.5
    return DensityMatrix(m)


def uniform_superposition(dim):
    """The pure state with all N basis states at amplitude 1/√N."""
    return DensityMatrix(np.full((dim, dim), 1 / dim))


def equal_superposition(n_qubits):
    """All 2ⁿ basis states with equal amplitude, the state of maximal surplus."""
    return uniform_superposition(2 ** n_qubits)


def ensemble_spec(a1, a2, phases, tolerance=DEFAULT_TOLERANCE):
    phases = tuple(float(phi) for phi in phases)
    if not phases:
        raise EmptyPhaseList(0.0, message="An ensemble needs at least one member phase")

    if not np.all(np.isfinite([a1, a2, *phases])):
        raise ValidationError(float("nan"), "finite entries")

    if a1 < 0 or a2 < 0:
        raise ValidationError(-min(a1, a2), "nonnegative amplitude")

    norm_error = abs(a1 ** 2 + a2 ** 2 - 1)
    if norm_error > tolerance:
        raise NotNormalized(norm_error)

    return EnsembleSpec(float(a1), float(a2), phases)


def ensemble_density(spec):
    """
    The mean density matrix of n photons (a₁, a₂·e^{iφ_i}).

    Diagonal (a₁², a₂²), lower off-diagonal (a₁a₂/n)·Σ e^{iφ_i} and its
    conjugate above.
    """
    spec = ensemble_spec(*spec)
    n = len(spec.phases)
    coherence = spec.a1 * spec.a2 * np.sum(np.exp(1j * np.array(spec.phases))) / n

    return DensityMatrix([
        [spec.a1 ** 2, np.conj(coherence)],
        [coherence, spec.a2 ** 2],
    ])


def ensemble_closed_form(spec):
    """
    Returns (I_Q, K_Q) of an ensemble from the phase sums:

        I_Q = a₁⁴ + a₂⁴ + (2a₁²a₂²/n²) Σ_ij cos(φ_i - φ_j)
        K_Q = (2a₁²a₂²/n²) |Σ_i e^{iφ_i}|²

    Σ_ij cos(φ_i - φ_j) is evaluated as (Σ cos φ_i)² + (Σ sin φ_i)².
    """
    spec = ensemble_spec(*spec)
    phases = np.array(spec.phases)
    n = len(phases)

    cosine_sum = np.sum(np.cos(phases)) ** 2 + np.sum(np.sin(phases)) ** 2
    coherent = 2 * spec.a1 ** 2 * spec.a2 ** 2 * cosine_sum / n ** 2

    return spec.a1 ** 4 + spec.a2 ** 4 + coherent, coherent
