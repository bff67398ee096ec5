"""
Dense complex matrices for small Hilbert spaces.

Density matrices and unitaries are thin wrappers around read-only complex128
numpy arrays. Instances are immutable, operations return new instances.
"""

import numpy as np

from qinfo.exceptions import (DimensionMismatch, NegativeEigenvalue, NotHermitian, NotNormalized,
                              NotUnitary, TraceNotOne, ValidationError, ZeroVector)
from qinfo.logging import log_debug

DEFAULT_TOLERANCE = 1e-10

# Eigenvalue check is only done for matrices up to this size
PSD_MAX_DIM = 8
PSD_TOLERANCE = 1e-8

MAX_DIM = 64


def _frozen(matrix):
    array = np.array(matrix, dtype=complex)
    array.setflags(write=False)
    return array


def as_array(m):
    """Returns the complex ndarray behind a matrix wrapper or array-like."""
    if isinstance(m, (DensityMatrix, UnitaryMatrix)):
        return m.matrix

    return np.asarray(m, dtype=complex)


class DensityMatrix:
    """
    A Hermitian, unit trace, positive semidefinite N×N matrix.

    Do not construct directly from untrusted data, use `validate_density`.
    """

    def __init__(self, matrix, tolerance=DEFAULT_TOLERANCE):
        self.matrix = _frozen(matrix)
        self.tolerance = tolerance

    @property
    def dim(self):
        return self.matrix.shape[0]

    def __repr__(self):
        return "DensityMatrix(dim={})".format(self.dim)


class UnitaryMatrix:
    """An N×N matrix with U U† = 1."""

    def __init__(self, matrix):
        self.matrix = _frozen(matrix)

    @property
    def dim(self):
        return self.matrix.shape[0]

    @property
    def dagger(self):
        return self.matrix.conj().T

    def __repr__(self):
        return "UnitaryMatrix(dim={})".format(self.dim)


def _check_square(m):
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatch("Expected a square matrix, got shape {}".format(m.shape))

    if not 1 <= m.shape[0] <= MAX_DIM:
        raise DimensionMismatch("Matrix dimension {} outside 1..{}".format(m.shape[0], MAX_DIM))


def validate_density(m, tolerance=DEFAULT_TOLERANCE):
    """Checks all density matrix invariants of `m` and wraps it.

    The eigenvalue check is only performed for N <= 8, larger matrices are
    checked by hermiticity, trace and diagonal sign.
    """
    m = as_array(m)
    _check_square(m)

    if not np.all(np.isfinite(m)):
        raise ValidationError(float("nan"), "finite entries")

    hermitian_error = np.max(np.abs(m - m.conj().T))
    if hermitian_error > tolerance:
        raise NotHermitian(hermitian_error)

    trace_error = abs(np.trace(m) - 1)
    if trace_error > tolerance:
        raise TraceNotOne(trace_error)

    diagonal = np.diag(m)
    if np.max(np.abs(diagonal.imag)) > tolerance:
        raise NotHermitian(np.max(np.abs(diagonal.imag)), "real diagonal")

    if np.min(diagonal.real) < -tolerance:
        raise NegativeEigenvalue(-np.min(diagonal.real), "nonnegative diagonal")

    if m.shape[0] <= PSD_MAX_DIM:
        smallest = np.min(np.linalg.eigvalsh((m + m.conj().T) / 2))
        if smallest < -PSD_TOLERANCE:
            raise NegativeEigenvalue(-smallest)

    return DensityMatrix(m, tolerance)


def validate_unitary(m, tolerance=DEFAULT_TOLERANCE):
    m = as_array(m)
    _check_square(m)

    error = np.max(np.abs(m @ m.conj().T - np.eye(m.shape[0])))
    if error > tolerance:
        raise NotUnitary(error)

    return UnitaryMatrix(m)


def identity(n):
    return UnitaryMatrix(np.eye(n))


def kron(a, b):
    """Kronecker product, the first factor is the major index."""
    return DensityMatrix(np.kron(as_array(a), as_array(b)), max(a.tolerance, b.tolerance))


def trace(m):
    m = as_array(m)
    _check_square(m)
    return complex(np.trace(m))


def purity(rho):
    """Returns tr ρ², computed as the sum of squared moduli of all entries."""
    return float(np.sum(np.abs(as_array(rho)) ** 2))


def unitary_conjugate(rho, u):
    """Returns U ρ U†."""
    if rho.dim != u.dim:
        raise DimensionMismatch("Cannot conjugate a {0}×{0} matrix by a {1}×{1} unitary".format(
            rho.dim, u.dim))

    result = u.matrix @ rho.matrix @ u.dagger
    # Restore exact hermiticity lost to rounding
    result = (result + result.conj().T) / 2

    return DensityMatrix(result, rho.tolerance)


def diagonal_part(rho):
    """Returns ρ̃, the matrix with the diagonal of ρ and zero off-diagonals."""
    return DensityMatrix(np.diag(np.diag(as_array(rho))), rho.tolerance)


def off_diagonal_part(rho):
    """Returns ρ - ρ̃ as a plain array, it is not a density matrix."""
    m = as_array(rho)
    return m - np.diag(np.diag(m))


KEEP_FIRST = 0
KEEP_SECOND = 1


def partial_trace(rho, dims, keep):
    """
    Traces out one factor of a bipartite system.

    dims is (N_a, N_b) with N_a·N_b equal to the dimension of rho, keep is
    KEEP_FIRST (0) or KEEP_SECOND (1) and selects the subsystem to retain.
    """
    n_a, n_b = dims
    if n_a * n_b != rho.dim:
        raise DimensionMismatch("Subsystem dimensions {}×{} do not match dimension {}".format(
            n_a, n_b, rho.dim))

    tensor = as_array(rho).reshape(n_a, n_b, n_a, n_b)

    if keep == KEEP_FIRST:
        reduced = np.einsum("ijkj->ik", tensor)
    elif keep == KEEP_SECOND:
        reduced = np.einsum("ijil->jl", tensor)
    else:
        raise DimensionMismatch("Invalid subsystem selector: {!r}".format(keep))

    return DensityMatrix(reduced, rho.tolerance)


def diagonalizing_unitary_for_pure(psi, tolerance=DEFAULT_TOLERANCE):
    """
    Returns a unitary U with U ρ_ψ U† = diag(1, 0, ..., 0).

    U is built deterministically from a Householder reflection which maps ψ
    to a multiple of the first basis vector, followed by a phase correction.
    The first column of U† is ψ itself.
    """
    a = np.array(getattr(psi, "amplitudes", psi), dtype=complex)
    norm = np.linalg.norm(a)

    if norm == 0:
        raise ZeroVector(0.0)

    if abs(norm ** 2 - 1) > tolerance:
        raise NotNormalized(abs(norm ** 2 - 1))

    a = a / norm
    n = len(a)

    head = abs(a[0])
    phase = a[0] / head if head > 0 else 1.0
    tail_sq = float(np.sum(np.abs(a[1:]) ** 2))

    # v = ψ - e^{iα}e₁; the first component uses 1 - |a₁| = tail/(1 + |a₁|)
    # to avoid cancellation when ψ is close to e₁.
    v = a.copy()
    v[0] = -phase * tail_sq / (1 + head)
    v_norm_sq = float(np.sum(np.abs(v) ** 2))

    reflection = np.eye(n, dtype=complex)
    if v_norm_sq > 0:
        reflection -= 2 * np.outer(v, v.conj()) / v_norm_sq

    correction = np.eye(n, dtype=complex)
    correction[0, 0] = np.conj(phase)

    log_debug("householder vector norm²", v_norm_sq)

    return UnitaryMatrix(correction @ reflection)
