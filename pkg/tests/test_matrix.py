import numpy as np
import pytest

from qinfo import matrix
from qinfo.exceptions import (DimensionMismatch, NegativeEigenvalue, NotHermitian, NotNormalized, NotUnitary,
                              TraceNotOne, ZeroVector)
from qinfo.matrix import KEEP_FIRST, KEEP_SECOND, DensityMatrix, identity, kron, partial_trace, validate_density
from qinfo.measures import surplus_knowledge
from qinfo.states import epr_singlet, ghz, pure_density, qubit


def test_validate_density():
    rho = validate_density(np.eye(2) / 2)
    assert isinstance(rho, DensityMatrix)
    assert rho.dim == 2

    rho = validate_density(np.diag([1, 0]))
    assert np.array_equal(rho.matrix, np.diag([1, 0]))


def test_validate_density_trace():
    with pytest.raises(TraceNotOne) as ex:
        validate_density(np.diag([0.6, 0.6]))

    assert ex.value.invariant == "unit trace"
    assert ex.value.magnitude == pytest.approx(0.2)


def test_validate_density_hermitian():
    with pytest.raises(NotHermitian) as ex:
        validate_density([[0.5, 0.3], [0.1, 0.5]])

    assert ex.value.magnitude == pytest.approx(0.2)
    assert "hermitian" in str(ex.value)


def test_validate_density_negative_eigenvalue():
    with pytest.raises(NegativeEigenvalue) as ex:
        validate_density([[0.5, 0.6], [0.6, 0.5]])

    assert ex.value.magnitude == pytest.approx(0.1)

    with pytest.raises(NegativeEigenvalue):
        validate_density(np.diag([1.5, -0.5]))


def test_validate_density_shape():
    with pytest.raises(DimensionMismatch):
        validate_density(np.ones((2, 3)) / 2)

    with pytest.raises(DimensionMismatch):
        validate_density(np.eye(65) / 65)


def test_density_matrix_is_immutable():
    rho = validate_density(np.eye(2) / 2)

    with pytest.raises(ValueError):
        rho.matrix[0, 0] = 1


def test_validate_unitary():
    u = matrix.validate_unitary(np.array([[0, 1], [1, 0]]))
    assert u.dim == 2

    with pytest.raises(NotUnitary):
        matrix.validate_unitary(np.array([[1, 1], [0, 1]]))


def test_kron():
    basis = pure_density([1, 0])
    assert np.array_equal(kron(basis, basis).matrix, np.diag([1, 0, 0, 0]))

    a = pure_density(qubit(0.3, 0.4))
    b = pure_density(qubit(0.8, 1.2))
    ab = kron(a, b)

    assert ab.dim == 4
    # (i_a i_b, j_a j_b) = a_{i_a j_a} b_{i_b j_b}
    assert ab.matrix[1, 2] == pytest.approx(a.matrix[0, 1] * b.matrix[1, 0], abs=1e-15)
    assert ab.matrix[3, 0] == pytest.approx(a.matrix[1, 0] * b.matrix[1, 0], abs=1e-15)
    validate_density(ab)


def test_trace():
    assert matrix.trace(identity(4)) == 4 + 0j
    assert abs(matrix.trace(epr_singlet()) - 1) < 1e-15
    assert abs(matrix.trace(pure_density(qubit(0.3, 2.0))) - 1) < 1e-10


def test_purity():
    assert matrix.purity(validate_density(np.eye(2) / 2)) == 0.5
    assert matrix.purity(pure_density(qubit(0.3, 2.0))) == pytest.approx(1.0, abs=1e-12)


def test_unitary_conjugate():
    rho = pure_density(qubit(0.3, 0.7))

    same = matrix.unitary_conjugate(rho, identity(2))
    assert np.allclose(same.matrix, rho.matrix, atol=1e-15)

    with pytest.raises(DimensionMismatch):
        matrix.unitary_conjugate(rho, identity(3))


def test_diagonal_part():
    rho = validate_density(np.diag([0.3, 0.7]))
    assert np.array_equal(matrix.diagonal_part(rho).matrix, rho.matrix)

    uniform = pure_density([1 / np.sqrt(2), 1 / np.sqrt(2)])
    assert np.allclose(matrix.diagonal_part(uniform).matrix, np.diag([0.5, 0.5]), atol=1e-15)

    assert np.array_equal(matrix.diagonal_part(epr_singlet()).matrix, np.diag([0, 0.5, 0.5, 0]))


def test_off_diagonal_part():
    off = matrix.off_diagonal_part(epr_singlet())
    assert np.all(np.diag(off) == 0)
    assert off[1, 2] == -0.5


def test_partial_trace_product():
    rho_s = pure_density(qubit(0.3, 0.7))
    rho_m = validate_density(np.diag([0.2, 0.8]))
    compound = kron(rho_s, rho_m)

    assert np.allclose(partial_trace(compound, (2, 2), KEEP_FIRST).matrix, rho_s.matrix, atol=1e-12)
    assert np.allclose(partial_trace(compound, (2, 2), KEEP_SECOND).matrix, rho_m.matrix, atol=1e-12)


def test_partial_trace_entangled():
    reduced = partial_trace(epr_singlet(), (2, 2), KEEP_FIRST)
    assert np.array_equal(reduced.matrix, np.diag([0.5, 0.5]))

    # Trace out the last two qubits of GHZ(3)
    reduced = partial_trace(ghz(3), (2, 4), KEEP_FIRST)
    assert np.array_equal(reduced.matrix, np.diag([0.5, 0.5]))


def test_partial_trace_dimensions():
    with pytest.raises(DimensionMismatch):
        partial_trace(epr_singlet(), (2, 3), KEEP_FIRST)

    with pytest.raises(DimensionMismatch):
        partial_trace(epr_singlet(), (2, 2), 2)


def test_diagonalizing_unitary_basis_state():
    u = matrix.diagonalizing_unitary_for_pure([1, 0])
    assert np.allclose(u.matrix, np.eye(2), atol=1e-15)


def test_diagonalizing_unitary():
    psi = [1 / np.sqrt(2), 1 / np.sqrt(2)]
    u = matrix.diagonalizing_unitary_for_pure(psi)
    rotated = matrix.unitary_conjugate(pure_density(psi), u)

    assert np.allclose(rotated.matrix, np.diag([1, 0]), atol=1e-10)
    assert np.allclose(u.dagger[:, 0], psi, atol=1e-15)


def test_diagonalizing_unitary_generic():
    psi = [0.6, 0.48 + 0.64j]
    u = matrix.diagonalizing_unitary_for_pure(psi)
    rotated = matrix.unitary_conjugate(pure_density(psi), u)

    matrix.validate_unitary(u)
    assert surplus_knowledge(rotated) < 1e-20

    psi = np.full(5, 1 / np.sqrt(5)) * np.exp(1j * np.arange(5))
    u = matrix.diagonalizing_unitary_for_pure(psi)
    rotated = matrix.unitary_conjugate(pure_density(psi), u)
    assert np.allclose(rotated.matrix, np.diag([1, 0, 0, 0, 0]), atol=1e-10)


def test_diagonalizing_unitary_errors():
    with pytest.raises(ZeroVector):
        matrix.diagonalizing_unitary_for_pure([0, 0])

    with pytest.raises(NotNormalized):
        matrix.diagonalizing_unitary_for_pure([1, 1])
