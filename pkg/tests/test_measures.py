import math

import numpy as np
import pytest

from qinfo import measures
from qinfo.exceptions import OutOfRange
from qinfo.measures import INTERMEDIATE, TYPE1_PURE, TYPE2_DIAGONAL
from qinfo.sampling import make_rng, random_amplitudes
from qinfo.states import (diagonal_mixture, ensemble_density, ensemble_spec, epr_singlet,
                          equal_superposition, ghz, product, pure_density, qubit)

UNIFORM = [1 / math.sqrt(2), 1 / math.sqrt(2)]


def test_total_capacity():
    assert measures.total_capacity(1) == 0.0
    assert measures.total_capacity(2) == 1.0
    assert measures.total_capacity(4) == 2.0
    assert measures.total_capacity(8) == 3.0

    with pytest.raises(OutOfRange):
        measures.total_capacity(0)


def test_quantum_information():
    assert measures.quantum_information(pure_density(qubit(0.3, 1.1))) == pytest.approx(1.0, abs=1e-12)
    assert measures.quantum_information(diagonal_mixture([0.5, 0.5])) == 0.5
    assert measures.quantum_information(diagonal_mixture([1, 0, 0, 0])) == 2.0


def test_classical_information():
    assert measures.classical_information(pure_density(UNIFORM)) == pytest.approx(0.5, abs=1e-15)
    assert measures.classical_information(diagonal_mixture([1, 0])) == 1.0
    assert measures.classical_information(epr_singlet()) == 1.0


def test_surplus_knowledge():
    rho = pure_density(qubit(0.2, 0.5))
    assert measures.surplus_knowledge(rho) == pytest.approx(2 * 0.2 * 0.8, abs=1e-12)

    assert measures.surplus_knowledge(epr_singlet()) == 1.0
    assert measures.surplus_knowledge(ghz(3)) == 1.5
    assert measures.surplus_knowledge(diagonal_mixture([0.1, 0.2, 0.7])) == 0.0


def test_surplus_knowledge_is_at_most_half_for_qubits():
    rng = make_rng(11)
    for _ in range(100):
        rho = pure_density(random_amplitudes(2, rng))
        assert measures.surplus_knowledge(rho) <= 0.5 + 1e-12


def test_interaction_information():
    pure_s = pure_density(qubit(0.3))
    pure_m = pure_density(qubit(0.6, 1.0))
    assert measures.interaction_information(pure_s, pure_m) == pytest.approx(2.0, abs=1e-12)

    mixed = diagonal_mixture([0.5, 0.5])
    assert measures.interaction_information(mixed, mixed) == 0.5


def test_interaction_information_with_apparatus():
    rho_s = pure_density(qubit(0.3))
    rho_m = diagonal_mixture([0.7, 0.3])

    i_m = measures.quantum_information(rho_m)
    value = measures.interaction_information(rho_s, rho_m)

    assert value == pytest.approx(i_m * (1 + 1 / 1), abs=1e-12)
    assert value < 2.0


def test_classify():
    assert measures.classify(pure_density(qubit(0.4, 0.3))) == TYPE1_PURE
    assert measures.classify(diagonal_mixture([0.3, 0.7])) == TYPE2_DIAGONAL

    spec = ensemble_spec(*UNIFORM, [0.0, 1.0, 2.5])
    assert measures.classify(ensemble_density(spec)) == INTERMEDIATE


def test_classify_pure_basis_state():
    # Both diagonal and pure, pure takes precedence
    assert measures.classify(diagonal_mixture([1, 0])) == TYPE1_PURE
    assert measures.classify(ghz(4)) == TYPE1_PURE


def test_is_classical():
    assert measures.is_classical(pure_density(UNIFORM))
    assert measures.is_classical(diagonal_mixture([0.5, 0.5]))

    # K_Q = 1 exactly is on the wrong side of the strict threshold
    assert not measures.is_classical(epr_singlet())
    assert not measures.is_classical(ghz(3))


def test_threshold_ignores_rounding():
    assert not measures.below_threshold(1.0)
    assert not measures.below_threshold(0.9999999999999996)
    assert not measures.below_threshold(1.0000000000000004)
    assert measures.below_threshold(1.0 - 1e-9)
    assert measures.below_threshold(0.5)


def test_uniform_photon_with_eigenstate_partner():
    # Both constructions have K_Q = 1 up to rounding and must agree
    for photon in (UNIFORM, qubit(0.5)):
        rho = product(pure_density(photon), pure_density([1, 0]))
        k_q = measures.surplus_knowledge(rho)

        assert abs(k_q - 1.0) < 1e-12
        assert not measures.is_classical(rho)
        assert not measures.information_report(rho).is_classical


def test_max_surplus():
    assert measures.max_surplus(1) == 0.5
    assert measures.max_surplus(2) == 1.5
    assert measures.max_surplus(3) == 2.625

    with pytest.raises(OutOfRange):
        measures.max_surplus(0)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_max_surplus_matches_equal_superposition(n):
    k_q = measures.surplus_knowledge(equal_superposition(n))
    assert abs(k_q - measures.max_surplus(n)) < 1e-12


def test_information_report():
    report = measures.information_report(ghz(3), label="ghz")

    assert report.capacity_c == 3.0
    assert report.i_q == 3.0
    assert report.k_q == 1.5
    assert report.i_tilde == 1.5
    assert report.purity == 1.0
    assert report.classification == TYPE1_PURE
    assert report.is_classical is False


def test_information_report_split():
    rng = np.random.default_rng(3)
    spec = ensemble_spec(0.6, 0.8, rng.uniform(0, 2 * np.pi, 5))
    report = measures.information_report(ensemble_density(spec))

    assert abs(report.i_q - report.i_tilde - report.k_q) < 1e-12
