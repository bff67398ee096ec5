import math

import numpy as np
import pytest

from qinfo import measurement
from qinfo.exceptions import AllAmplitudesExcluded, NotNormalized, OutOfRange
from qinfo.matrix import validate_density
from qinfo.measurement import INTERFEROMETER_REDUCTION, ReductionMap
from qinfo.measures import TYPE1_PURE, information_report
from qinfo.sampling import make_rng
from qinfo.states import diagonal_mixture, epr_singlet, ghz, pure_density, qubit

UNIFORM = [1 / math.sqrt(2), 1 / math.sqrt(2)]


def scenario(photon=UNIFORM, alpha_sq=0.5, eraser=False):
    return measurement.interferometer_scenario(photon, alpha_sq, eraser=eraser)


def test_check_apparatus():
    assert measurement.check_apparatus(diagonal_mixture([0.3, 0.7]))
    assert measurement.check_apparatus(diagonal_mixture([1, 0]))
    assert not measurement.check_apparatus(pure_density(qubit(0.4, 0.2)))


def test_interferometer_scenario():
    s = scenario(alpha_sq=0.3)
    assert s.beta_sq == pytest.approx(0.7)
    assert s.eraser is False
    assert measurement.check_apparatus(measurement.apparatus_density(s))

    with pytest.raises(OutOfRange):
        measurement.interferometer_scenario(UNIFORM, 1.5)

    with pytest.raises(NotNormalized):
        measurement.interferometer_scenario(UNIFORM, 0.5, 0.6)

    with pytest.raises(OutOfRange):
        measurement.interferometer_scenario([1, 0, 0], 0.5)


def test_interferometer_before_balanced():
    compound, i_q_i, k_q_i = measurement.interferometer_before(scenario())

    assert compound.dim == 4
    assert abs(i_q_i - 1.0) < 1e-12
    assert abs(k_q_i - 0.5) < 1e-12
    validate_density(compound)


def test_interferometer_before_block_layout():
    compound, _, _ = measurement.interferometer_before(scenario(alpha_sq=0.3))
    rho_s = pure_density(UNIFORM).matrix

    assert np.allclose(compound.matrix[:2, :2], 0.3 * rho_s, atol=1e-15)
    assert np.allclose(compound.matrix[2:, 2:], 0.7 * rho_s, atol=1e-15)
    assert np.all(compound.matrix[:2, 2:] == 0)


def test_interferometer_before_degenerate_apparatus():
    photon = qubit(0.8)
    _, i_q_i, k_q_i = measurement.interferometer_before(scenario(photon, alpha_sq=1.0))

    assert abs(i_q_i - 2.0) < 1e-12
    assert abs(k_q_i - 4 * 0.8 * 0.2) < 1e-12


def test_interferometer_before_uneven_photon():
    _, _, k_q_i = measurement.interferometer_before(scenario(qubit(0.8)))
    assert abs(k_q_i - 0.32) < 1e-12


def test_reduction_map():
    rmap = ReductionMap({0: [2]}, n_apparatus=2, n_system=3)

    assert rmap.excluded_system_indices([]) == frozenset()
    assert rmap.excluded_system_indices([0]) == {2}
    assert rmap.excluded_system_indices([1]) == frozenset()
    assert rmap.is_fruitful()

    with pytest.raises(OutOfRange):
        ReductionMap({2: [0]}, n_apparatus=2, n_system=2)

    with pytest.raises(OutOfRange):
        ReductionMap({0: [5]}, n_apparatus=2, n_system=2)

    with pytest.raises(OutOfRange):
        rmap.excluded_system_indices([3])


def test_reduction_map_not_fruitful():
    rmap = ReductionMap({0: [0, 1]}, n_apparatus=2, n_system=2)
    assert not rmap.is_fruitful()


def test_apply_reduction():
    psi = measurement.apply_reduction(UNIFORM, INTERFEROMETER_REDUCTION, [])
    assert np.allclose(psi.amplitudes, UNIFORM)

    # Excluding way β excludes a₁
    psi = measurement.apply_reduction(UNIFORM, INTERFEROMETER_REDUCTION, [1])
    assert np.allclose(psi.amplitudes, [0, 1], atol=1e-15)

    uniform3 = np.full(3, 1 / math.sqrt(3))
    psi = measurement.apply_reduction(uniform3, ReductionMap({0: [2]}, 2, 3), [0])
    assert np.allclose(psi.amplitudes, [1 / math.sqrt(2), 1 / math.sqrt(2), 0], atol=1e-15)


def test_apply_reduction_excluding_everything():
    with pytest.raises(AllAmplitudesExcluded):
        measurement.apply_reduction([1, 0], INTERFEROMETER_REDUCTION, [1])


def test_reduce_density():
    rmap = ReductionMap({0: [2]}, 2, 3)
    rho = measurement.reduce_density(diagonal_mixture([0.2, 0.3, 0.5]), rmap, [0])
    assert np.allclose(rho.matrix, np.diag([0.4, 0.6, 0]))

    with pytest.raises(AllAmplitudesExcluded):
        measurement.reduce_density(diagonal_mixture([0, 0, 1]), rmap, [0])


@pytest.mark.parametrize("seed", range(10))
def test_which_way(seed):
    record = measurement.measure_which_way(scenario(), make_rng(seed))

    assert record.outcome_index in (0, 1)
    assert record.assumption2_satisfied
    assert record.post_report.i_q == pytest.approx(2.0, abs=1e-12)
    assert record.post_report.k_q == 0.0
    assert record.post_report.classification == TYPE1_PURE
    assert measurement.is_measurement_complete(record)


@pytest.mark.parametrize("photon", [UNIFORM, qubit(0.5)])
@pytest.mark.parametrize("seed", range(10))
def test_which_way_eraser(seed, photon):
    record = measurement.measure_which_way(scenario(photon, eraser=True), make_rng(seed))

    assert not record.assumption2_satisfied
    assert abs(record.post_report.k_q - 1.0) < 1e-12
    assert not measurement.is_measurement_complete(record)


def test_which_way_photon_in_eigenstate():
    # Only way 1 is possible, excluding way 0 removes the empty a₂
    s = measurement.interferometer_scenario([1, 0], 0.0)
    record = measurement.measure_which_way(s, make_rng(0))

    assert record.outcome_index == 1
    assert record.post_report.k_q == 0.0
    assert record.pre_report.k_q == 0.0


def test_interferometer_after():
    compound, i_q, k_q = measurement.interferometer_after(scenario(), 0)

    expected = np.zeros((4, 4))
    expected[1, 1] = 1
    assert np.allclose(compound.matrix, expected, atol=1e-15)
    assert i_q == pytest.approx(2.0, abs=1e-12)
    assert k_q == 0.0


def test_measure_first_qubit_ghz():
    for seed in range(5):
        record = measurement.measure_first_qubit(ghz(3), 3, make_rng(seed))

        assert record.pre_report.k_q == 1.5
        assert record.post_report.k_q == 0.0
        assert record.post_report.i_q == 3.0
        assert measurement.is_measurement_complete(record)
        assert not measurement.is_measurement_complete(
            record._replace(post_report=information_report(ghz(3))))


def test_measure_first_qubit_epr():
    record = measurement.measure_first_qubit(epr_singlet(), 2, make_rng(1))

    expected = np.zeros((4, 4))
    expected[1 + record.outcome_index, 1 + record.outcome_index] = 1
    assert np.array_equal(record.post_state.matrix, expected)

    with pytest.raises(OutOfRange):
        measurement.measure_first_qubit(epr_singlet(), 3, make_rng(1))
