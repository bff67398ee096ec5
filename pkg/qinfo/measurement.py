"""
Measurement as interaction of a quantum object S with a type 2 apparatus M.

Only diagonal (type 2) density matrices can serve as apparatus. The reduction
postulate says that excluding an apparatus outcome j excludes a set of
correlated system components; a `ReductionMap` spells that correlation out.
"""

from collections import namedtuple

import numpy as np

from qinfo import InterferometerScenario
from qinfo.exceptions import AllAmplitudesExcluded, NotNormalized, OutOfRange
from qinfo.logging import log_debug, log_matrix
from qinfo.matrix import DensityMatrix, as_array, kron
from qinfo.measures import CLASSIFY_TOLERANCE, below_threshold, information_report
from qinfo.sampling import sample_outcome
from qinfo.states import diagonal_mixture, pure_density, pure_state

MeasurementRecord = namedtuple("MeasurementRecord", [
    "outcome_index",
    "pre_state",
    "post_state",
    "pre_report",
    "post_report",
    "assumption2_satisfied",
])


class ReductionMap:
    """
    For each apparatus outcome j, the system indices excluded together with j.

    correlations maps an apparatus index to an iterable of system indices.
    Apparatus indices without an entry exclude nothing.
    """

    def __init__(self, correlations, n_apparatus, n_system):
        self.n_apparatus = n_apparatus
        self.n_system = n_system
        self.correlations = {}

        for outcome, indices in correlations.items():
            if not 0 <= outcome < n_apparatus:
                raise OutOfRange("Apparatus outcome {} outside 0..{}".format(outcome, n_apparatus - 1))

            indices = frozenset(indices)
            if any(not 0 <= i < n_system for i in indices):
                raise OutOfRange("System index outside 0..{} in {}".format(n_system - 1, sorted(indices)))

            self.correlations[outcome] = indices

    def excluded_system_indices(self, excluded_outcomes):
        excluded = set()
        for outcome in excluded_outcomes:
            if not 0 <= outcome < self.n_apparatus:
                raise OutOfRange("Apparatus outcome {} outside 0..{}".format(
                    outcome, self.n_apparatus - 1))
            excluded |= self.correlations.get(outcome, frozenset())

        return frozenset(excluded)

    def is_fruitful(self):
        """True if observing any single outcome leaves a system index unexcluded."""
        for observed in range(self.n_apparatus):
            others = [j for j in range(self.n_apparatus) if j != observed]
            if len(self.excluded_system_indices(others)) >= self.n_system:
                return False

        return True

    def __repr__(self):
        pairs = ", ".join("{}->{}".format(k, sorted(v)) for k, v in sorted(self.correlations.items()))
        return "ReductionMap({})".format(pairs)


# Excluding way 2 (β) excludes a₁ and vice versa
INTERFEROMETER_REDUCTION = ReductionMap({0: [1], 1: [0]}, n_apparatus=2, n_system=2)


def first_qubit_reduction_map(n_qubits):
    """Outcome j of a σ_z measurement on qubit 1 is correlated with every basis
    component whose first bit is j."""
    n = 2 ** n_qubits
    half = n // 2
    return ReductionMap({0: range(half), 1: range(half, n)}, n_apparatus=2, n_system=n)


def check_apparatus(rho_m, tolerance=CLASSIFY_TOLERANCE):
    """True if rho_m can serve as a measuring apparatus, i.e. it is diagonal.

    Degenerate apparatus such as diag(1, 0) are accepted, they are diagonal
    even though they are also pure.
    """
    off_diagonal = as_array(rho_m) - np.diag(np.diag(as_array(rho_m)))
    return bool(np.max(np.abs(off_diagonal)) <= tolerance)


def interferometer_scenario(photon, alpha_sq, beta_sq=None, eraser=False, tolerance=1e-10):
    photon = pure_state(photon)
    if photon.dim != 2:
        raise OutOfRange("The interferometer photon must be a qubit, got dimension {}".format(photon.dim))

    if beta_sq is None:
        beta_sq = 1 - alpha_sq

    if not (0 <= alpha_sq <= 1 and 0 <= beta_sq <= 1):
        raise OutOfRange("Apparatus probabilities must lie in [0, 1], got {}, {}".format(alpha_sq, beta_sq))

    if abs(alpha_sq + beta_sq - 1) > tolerance:
        raise NotNormalized(abs(alpha_sq + beta_sq - 1))

    return InterferometerScenario(photon, float(alpha_sq), float(beta_sq), bool(eraser))


def apparatus_density(s):
    return diagonal_mixture([s.alpha_sq, s.beta_sq])


def _compound_values(compound):
    report = information_report(compound)
    return compound, report.i_q, report.k_q


def interferometer_before(s):
    """
    Returns the compound ρ_M ⊗ ρ_S of apparatus and photon before readout
    with its interaction information I^I and surplus knowledge K^I.

    The apparatus is the major index, which gives the block diagonal layout
    with blocks α²ρ_S and β²ρ_S.
    """
    compound = kron(apparatus_density(s), pure_density(s.photon))
    log_matrix("interferometer before", compound.matrix)
    return _compound_values(compound)


def apply_reduction(psi_s, reduction_map, excluded_outcomes):
    """Zeroes the system amplitudes correlated with the excluded apparatus
    outcomes and renormalizes the rest."""
    a = np.array(pure_state(psi_s).amplitudes)
    excluded = reduction_map.excluded_system_indices(excluded_outcomes)

    for i in excluded:
        a[i] = 0

    norm = np.linalg.norm(a)
    if norm == 0:
        raise AllAmplitudesExcluded(
            "Excluding outcomes {} leaves no system amplitude, this is no true measurement".format(
                sorted(excluded_outcomes)))

    log_debug("reduction excluded system indices", sorted(excluded))
    return pure_state(a / norm)


def reduce_density(rho, reduction_map, excluded_outcomes):
    """Density matrix form of `apply_reduction`: rows and columns of excluded
    system components are zeroed and the trace is restored to 1."""
    m = np.array(as_array(rho))
    excluded = sorted(reduction_map.excluded_system_indices(excluded_outcomes))

    m[excluded, :] = 0
    m[:, excluded] = 0

    remaining = np.trace(m).real
    if remaining <= 0:
        raise AllAmplitudesExcluded(
            "Excluding outcomes {} leaves no weight on the system".format(sorted(excluded_outcomes)))

    return DensityMatrix(m / remaining, rho.tolerance)


def interferometer_after(s, way, reduction_map=INTERFEROMETER_REDUCTION):
    """
    Returns the compound after the photon was found in `way`, with I^I and K^I.

    The apparatus collapses onto `way`. Unless the scenario is an eraser the
    reduction postulate then removes the photon amplitude correlated with the
    excluded way.
    """
    collapsed = np.zeros(2)
    collapsed[way] = 1

    photon = s.photon
    if not s.eraser:
        photon = apply_reduction(photon, reduction_map, [j for j in range(2) if j != way])

    compound = kron(diagonal_mixture(collapsed), pure_density(photon))
    log_matrix("interferometer after way {}".format(way), compound.matrix)
    return _compound_values(compound)


def measure_which_way(s, rng, reduction_map=INTERFEROMETER_REDUCTION):
    """Samples the way taken from diag(α², β²) and records the states and
    information before and after readout."""
    way = sample_outcome([s.alpha_sq, s.beta_sq], rng)
    log_debug("which way outcome", way, "eraser" if s.eraser else "")

    pre_state, _, _ = interferometer_before(s)
    post_state, _, _ = interferometer_after(s, way, reduction_map)

    return MeasurementRecord(
        outcome_index=way,
        pre_state=pre_state,
        post_state=post_state,
        pre_report=information_report(pre_state, label="which way pre"),
        post_report=information_report(post_state, label="which way post"),
        assumption2_satisfied=not s.eraser,
    )


def measure_first_qubit(rho, n_qubits, rng, reduction_map=None):
    """
    A single σ_z measurement of qubit 1 of an n qubit state.

    The apparatus distribution is the reduced diagonal of qubit 1. The
    observed outcome excludes the other one and with it, by default, all
    basis components whose first bit does not match.
    """
    if rho.dim != 2 ** n_qubits:
        raise OutOfRange("Expected dimension {} for {} qubits, got {}".format(
            2 ** n_qubits, n_qubits, rho.dim))

    reduction_map = reduction_map or first_qubit_reduction_map(n_qubits)

    diagonal = np.diag(as_array(rho)).real
    half = rho.dim // 2
    probabilities = [np.sum(diagonal[:half]), np.sum(diagonal[half:])]

    outcome = sample_outcome(probabilities, rng)
    # Observing `outcome` excludes the other one
    post_state = reduce_density(rho, reduction_map, [1 - outcome])

    return MeasurementRecord(
        outcome_index=outcome,
        pre_state=rho,
        post_state=post_state,
        pre_report=information_report(rho, label="qubit 1 pre"),
        post_report=information_report(post_state, label="qubit 1 post"),
        assumption2_satisfied=True,
    )


def is_measurement_complete(record):
    return below_threshold(record.post_report.k_q)
