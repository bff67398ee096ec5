"""
Named, parameterized experiments reproducing the worked examples, and the
random phase decoherence sweep.

Every scenario returns a ScenarioResult holding labeled information reports,
derived values and cross checks of closed form expressions against the
matrix level computation.
"""

import math

from collections import namedtuple

import numpy as np

from qinfo import EnsembleSpec
from qinfo.exceptions import AllAmplitudesExcluded, BadParameter, UnknownScenario
from qinfo.logging import log_debug
from qinfo.matrix import KEEP_FIRST, as_array, partial_trace
from qinfo.measurement import (interferometer_before, interferometer_scenario, measure_first_qubit,
                               measure_which_way, is_measurement_complete)
from qinfo.measures import (CLASSIFY_TOLERANCE, information_report, interaction_information, max_surplus,
                            quantum_information, surplus_knowledge, total_capacity)
from qinfo.sampling import make_rng, random_phases, spawn_rng
from qinfo.states import (PureState, diagonal_mixture, eigenbasis, ensemble_closed_form, ensemble_density,
                          ensemble_spec, epr_singlet, equal_superposition, ghz, product,
                          product_surplus_closed_form, pure_density, qubit, rebasis_x,
                          uniform_superposition)

CHECK_TOLERANCE = 1e-12

LabeledReport = namedtuple("LabeledReport", ["label", "report"])

ScenarioResult = namedtuple("ScenarioResult", [
    "scenario_name",
    "parameters",
    "reports",
    "derived_values",
    "checks",
    "notes",
])

SweepStatistics = namedtuple("SweepStatistics", [
    "a1_sq",
    "n_members",
    "trials",
    "seed",
    "spread",
    "mean_i_q",
    "mean_k_q",
    "std_i_q",
    "std_k_q",
    "theoretical_mean_excess",
])


class CrossCheck(namedtuple("CrossCheck", ["name", "closed_form", "computed", "tolerance"])):
    """A closed form value next to its matrix computed counterpart."""

    @property
    def ok(self):
        return abs(self.closed_form - self.computed) <= self.tolerance


# name, default value (its type is the parameter type), and the accepted range
# or, for string parameters, the accepted choices
Param = namedtuple("Param", ["name", "default", "minimum", "maximum", "choices"])
Param.__new__.__defaults__ = (None, None, None)

Scenario = namedtuple("Scenario", ["name", "description", "params", "sampling", "run"])


class ResultBuilder:
    def __init__(self, name, parameters, tolerance=CLASSIFY_TOLERANCE):
        self.name = name
        self.parameters = parameters
        self.tolerance = tolerance
        self.reports = []
        self.derived_values = {}
        self.checks = []
        self.notes = []

    def report(self, label, rho):
        report = information_report(rho, self.tolerance, label=label)
        self.reports.append(LabeledReport(label, report))
        return report

    def derived(self, name, value):
        self.derived_values[name] = float(value)

    def check(self, name, closed_form, computed, tolerance=CHECK_TOLERANCE):
        self.checks.append(CrossCheck(name, float(closed_form), float(computed), tolerance))

    def note(self, text):
        self.notes.append(text)

    def build(self):
        return ScenarioResult(self.name, dict(self.parameters), list(self.reports),
                              dict(self.derived_values), list(self.checks), list(self.notes))


def failed_checks(result):
    return [check for check in result.checks if not check.ok]


# -- Scenarios -----------------------------------------------------------------


def single_photon(r, a1_sq, phase):
    psi = qubit(a1_sq, phase)
    product_sq = a1_sq * (1 - a1_sq)

    z = r.report("z-basis", pure_density(psi))
    r.report("x-basis", rebasis_x(pure_density(psi)))
    eigen = r.report("eigenbasis", eigenbasis(psi))

    r.derived("k_q_bound", 0.5)
    r.check("i_q", 1.0, z.i_q)
    r.check("k_q = 2|a1 a2|^2", 2 * product_sq, z.k_q)
    r.check("k_q eigenbasis", 0.0, eigen.k_q)
    r.note("A qubit always has K_Q <= 1/2 < 1 and counts as classical.")


def rebasis(r, a1_sq, phase):
    psi = qubit(a1_sq, phase)
    a1, a2 = psi.amplitudes
    rho_z = pure_density(psi)
    rho_x = rebasis_x(rho_z)

    s, d = a1 + a2, a1 - a2
    by_hand = np.array([
        [abs(s) ** 2, s * np.conj(d)],
        [np.conj(s) * d, abs(d) ** 2],
    ]) / 2

    z = r.report("z-basis", rho_z)
    x = r.report("x-basis", rho_x)

    r.derived("k_q_z", z.k_q)
    r.derived("k_q_x", x.k_q)
    r.check("rho_x entrywise deviation", 0.0, np.max(np.abs(as_array(rho_x) - by_hand)))
    r.check("purity preserved", z.purity, x.purity)
    r.check("k_q_x = |a1+a2|^2 |a1-a2|^2 / 2", abs(s) ** 2 * abs(d) ** 2 / 2, x.k_q)
    r.note("I_Q is the same in both bases, K_Q depends on the measurement basis.")


def product_pair(r, a1_sq, b1_sq, phase_a, phase_b):
    a, b = qubit(a1_sq, phase_a), qubit(b1_sq, phase_b)
    rho_a = pure_density(a)

    both = r.report("product", product(rho_a, pure_density(b)))
    eigen = r.report("product with |0>", product(rho_a, pure_density([1, 0])))

    r.derived("k_q_bound", max_surplus(2))
    r.check("i_q", 2.0, both.i_q)
    r.check("k_q closed form", product_surplus_closed_form(a.amplitudes, b.amplitudes), both.k_q)
    r.check("k_q = 4|a1 a2|^2 with b in eigenstate", 4 * a1_sq * (1 - a1_sq), eigen.k_q)


def max_surplus_scenario(r, n):
    report = r.report("equal amplitudes", equal_superposition(n))
    r.check("k_q = n(1 - 1/2^n)", max_surplus(n), report.k_q)
    r.check("i_q", n, report.i_q)


def epr(r):
    rho = epr_singlet()
    report = r.report("singlet", rho)
    r.report("qubit 1", partial_trace(rho, (2, 2), KEEP_FIRST))

    r.check("i_q", 2.0, report.i_q)
    r.check("k_q", 1.0, report.k_q)
    r.check("i_tilde", 1.0, report.i_tilde)
    r.note("K_Q = 1 is not below the classicality threshold, one measurement "
           "on a qubit makes the pair classical (see entangled-measurement).")


def ghz_scenario(r, n):
    report = r.report("ghz", ghz(n))

    r.check("i_q", n, report.i_q)
    r.check("k_q", n / 2, report.k_q)
    r.check("i_tilde", n / 2, report.i_tilde)
    r.check("i_q = k_q + i_tilde", report.i_q, report.k_q + report.i_tilde)


def ensemble(r, a1_sq, n, spread, rng):
    spec = ensemble_spec(math.sqrt(a1_sq), math.sqrt(1 - a1_sq), random_phases(n, rng, spread))
    report = r.report("ensemble", ensemble_density(spec))
    closed_i, closed_k = ensemble_closed_form(spec)

    r.derived("single_photon_k_q", 2 * a1_sq * (1 - a1_sq))
    r.derived("decoherent_i_q", a1_sq ** 2 + (1 - a1_sq) ** 2)
    r.check("i_q from phase sums", closed_i, report.i_q)
    r.check("k_q from phase sums", closed_k, report.k_q)


def two_photon_ensemble(r, a1_sq, phi):
    a2_sq = 1 - a1_sq
    product_sq = a1_sq * a2_sq
    spec = ensemble_spec(math.sqrt(a1_sq), math.sqrt(a2_sq), [0.0, phi])

    report = r.report("two photons", ensemble_density(spec))
    single = r.report("single photon", pure_density(qubit(a1_sq)))

    r.derived("printed_k_q", product_sq / 4 * (1 + math.cos(phi)))
    r.derived("printed_i_q", a1_sq ** 2 + a2_sq ** 2 + product_sq / 2 * (1 + math.cos(phi)))
    r.check("k_q = |a1 a2|^2 (1 + cos phi)", product_sq * (1 + math.cos(phi)), report.k_q)
    r.check("i_q = a1^4 + a2^4 + |a1 a2|^2 (1 + cos phi)",
            a1_sq ** 2 + a2_sq ** 2 + product_sq * (1 + math.cos(phi)), report.i_q)

    if phi == 0:
        r.check("k_q equals single photon at phi = 0", single.k_q, report.k_q)

    r.note("The matrix level values differ from the printed two photon formulas "
           "(printed_k_q, printed_i_q), which contradict the coherent case: at phi = 0 "
           "the ensemble matrix equals the single photon matrix.")


def interferometer(r, alpha_sq, a1_sq, phase):
    s = interferometer_scenario(qubit(a1_sq, phase), alpha_sq)
    compound, i_q_i, k_q_i = interferometer_before(s)
    product_sq = a1_sq * (1 - a1_sq)
    fourth_powers = alpha_sq ** 2 + (1 - alpha_sq) ** 2

    photon = r.report("photon", pure_density(s.photon))
    r.report("apparatus", diagonal_mixture([s.alpha_sq, s.beta_sq]))
    r.report("compound", compound)

    r.derived("i_q_i", i_q_i)
    r.derived("k_q_i", k_q_i)
    r.check("i_q_i = 2(alpha^4 + beta^4)", 2 * fourth_powers, i_q_i)
    r.check("k_q_i = 4(alpha^4 + beta^4)|a1 a2|^2", 4 * fourth_powers * product_sq, k_q_i)
    r.check("k_q_i = i_q_i * k_q(photon)", i_q_i * photon.k_q, k_q_i)

    if s.alpha_sq in (0.0, 1.0):
        r.note("Degenerate apparatus: no information is extracted from the photon.")


def _which_way(r, alpha_sq, a1_sq, phase, rng, eraser):
    s = interferometer_scenario(qubit(a1_sq, phase), alpha_sq, eraser=eraser)
    record = measure_which_way(s, rng)

    r.reports.append(LabeledReport("before", record.pre_report))
    r.reports.append(LabeledReport("after", record.post_report))
    r.derived("way", record.outcome_index)
    r.derived("measurement_complete", is_measurement_complete(record))
    return record


def which_way(r, alpha_sq, a1_sq, phase, rng):
    try:
        record = _which_way(r, alpha_sq, a1_sq, phase, rng, eraser=False)
    except AllAmplitudesExcluded as ex:
        compound, _, _ = interferometer_before(interferometer_scenario(qubit(a1_sq, phase), alpha_sq))
        r.report("before", compound)
        r.derived("measurement_complete", False)
        r.note("The photon has no amplitude in the way it was found in, this is no true "
               "measurement: {}".format(ex))
        return

    r.check("i_q after", 2.0, record.post_report.i_q)
    r.check("k_q after", 0.0, record.post_report.k_q, tolerance=0.0)
    r.note("The reduction removed the photon amplitude correlated with the excluded way.")


def eraser(r, alpha_sq, a1_sq, phase, rng):
    record = _which_way(r, alpha_sq, a1_sq, phase, rng, eraser=True)

    r.check("k_q after = 4|a1 a2|^2", 4 * a1_sq * (1 - a1_sq), record.post_report.k_q)
    r.note("The reduction postulate is violated: the way is fixed yet the photon "
           "amplitudes are untouched, so surplus knowledge is left in the photon.")


def interaction_cases(r, a1_sq, b1_sq, alpha_sq):
    rho_s = pure_density(qubit(a1_sq))
    rho_pure_m = pure_density(qubit(b1_sq))
    rho_m = diagonal_mixture([alpha_sq, 1 - alpha_sq])

    r.report("object", rho_s)
    r.report("apparatus", rho_m)

    c_s, c_m = total_capacity(rho_s.dim), total_capacity(rho_m.dim)

    case1 = interaction_information(rho_s, rho_pure_m)
    r.derived("case1", case1)
    r.check("case 1: both pure, C_S + C_M", c_s + c_m, case1)
    r.check("case 1: tr of the compound", quantum_information(product(rho_s, rho_pure_m)), case1)

    diag_s = diagonal_mixture([a1_sq, 1 - a1_sq])
    diag_m = diagonal_mixture([b1_sq, 1 - b1_sq])
    case2 = interaction_information(diag_s, diag_m)
    r.derived("case2", case2)
    r.check("case 2: both type 2, product law",
            (c_s + c_m) / (c_s * c_m) * quantum_information(diag_s) * quantum_information(diag_m), case2)

    case3 = interaction_information(rho_s, rho_m)
    i_m = quantum_information(rho_m)
    r.derived("case3", case3)
    r.check("case 3: I_Q^M (1 + C_S/C_M)", i_m * (1 + c_s / c_m), case3)

    if i_m < c_m:
        r.note("Case 3 stays below C_S + C_M: the apparatus takes information from "
               "the object, but not all of it.")


def qutrit_criterion(r):
    report = r.report("uniform qutrit", uniform_superposition(3))
    r.report("uniform qubit", equal_superposition(1))

    r.derived("qubit_k_q_bound", max_surplus(1))
    r.check("k_q = (2/3) log2 3", 2 / 3 * math.log2(3), report.k_q)
    r.note("Already in three dimensions K_Q can exceed one bit, a measurement is "
           "needed before the object counts as classical.")


def apparatus_scan(r, a1_sq, steps):
    product_sq = a1_sq * (1 - a1_sq)

    for alpha_sq in np.linspace(0, 1, steps):
        s = interferometer_scenario(qubit(a1_sq), float(alpha_sq))
        compound, i_q_i, k_q_i = interferometer_before(s)
        label = "alpha_sq={:.6g}".format(alpha_sq)
        fourth_powers = alpha_sq ** 2 + (1 - alpha_sq) ** 2

        r.report(label, compound)
        r.check("i_q_i at " + label, 2 * fourth_powers, i_q_i)
        r.check("k_q_i at " + label, 4 * fourth_powers * product_sq, k_q_i)

    r.derived("minimal_i_q_i", 1.0)
    r.derived("maximal_k_q_i", 4 * product_sq)
    r.note("Both I^I and K^I are smallest when both ways are equally likely.")


def entangled_measurement(r, state, n, rng):
    if state == "epr":
        rho, n = epr_singlet(), 2
        r.parameters["n"] = n
    else:
        rho = ghz(n)

    record = measure_first_qubit(rho, n, rng)

    r.reports.append(LabeledReport("before", record.pre_report))
    r.reports.append(LabeledReport("after", record.post_report))
    r.derived("outcome", record.outcome_index)
    r.derived("measurement_complete", is_measurement_complete(record))
    r.check("k_q after", 0.0, record.post_report.k_q, tolerance=0.0)
    r.check("i_q after", n, record.post_report.i_q)
    r.note("A single measurement of qubit 1 leaves the state classical with "
           "respect to the measured observable.")


AMPLITUDE = dict(minimum=0.0, maximum=1.0)

SCENARIOS = [
    Scenario(
        name="single-photon",
        description="Single photon in the z basis, x basis and its eigenbasis",
        params=[Param("a1_sq", 0.5, **AMPLITUDE), Param("phase", 0.0)],
        sampling=False,
        run=single_photon,
    ),
    Scenario(
        name="rebasis",
        description="Contextuality: a photon written relative to σ_z and σ_x",
        params=[Param("a1_sq", 0.8, **AMPLITUDE), Param("phase", 0.0)],
        sampling=False,
        run=rebasis,
    ),
    Scenario(
        name="product-pair",
        description="Product of two photons and its surplus knowledge",
        params=[Param("a1_sq", 0.5, **AMPLITUDE), Param("b1_sq", 0.5, **AMPLITUDE),
                Param("phase_a", 0.0), Param("phase_b", 0.0)],
        sampling=False,
        run=product_pair,
    ),
    Scenario(
        name="max-surplus",
        description="Maximal surplus knowledge n(1 - 1/2^n) of n qubits",
        params=[Param("n", 3, 1, 6)],
        sampling=False,
        run=max_surplus_scenario,
    ),
    Scenario(
        name="epr",
        description="EPR singlet",
        params=[],
        sampling=False,
        run=epr,
    ),
    Scenario(
        name="ghz",
        description="GHZ state of n qubits",
        params=[Param("n", 3, 2, 6)],
        sampling=False,
        run=ghz_scenario,
    ),
    Scenario(
        name="ensemble",
        description="Ensemble of n identical photons with random phases",
        params=[Param("a1_sq", 0.5, **AMPLITUDE), Param("n", 4, 1, 10 ** 6), Param("spread", 1.0, 0.0, 1.0)],
        sampling=True,
        run=ensemble,
    ),
    Scenario(
        name="two-photon-ensemble",
        description="Two identical photons with relative phase phi",
        params=[Param("a1_sq", 0.5, **AMPLITUDE), Param("phi", 0.0)],
        sampling=False,
        run=two_photon_ensemble,
    ),
    Scenario(
        name="interferometer",
        description="Photon and interferometer before the measurement",
        params=[Param("alpha_sq", 0.5, **AMPLITUDE), Param("a1_sq", 0.5, **AMPLITUDE), Param("phase", 0.0)],
        sampling=False,
        run=interferometer,
    ),
    Scenario(
        name="which-way",
        description="Which way measurement obeying the reduction postulate",
        params=[Param("alpha_sq", 0.5, **AMPLITUDE), Param("a1_sq", 0.5, **AMPLITUDE), Param("phase", 0.0)],
        sampling=True,
        run=which_way,
    ),
    Scenario(
        name="eraser",
        description="Which way measurement in a quantum eraser",
        params=[Param("alpha_sq", 0.5, **AMPLITUDE), Param("a1_sq", 0.5, **AMPLITUDE), Param("phase", 0.0)],
        sampling=True,
        run=eraser,
    ),
    Scenario(
        name="interaction-cases",
        description="Interaction information of pure and mixed pairs",
        params=[Param("a1_sq", 0.5, **AMPLITUDE), Param("b1_sq", 0.3, **AMPLITUDE),
                Param("alpha_sq", 0.7, **AMPLITUDE)],
        sampling=False,
        run=interaction_cases,
    ),
    Scenario(
        name="qutrit-criterion",
        description="Classicality criterion in two and three dimensions",
        params=[],
        sampling=False,
        run=qutrit_criterion,
    ),
    Scenario(
        name="apparatus-scan",
        description="Interferometer information over a grid of apparatus probabilities",
        params=[Param("a1_sq", 0.5, **AMPLITUDE), Param("steps", 5, 2, 101)],
        sampling=False,
        run=apparatus_scan,
    ),
    Scenario(
        name="entangled-measurement",
        description="Single measurement of qubit 1 of an EPR or GHZ state",
        params=[Param("state", "ghz", choices=["epr", "ghz"]), Param("n", 3, 2, 6)],
        sampling=True,
        run=entangled_measurement,
    ),
]


def find_scenario(name):
    scenario = next((s for s in SCENARIOS if s.name == name), None)
    if not scenario:
        raise UnknownScenario("Unknown scenario '{}', run `qinfo list-scenarios` to see all".format(name))

    return scenario


def _coerce(param, value):
    kind = type(param.default)

    try:
        if kind is int and isinstance(value, float):
            if not value.is_integer():
                raise ValueError(value)
            value = int(value)
        value = kind(value)
    except (TypeError, ValueError):
        raise BadParameter(param.name, "expected {}, got {!r}".format(kind.__name__, value))

    if kind is float and not math.isfinite(value):
        raise BadParameter(param.name, "must be finite")

    if param.choices and value not in param.choices:
        raise BadParameter(param.name, "must be one of: {}".format(", ".join(param.choices)))

    if param.minimum is not None and value < param.minimum:
        raise BadParameter(param.name, "must be at least {}".format(param.minimum))

    if param.maximum is not None and value > param.maximum:
        raise BadParameter(param.name, "must be at most {}".format(param.maximum))

    return value


def scenario_parameters(scenario, params):
    """Applies defaults and coerces given values to the parameter types."""
    params = params or {}
    names = [p.name for p in scenario.params]

    for key in params:
        if key not in names:
            raise BadParameter(key, "unknown parameter for scenario '{}'".format(scenario.name))

    return {p.name: _coerce(p, params.get(p.name, p.default)) for p in scenario.params}


def run_scenario(name, params=None, seed=0):
    """Runs a registered scenario. Sampling scenarios are deterministic per seed."""
    scenario = find_scenario(name)
    values = scenario_parameters(scenario, params)

    parameters = dict(values)
    kwargs = dict(values)
    if scenario.sampling:
        parameters["seed"] = seed
        kwargs["rng"] = make_rng(seed)

    log_debug("running scenario", name, parameters)

    builder = ResultBuilder(name, parameters)
    scenario.run(builder, **kwargs)
    return builder.build()


def describe_state(value, tolerance=CLASSIFY_TOLERANCE):
    """Builds an "info" result for a parsed state spec."""
    if isinstance(value, PureState):
        builder = ResultBuilder("info", {"kind": "pure", "dim": value.dim}, tolerance)
        builder.report("state", pure_density(value))
        builder.report("eigenbasis", eigenbasis(value))
    elif isinstance(value, EnsembleSpec):
        builder = ResultBuilder("info", {"kind": "ensemble", "n": len(value.phases)}, tolerance)
        report = builder.report("state", ensemble_density(value))
        closed_i, closed_k = ensemble_closed_form(value)
        builder.check("i_q from phase sums", closed_i, report.i_q)
        builder.check("k_q from phase sums", closed_k, report.k_q)
    else:
        builder = ResultBuilder("info", {"kind": "matrix", "dim": value.dim}, tolerance)
        builder.report("state", value)

    return builder.build()


def decoherence_sweep(a1_sq, n_members, trials, seed, spread=1.0):
    """
    Repeatedly builds an ensemble of n_members photons with phases drawn
    uniformly from [0, 2π·spread) and aggregates I_Q and K_Q over the trials.

    Each trial draws from its own stream derived from (seed, trial index).
    """
    if not 0 <= a1_sq <= 1:
        raise BadParameter("a1_sq", "must lie in [0, 1]")
    if n_members < 1:
        raise BadParameter("n", "must be at least 1")
    if trials < 1:
        raise BadParameter("trials", "must be at least 1")
    if not math.isfinite(spread) or spread < 0:
        raise BadParameter("spread", "must be finite and not negative")

    a1, a2 = math.sqrt(a1_sq), math.sqrt(1 - a1_sq)
    i_values = np.empty(trials)
    k_values = np.empty(trials)

    for trial in range(trials):
        phases = random_phases(n_members, spawn_rng(seed, trial), spread)
        rho = ensemble_density(ensemble_spec(a1, a2, phases))
        i_values[trial] = quantum_information(rho)
        k_values[trial] = surplus_knowledge(rho)

    log_debug("sweep done", trials, "trials of", n_members, "members")

    ddof = 1 if trials > 1 else 0
    return SweepStatistics(
        a1_sq=float(a1_sq),
        n_members=n_members,
        trials=trials,
        seed=seed,
        spread=float(spread),
        mean_i_q=float(np.mean(i_values)),
        mean_k_q=float(np.mean(k_values)),
        std_i_q=float(np.std(i_values, ddof=ddof)),
        std_k_q=float(np.std(k_values, ddof=ddof)),
        theoretical_mean_excess=2 * a1_sq * (1 - a1_sq) / n_members,
    )

