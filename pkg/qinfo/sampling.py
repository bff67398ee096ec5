"""
Seeded randomness.

Every random draw in qinfo goes through a numpy Generator built from a
SeedSequence. Independent streams (sweep trials, concurrent measurements) are
derived from a master seed and an index, so results do not depend on the
order in which streams are consumed.
"""

import numpy as np

from qinfo.exceptions import NegativeProbability, NotNormalized
from qinfo.matrix import DensityMatrix, UnitaryMatrix, as_array

PROBABILITY_TOLERANCE = 1e-10


def make_rng(seed):
    """Returns a Generator for a seed, passing Generators through untouched."""
    if isinstance(seed, np.random.Generator):
        return seed

    return np.random.default_rng(np.random.SeedSequence(seed))


def spawn_rng(seed, index):
    """Returns the independent stream number `index` of a master seed."""
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(index,)))


def sample_outcome(probabilities, rng):
    """Draws an outcome index j with probability p_j.

    probabilities may be a sequence or a diagonal density matrix, in which
    case its diagonal is used.
    """
    if isinstance(probabilities, DensityMatrix):
        probabilities = np.diag(as_array(probabilities)).real

    p = np.asarray(probabilities, dtype=float)
    if np.min(p) < -PROBABILITY_TOLERANCE:
        raise NegativeProbability(-np.min(p))

    if abs(np.sum(p) - 1) > PROBABILITY_TOLERANCE:
        raise NotNormalized(abs(np.sum(p) - 1))

    cumulative = np.cumsum(np.clip(p, 0, None))
    u = make_rng(rng).random() * cumulative[-1]
    index = int(np.searchsorted(cumulative, u, side="right"))

    return min(index, len(p) - 1)


def random_phases(n, rng, spread=1.0):
    """n phases drawn uniformly from [0, 2π·spread). spread = 0 gives equal phases."""
    return make_rng(rng).uniform(0, 2 * np.pi, size=n) * spread


def random_amplitudes(dim, rng):
    rng = make_rng(rng)
    z = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return z / np.linalg.norm(z)


def random_unitary(dim, rng):
    """Haar distributed unitary from the QR decomposition of a Ginibre matrix."""
    rng = make_rng(rng)
    z = (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    diagonal = np.diag(r)
    return UnitaryMatrix(q * (diagonal / np.abs(diagonal)))


def random_density(dim, rng, rank=None):
    """Random density matrix G G† / tr(G G†) with G a dim × rank Ginibre matrix."""
    rng = make_rng(rng)
    rank = rank or dim
    g = rng.standard_normal((dim, rank)) + 1j * rng.standard_normal((dim, rank))
    m = g @ g.conj().T
    m = (m + m.conj().T) / 2
    return DensityMatrix(m / np.trace(m).real)
