"""
Paired sign-flip randomization test on per-topic metric values.
"""


import itertools
import logging

import numpy as np


__all__ = ["MAX_EXHAUSTIVE_TOPICS", "randomization_test"]


logger = logging.getLogger(__name__)


MAX_EXHAUSTIVE_TOPICS = 20
"""Largest number of topics for which all sign assignments are enumerated."""

_TOLERANCE = 1e-12
_CHUNK = 10000


def _pairedDifferences(perTopicA, perTopicB):
    a = np.asarray(perTopicA, dtype=np.float64)
    b = np.asarray(perTopicB, dtype=np.float64)
    if a.shape != b.shape or a.ndim != 1:
        raise ValueError(f"Paired samples must be flat and of equal length, got {len(perTopicA)} "
                         f"and {len(perTopicB)} values.")
    if a.size == 0:
        raise ValueError("Paired samples are empty.")
    return a - b


def randomization_test(per_topic_a, per_topic_b, iterations=100000, seed=0, exhaustive=False):
    """Two-sided paired randomization test of the mean difference.

    The sign of every topic's difference is flipped at random; the p-value
    is the share of flipped samples whose absolute mean difference is at
    least the observed one, counting the observed sample,
    ``(1 + count) / (1 + iterations)``. In exhaustive mode all ``2**n``
    assignments are enumerated instead and ``p = count / 2**n``.

    Parameters
    ----------
    per_topic_a, per_topic_b : `list` [`float`]
        Paired per-topic values of two systems.
    iterations : `int`, optional
        Number of random sign assignments.
    seed : `int`, optional
        Seed of the random generator.
    exhaustive : `bool`, optional
        Enumerate every sign assignment, for at most
        `MAX_EXHAUSTIVE_TOPICS` topics.

    Returns
    -------
    p : `float`
        p-value in ``(0, 1]``.

    Raises
    ------
    ValueError
        When the samples differ in length or are empty, ``iterations`` is not
        positive or exhaustive mode is asked for too many topics.
    """
    diffs = _pairedDifferences(per_topic_a, per_topic_b)
    n = diffs.size
    observed = abs(diffs.mean())

    if exhaustive:
        if n > MAX_EXHAUSTIVE_TOPICS:
            raise ValueError(f"Exhaustive test supports at most {MAX_EXHAUSTIVE_TOPICS} topics, got {n}.")
        signs = np.array(list(itertools.product((1.0, -1.0), repeat=n)))
        count = int(np.count_nonzero(np.abs(signs @ diffs) / n >= observed - _TOLERANCE))
        return count / len(signs)

    if iterations < 1:
        raise ValueError(f"Number of iterations must be positive, got {iterations}.")

    rng = np.random.default_rng(seed)
    count, remaining = 0, iterations
    while remaining:
        size = min(remaining, _CHUNK)
        signs = rng.integers(0, 2, size=(size, n)) * 2.0 - 1.0
        count += int(np.count_nonzero(np.abs(signs @ diffs) / n >= observed - _TOLERANCE))
        remaining -= size

    p = (1 + count) / (1 + iterations)
    logger.debug(f"Randomization test over {n} topics: observed |mean diff| {observed:.6f}, p={p:.6f}.")
    return p
