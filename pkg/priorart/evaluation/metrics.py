"""
Recall and PRES (patent retrieval evaluation score) of ranked result lists,
and the per-topic and mean metric report of a run.
"""


import json
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

import numpy as np


__all__ = ["TopicOutcome", "TopicRow", "MetricReport", "recall_at", "pres_at",
           "pres_original", "outcome_from_results", "evaluate_run"]


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TopicOutcome:
    """Ranks at which the relevant families of a topic were retrieved.

    Parameters
    ----------
    topic_doc_id : `str`
        Topic document.
    ranks_of_relevant : `tuple` [`int`]
        Distinct 1-based ranks, at most ``n_max``, of the retrieved relevant
        families; stored ascending.
    n : `int`
        Number of relevant families.
    n_max : `int`
        Evaluation cut-off.

    Raises
    ------
    ValueError
        When ranks repeat, fall outside ``[1, n_max]`` or outnumber ``n``.
    """
    topic_doc_id: str
    ranks_of_relevant: Tuple[int, ...]
    n: int
    n_max: int

    def __post_init__(self):
        ranks = tuple(sorted(self.ranks_of_relevant))
        object.__setattr__(self, "ranks_of_relevant", ranks)

        if self.n_max < 1:
            raise ValueError(f"n_max must be positive, got {self.n_max}.")
        if len(set(ranks)) != len(ranks):
            raise ValueError(f"{self.topic_doc_id}: ranks of relevant families repeat: {ranks}.")
        if any(r < 1 or r > self.n_max for r in ranks):
            raise ValueError(f"{self.topic_doc_id}: ranks must lie in [1, {self.n_max}], got {ranks}.")
        if len(ranks) > self.n:
            raise ValueError(f"{self.topic_doc_id}: {len(ranks)} relevant retrieved but only {self.n} exist.")

    @property
    def nR(self):
        """Number of relevant families retrieved."""
        return len(self.ranks_of_relevant)


def _checkJudged(outcome):
    if outcome.n < 1:
        raise ValueError(f"Topic {outcome.topic_doc_id} has no relevant families.")


def recall_at(outcome):
    """Fraction of the relevant families retrieved within the cut-off.

    Raises
    ------
    ValueError
        When the topic has no relevant families.
    """
    _checkJudged(outcome)
    return outcome.nR / outcome.n


def _pres(outcome, sumOfRanks):
    n = outcome.n
    return 1.0 - (sumOfRanks / n - (n + 1) / 2) / outcome.n_max


def pres_at(outcome):
    """PRES at the cut-off.

    Relevant families that were not retrieved are placed after the cut-off,
    the ``i``-th relevant family at rank ``n_max + n - (i - nR - 1)``, so that
    the score stays within ``[0, recall]``.

    Raises
    ------
    ValueError
        When the topic has no relevant families.
    """
    _checkJudged(outcome)
    n, nR = outcome.n, outcome.nR
    missing = sum(outcome.n_max + n - (i - nR - 1) for i in range(nR + 1, n + 1))
    return _pres(outcome, sum(outcome.ranks_of_relevant) + missing)


def pres_original(outcome):
    """PRES with the missing rank sum ``nR (n_max + n) - nR (nR - 1) / 2``.

    Not bounded to ``[0, 1]``: with nothing retrieved it exceeds 1. Kept to
    compare against `pres_at`.
    """
    _checkJudged(outcome)
    nR = outcome.nR
    sumOfRanks = sum(outcome.ranks_of_relevant) + nR * (outcome.n_max + outcome.n) - nR * (nR - 1) / 2
    return _pres(outcome, sumOfRanks)


def outcome_from_results(results, topic, n_max):
    """Finds the relevant families among the first ``n_max`` results.

    A family listed more than once counts at its best rank only.

    Parameters
    ----------
    results : `list` [`search.searcher.SearchResult`]
        Ranked results of the topic.
    topic : `corpus.models.TopicCase`
        Topic and its relevant families.
    n_max : `int`
        Cut-off.

    Returns
    -------
    outcome : `TopicOutcome`
        Outcome of the topic.
    """
    bestRanks = {}
    for result in sorted(results, key=lambda r: r.rank):
        if result.rank <= n_max and result.family_id in topic.relevant_family_ids:
            bestRanks.setdefault(result.family_id, result.rank)
    return TopicOutcome(topic.topic_doc_id, tuple(sorted(set(bestRanks.values()))), topic.n, n_max)


@dataclass(frozen=True)
class TopicRow:
    topic_doc_id: str
    n: int
    retrieved: int
    recall: float
    pres: float
    emptyQuery: bool = False

    def toDict(self):
        return {
            "topic_doc_id": self.topic_doc_id,
            "n": self.n,
            "retrieved": self.retrieved,
            "recall": self.recall,
            "pres": self.pres,
            "empty_query": self.emptyQuery,
        }


@dataclass(frozen=True)
class MetricReport:
    """Per-topic and mean Recall and PRES of a run.

    Attributes
    ----------
    rows : `list` [`TopicRow`]
        One row per topic, in topic order.
    n_max : `int`
        Cut-off of both metrics.
    metadata : `dict`
        Description of the run: system, method, parameters, keyword count.
    """
    rows: List[TopicRow]
    n_max: int
    metadata: Dict = field(default_factory=dict)

    @property
    def meanRecall(self):
        return float(np.mean([r.recall for r in self.rows])) if self.rows else 0.0

    @property
    def meanPres(self):
        return float(np.mean([r.pres for r in self.rows])) if self.rows else 0.0

    def perTopic(self, metric):
        """Per-topic values of ``recall`` or ``pres``, in topic order."""
        return [getattr(r, metric) for r in self.rows]

    def toDict(self):
        return {
            "metadata": dict(self.metadata),
            "n_max": self.n_max,
            "num_topics": len(self.rows),
            "mean": {f"recall@{self.n_max}": self.meanRecall, f"pres@{self.n_max}": self.meanPres},
            "topics": [r.toDict() for r in self.rows],
        }

    def toJson(self):
        return json.dumps(self.toDict(), indent=2, sort_keys=True) + "\n"


def evaluate_run(runs, topics, n_max, metadata=None, emptyQueries=()):
    """Evaluates a run against relevance judgments.

    Parameters
    ----------
    runs : `dict` [`str`, `list` [`search.searcher.SearchResult`]]
        Results by topic document; topics without results score 0.
    topics : `list` [`corpus.models.TopicCase`]
        Judged topics.
    n_max : `int`
        Cut-off.
    metadata : `dict` or `None`, optional
        Run description stored in the report.
    emptyQueries : `iterable` [`str`], optional
        Topics whose query was empty, flagged in the report.

    Returns
    -------
    report : `MetricReport`
        The report.
    """
    empty = set(emptyQueries)
    rows = []
    for topic in topics:
        outcome = outcome_from_results(runs.get(topic.topic_doc_id, []), topic, n_max)
        rows.append(TopicRow(topic.topic_doc_id, topic.n, outcome.nR, recall_at(outcome), pres_at(outcome),
                             topic.topic_doc_id in empty))
    return MetricReport(rows, n_max, dict(metadata or {}))
