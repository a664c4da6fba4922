"""
Grid search of the claim-structure score hyperparameters and the sweep
over the number of keywords.
"""


import itertools
import logging
from dataclasses import dataclass, replace
from typing import List

from keywords.extractors import params_for


__all__ = ["KEYWORD_COUNTS", "GridPoint", "GridResult", "SweepPoint", "SweepResult",
           "grid_search", "keyword_sweep"]


logger = logging.getLogger(__name__)


KEYWORD_COUNTS = tuple(range(10, 101, 10))
"""Numbers of keywords tried by the sweep."""


@dataclass(frozen=True)
class GridPoint:
    alpha: float
    beta: float
    meanPres: float
    meanRecall: float

    def toDict(self):
        return {"alpha": self.alpha, "beta": self.beta, "pres": self.meanPres, "recall": self.meanRecall}


@dataclass(frozen=True)
class GridResult:
    """Every evaluated grid point and the best one.

    Attributes
    ----------
    alpha, beta : `float`
        Parameters with the highest mean PRES.
    report : `evaluation.metrics.MetricReport`
        Report of the best parameters.
    points : `list` [`GridPoint`]
        All points, ordered by alpha then beta.
    """
    alpha: float
    beta: float
    report: object
    points: List[GridPoint]

    def toDict(self):
        return {
            "best": {"alpha": self.alpha, "beta": self.beta,
                     "pres": self.report.meanPres, "recall": self.report.meanRecall},
            "n_max": self.report.n_max,
            "grid": [p.toDict() for p in self.points],
        }


def grid_search(experiment, alpha_grid, beta_grid):
    """Evaluates mean PRES for every ``(alpha, beta)`` pair.

    The experiment fixes the topics, corpus, method, number of keywords and
    cut-off. Word positions are computed once and reused for every point.
    Ties go to the smaller alpha, then the smaller beta.

    Parameters
    ----------
    experiment : `evaluation.experiment.Experiment`
        Experiment of a claim-structure method.
    alpha_grid, beta_grid : `list` [`float`]
        Values to try.

    Returns
    -------
    result : `GridResult`
        Best parameters, their report and the whole grid.

    Raises
    ------
    ValueError
        When a grid is empty or the method has no hyperparameters.
    """
    if not alpha_grid or not beta_grid:
        raise ValueError("Grid search requires non-empty alpha and beta grids.")
    if experiment.runConfig.method == "baseline":
        raise ValueError("The baseline method has no hyperparameters to search.")

    extractor = experiment.extractor()
    best, points = None, []
    for alpha, beta in itertools.product(sorted(set(alpha_grid)), sorted(set(beta_grid))):
        params = params_for(experiment.runConfig, alpha, beta)
        records = experiment.extractQueries(extractor, params)
        report = experiment.evaluate(records, experiment.retrieve(records), params)
        points.append(GridPoint(params.alpha, params.beta, report.meanPres, report.meanRecall))
        logger.info(f"alpha={params.alpha} beta={params.beta}: PRES@{report.n_max} {report.meanPres:.4f}")

        # strict improvement keeps the smallest alpha, then beta, on ties
        if best is None or report.meanPres > best[2].meanPres:
            best = (params.alpha, params.beta, report)

    return GridResult(best[0], best[1], best[2], points)


@dataclass(frozen=True)
class SweepPoint:
    top_n: int
    meanPres: float
    meanRecall: float

    def toDict(self):
        return {"top_n": self.top_n, "pres": self.meanPres, "recall": self.meanRecall}


@dataclass(frozen=True)
class SweepResult:
    """Scores of every evaluated number of keywords and the best one.

    Attributes
    ----------
    top_n : `int`
        Number of keywords with the highest mean PRES.
    report : `evaluation.metrics.MetricReport`
        Report of the best number of keywords.
    points : `list` [`SweepPoint`]
        All points, by increasing number of keywords.
    """
    top_n: int
    report: object
    points: List[SweepPoint]

    def toDict(self):
        return {
            "best": {"top_n": self.top_n, "pres": self.report.meanPres, "recall": self.report.meanRecall},
            "n_max": self.report.n_max,
            "sweep": [p.toDict() for p in self.points],
        }


def keyword_sweep(experiment, topNs=KEYWORD_COUNTS):
    """Evaluates mean PRES and recall for every number of keywords.

    Alpha and beta stay those of the run. Word positions are computed once
    and reused for every count. Ties go to the smaller count.

    Parameters
    ----------
    experiment : `evaluation.experiment.Experiment`
        Experiment of a claim-structure method.
    topNs : `iterable` [`int`], optional
        Numbers of keywords to try, 10 to 100 by 10 by default.

    Returns
    -------
    result : `SweepResult`
        Best number of keywords, its report and all points.

    Raises
    ------
    ValueError
        When no count is given, a count is not positive or the method is
        the baseline.
    """
    topNs = sorted(set(topNs))
    if not topNs:
        raise ValueError("Keyword sweep requires at least one number of keywords.")
    if experiment.runConfig.method == "baseline":
        raise ValueError("The baseline method has no claim-structure keywords to sweep.")

    extractor = experiment.extractor()
    base = experiment.runConfig.scoringParams()
    best, points = None, []
    for topN in topNs:
        params = replace(base, top_n=topN)
        records = experiment.extractQueries(extractor, params)
        report = experiment.evaluate(records, experiment.retrieve(records), params)
        points.append(SweepPoint(topN, report.meanPres, report.meanRecall))
        logger.info(f"top_n={topN}: PRES@{report.n_max} {report.meanPres:.4f}")

        if best is None or report.meanPres > best[1].meanPres:
            best = (topN, report)

    return SweepResult(best[0], best[1], points)
