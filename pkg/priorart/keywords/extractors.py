"""
Keyword extractors turn a topic document into a query. Extractors register
themselves by name and are selected by the run configuration's method.
"""


import logging
from abc import ABC, abstractmethod

from claims.spectree import document_trees, word_positions
from .baseline import CollectionStats, tfidf_keywords
from .scoring import (BOOST_MAX, ScoringParams, aggregate_stems, build_query,
                      score_stems, select_top_n)


__all__ = ["KeywordExtractor", "ClaimStructureExtractor", "Clst05Extractor",
           "Clst06Extractor", "BaselineExtractor", "params_for"]


logger = logging.getLogger(__name__)


class KeywordExtractor(ABC):
    """Supports building queries from topic documents.

    Parameters
    ----------
    runConfig : `priorart.config.RunConfig`
        Run configuration.
    corpus : `corpus.models.Corpus`
        The searched collection.
    parses : `corpus.models.ParseStore` or `None`, optional
        Claim parses, required by extractors reading claim structure.
    """

    extractors = dict()
    """All registered keyword extractors."""

    name = None
    """Extractor's name. Only named extractors will be registered."""

    def __init__(self, runConfig, corpus, parses=None, **kwargs):
        self.runConfig = runConfig
        self.corpus = corpus
        self.parses = parses

    def __init_subclass__(cls, **kwargs):
        super().__init_subclass__(**kwargs)
        if cls.name:
            KeywordExtractor.extractors[cls.name] = cls

    @abstractmethod
    def extract(self, doc, diagnostics=None):
        """Builds the query of a topic document.

        Parameters
        ----------
        doc : `corpus.models.ClaimDocument`
            Topic document.
        diagnostics : `list` or `None`, optional
            Receives the non-fatal problems found.

        Returns
        -------
        query : `keywords.scoring.QuerySpec`
            Query, possibly empty.
        """
        raise NotImplementedError()

    @classmethod
    def getExtractor(cls, runConfig):
        """Get the extractor class registered under the run's method.

        Raises
        ------
        ValueError
            None of the registered extractors implements the method.
        """
        try:
            return cls.extractors[runConfig.method]
        except KeyError:
            raise ValueError(f"None of the known extractors implements method {runConfig.method!r}.\n "
                             f"Known extractors: {list(cls.extractors.keys())}") from None

    @classmethod
    def fromConfig(cls, runConfig, corpus, parses=None, **kwargs):
        """Returns an instance of the extractor serving the run."""
        return cls.getExtractor(runConfig)(runConfig, corpus, parses, **kwargs)


class ClaimStructureExtractor(KeywordExtractor):
    """Selects the top scored stems of the document's specialization trees.

    Parameters
    ----------
    positionCache : `dict` or `None`, optional
        Position indices and their diagnostics by document, shared between extractors
        that differ only in their scoring parameters.
    boostMax : `float`, optional
        Boost of the first term of boosted queries.
    """

    def __init__(self, runConfig, corpus, parses=None, positionCache=None, boostMax=BOOST_MAX, **kwargs):
        super().__init__(runConfig, corpus, parses, **kwargs)
        if parses is None:
            raise ValueError(f"Extractor {self.name} requires claim parses.")
        self.params = runConfig.scoringParams()
        self.boosted = bool(runConfig.boost)
        self.retagged = bool(runConfig.retag)
        self.boostMax = boostMax
        self.positionCache = {} if positionCache is None else positionCache

    def positionIndex(self, doc, diagnostics=None):
        """Word positions of the document, computed once per document. The
        diagnostics found while computing them are reported on every call."""
        key = (doc.doc_id, self.retagged)
        if key not in self.positionCache:
            found = []
            trees = document_trees(doc, self.parses, self.retagged, found)
            self.positionCache[key] = (word_positions(trees), tuple(found))
        positions, found = self.positionCache[key]
        if diagnostics is not None:
            diagnostics.extend(found)
        return positions

    def scoredStems(self, doc, diagnostics=None, params=None):
        """Selected stems with their scores, descending."""
        params = self.params if params is None else params
        profiles = aggregate_stems(self.positionIndex(doc, diagnostics))
        return select_top_n(score_stems(profiles, params), params.top_n)

    def extract(self, doc, diagnostics=None, params=None):
        query = build_query(self.scoredStems(doc, diagnostics, params), self.boosted, self.boostMax)
        if query.isEmpty:
            logger.warning(f"{doc.doc_id}: no keywords extracted, the query is empty.")
        return query


class Clst05Extractor(ClaimStructureExtractor):
    name = "clst05"


class Clst06Extractor(ClaimStructureExtractor):
    name = "clst06"


class BaselineExtractor(KeywordExtractor):
    """TF-IDF keywords of the document's claims.

    Parameters
    ----------
    stats : `keywords.baseline.CollectionStats` or `None`, optional
        Collection statistics, computed from the corpus when not given.
    """

    name = "baseline"

    def __init__(self, runConfig, corpus, parses=None, stats=None, **kwargs):
        super().__init__(runConfig, corpus, parses, **kwargs)
        self.stats = CollectionStats.fromCorpus(corpus) if stats is None else stats
        self.k = runConfig.baseline_k

    def extract(self, doc, diagnostics=None):
        query = tfidf_keywords(doc, self.stats, self.k)
        if query.isEmpty:
            logger.warning(f"{doc.doc_id}: no keywords extracted, the query is empty.")
        return query


def params_for(runConfig, alpha, beta):
    """Scoring parameters of the run with ``alpha`` and ``beta`` replaced."""
    base = runConfig.scoringParams()
    return ScoringParams(alpha=float(alpha), beta=float(beta), method=base.method, top_n=base.top_n)
