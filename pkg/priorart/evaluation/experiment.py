"""
The retrieval experiment: build a query for every topic, search the corpus
and evaluate the ranked families against the relevance judgments.
"""


import logging
import os

from corpus.loaders import load_corpus, load_parses, load_qrels
from corpus.models import Diagnostic
from keywords.extractors import KeywordExtractor
from keywords.serializers import QueryRecord
from search.index import build_index, read_snapshot
from search.searcher import Searcher
from .metrics import evaluate_run


__all__ = ["MissingTopicError", "Experiment"]


logger = logging.getLogger(__name__)


class MissingTopicError(ValueError):
    """Exception raised when a judged topic is not a corpus document.

    Attributes:
        topicId -- identifier of the topic document
        message -- explanation of the error
    """

    def __init__(self, topicId):
        self.topicId = topicId
        self.message = f"Topic document {topicId!r} is not in the corpus."
        super().__init__(self.message)


class Experiment:
    """Runs one configured system over all topics. Topics whose document is
    not English are skipped and listed in the report metadata.

    Parameters
    ----------
    runConfig : `priorart.config.RunConfig`
        Run configuration.
    corpus : `corpus.models.Corpus`
        Searched collection, holding the topic documents too.
    topics : `list` [`corpus.models.TopicCase`]
        Judged topics.
    parses : `corpus.models.ParseStore` or `None`, optional
        Claim parses, required by the claim-structure methods.
    index : `search.index.InvertedIndex` or `None`, optional
        Index of the corpus, built when not given.
    boostMax : `float` or `None`, optional
        Boost of the first term of boosted queries.

    Raises
    ------
    MissingTopicError
        When a topic document is not in the corpus.
    """

    def __init__(self, runConfig, corpus, topics, parses=None, index=None, boostMax=None):
        self.runConfig = runConfig
        self.corpus = corpus
        self.topics = list(topics)
        self.parses = parses
        self.index = build_index(corpus) if index is None else index
        self.searcher = Searcher(self.index)
        self.boostMax = boostMax
        self.diagnostics = []
        self._positionCache = {}
        self._stats = None

        for topic in self.topics:
            if topic.topic_doc_id not in corpus:
                raise MissingTopicError(topic.topic_doc_id)

        self.skippedTopics = [t.topic_doc_id for t in self.topics if not corpus[t.topic_doc_id].isEnglish]
        for topicId in self.skippedTopics:
            logger.warning(f"{topicId}: topic is not English, skipped.")
            self.diagnostics.append(Diagnostic("warning", "qrels", "non-English topic skipped", topicId))
        self.topics = [t for t in self.topics if t.topic_doc_id not in self.skippedTopics]

    @classmethod
    def fromConfig(cls, runConfig, boostMax=None):
        """Loads the corpus, judgments, parses and, if configured, the index
        snapshot named in the run configuration."""
        corpus = load_corpus(runConfig.corpus)
        topics = load_qrels(runConfig.qrels)
        parses = load_parses(runConfig.parses) if runConfig.parses is not None else None
        index = None
        if runConfig.index is not None and os.path.isfile(runConfig.index):
            index = read_snapshot(runConfig.index)
            logger.info(f"Read index snapshot {runConfig.index}.")
        return cls(runConfig, corpus, topics, parses, index, boostMax)

    def extractor(self, runConfig=None):
        """Keyword extractor of the run, sharing position indices and
        collection statistics between calls."""
        runConfig = self.runConfig if runConfig is None else runConfig
        kwargs = {"positionCache": self._positionCache}
        if self.boostMax is not None:
            kwargs["boostMax"] = self.boostMax
        extractor = KeywordExtractor.fromConfig(runConfig, self.corpus, self.parses, stats=self._stats, **kwargs)
        if getattr(extractor, "stats", None) is not None:
            self._stats = extractor.stats
        return extractor

    def extractQueries(self, extractor=None, params=None):
        """Builds the query of every topic, in topic order.

        Parameters
        ----------
        extractor : `keywords.extractors.KeywordExtractor` or `None`, optional
            Extractor, the run's by default.
        params : `keywords.scoring.ScoringParams` or `None`, optional
            Scoring parameters replacing the extractor's, claim-structure
            methods only.

        Returns
        -------
        records : `list` [`keywords.serializers.QueryRecord`]
            Queries.
        """
        extractor = self.extractor() if extractor is None else extractor
        records = []
        for topic in self.topics:
            doc = self.corpus[topic.topic_doc_id]
            if params is None:
                query = extractor.extract(doc, self.diagnostics)
            else:
                query = extractor.extract(doc, self.diagnostics, params=params)
            records.append(QueryRecord(doc.doc_id, self.runConfig.method, query))
        return records

    def retrieve(self, records, k=None):
        """Searches every query, excluding the topic's own family.

        Returns
        -------
        runs : `list` [`tuple`]
            ``(topic_doc_id, results)`` pairs in query order.
        """
        k = self.runConfig.n_max if k is None else k
        runs = []
        for record in records:
            family = self.corpus.familyOf(record.docId)
            runs.append((record.docId, self.searcher.search(record.query, k, excludeFamilies=(family, ))))
        return runs

    def metadata(self, params=None):
        conf = self.runConfig
        meta = {"system": conf.systemName, "method": conf.method, "boost": bool(conf.boost),
                "retag": bool(conf.retag), "run_tag": conf.run_tag, "skipped_topics": list(self.skippedTopics)}
        if conf.method == "baseline":
            meta["keywords"] = conf.baseline_k
        else:
            params = conf.scoringParams() if params is None else params
            meta.update({"keywords": params.top_n, "alpha": params.alpha, "beta": params.beta})
        return meta

    def evaluate(self, records, runs, params=None):
        """Evaluates the results at the run's cut-off."""
        empty = [r.docId for r in records if r.query.isEmpty]
        return evaluate_run(dict(runs), self.topics, self.runConfig.n_max, self.metadata(params), empty)

    def run(self, params=None):
        """Extracts, retrieves and evaluates.

        Returns
        -------
        records : `list` [`keywords.serializers.QueryRecord`]
            Queries.
        runs : `list` [`tuple`]
            Ranked results of every topic.
        report : `evaluation.metrics.MetricReport`
            Metrics.
        """
        records = self.extractQueries(params=params)
        runs = self.retrieve(records)
        report = self.evaluate(records, runs, params)
        logger.info(f"{self.runConfig.systemName}: Recall@{report.n_max} {report.meanRecall:.4f}, "
                    f"PRES@{report.n_max} {report.meanPres:.4f} over {len(report.rows)} topics.")
        return records, runs, report
