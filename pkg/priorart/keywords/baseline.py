"""
TF-IDF keyword extraction from a document's claims, the "more like this"
style baseline the claim-structure scores are compared against.
"""


import logging
import math
from collections import Counter
from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping

from claims.text import filter_text
from .scoring import QuerySpec


__all__ = ["BASELINE_KEYWORDS", "CollectionStats", "tfidf_scores", "tfidf_keywords"]


logger = logging.getLogger(__name__)


BASELINE_KEYWORDS = 70
"""Number of keywords the baseline extracts by default."""


@dataclass(frozen=True)
class CollectionStats:
    """Document frequencies of the claim terms of a collection.

    Raises
    ------
    ValueError
        When a document frequency exceeds the number of documents.
    """
    num_docs: int
    doc_freq: Mapping[str, int]

    def __post_init__(self):
        docFreq = MappingProxyType(dict(self.doc_freq))
        for term, df in docFreq.items():
            if not 0 <= df <= self.num_docs:
                raise ValueError(f"Document frequency of {term!r} ({df}) exceeds {self.num_docs} documents.")
        object.__setattr__(self, "doc_freq", docFreq)

    @classmethod
    def fromCorpus(cls, corpus):
        """Counts, for every term, the English documents whose claims contain
        it."""
        documents = [doc for doc in corpus if doc.isEnglish]
        docFreq = Counter()
        for doc in documents:
            docFreq.update(set(filter_text(doc.text)))
        return cls(len(documents), docFreq)

    def idf(self, term):
        """``ln(N / (df + 1))``, non-positive for terms in every document."""
        return math.log(self.num_docs / (self.doc_freq.get(term, 0) + 1))


def tfidf_scores(doc, stats):
    """Scores every distinct claim term of the document.

    Returns
    -------
    scores : `list` [`tuple` [`str`, `float`]]
        ``(term, tf * idf)`` pairs, descending score, ties by term.
    """
    if stats.num_docs == 0:
        return []
    termFreq = Counter(filter_text(doc.text))
    scores = [(term, tf * stats.idf(term)) for term, tf in termFreq.items()]
    return sorted(scores, key=lambda item: (-item[1], item[0]))


def tfidf_keywords(doc, stats, k=BASELINE_KEYWORDS):
    """Selects the ``k`` highest TF-IDF terms of the document's claims.

    Parameters
    ----------
    doc : `corpus.models.ClaimDocument`
        Source document.
    stats : `CollectionStats`
        Statistics of the searched collection.
    k : `int`, optional
        Number of keywords.

    Returns
    -------
    query : `keywords.scoring.QuerySpec`
        Unboosted query of at most ``k`` terms.
    """
    if k < 1:
        raise ValueError(f"Number of keywords must be positive, got {k}.")
    return QuerySpec.fromWords(term for term, _ in tfidf_scores(doc, stats)[:k])
