"""
The classic vector space similarity: coordination factor, query
normalization and, per query term, square-root term frequency, squared
inverse document frequency, boost and length normalization.
"""


import math
from dataclasses import dataclass
from typing import Tuple


__all__ = ["ClassicSimilarity", "TermExplanation", "Explanation"]


class ClassicSimilarity:
    """Factors of the classic similarity; exact lengths are used, norms are
    not quantized."""

    @staticmethod
    def tf(freq):
        return math.sqrt(freq)

    @staticmethod
    def idf(docFreq, numDocs):
        return 1.0 + math.log(numDocs / (docFreq + 1.0))

    @staticmethod
    def coord(overlap, maxOverlap):
        return overlap / maxOverlap if maxOverlap else 0.0

    @staticmethod
    def queryNorm(sumOfSquaredWeights):
        return 1.0 / math.sqrt(sumOfSquaredWeights) if sumOfSquaredWeights > 0 else 0.0

    @staticmethod
    def lengthNorm(numTerms):
        return 1.0 / math.sqrt(numTerms) if numTerms > 0 else 0.0


@dataclass(frozen=True)
class TermExplanation:
    """Contribution of one query term to a document's score."""
    term: str
    tf: float
    idf: float
    boost: float
    norm: float

    @property
    def value(self):
        return self.tf * self.idf ** 2 * self.boost * self.norm


@dataclass(frozen=True)
class Explanation:
    """The factors a document's score is the product and sum of.

    Attributes
    ----------
    docId : `str`
        Scored document.
    coord : `float`
        Fraction of the query terms the document contains.
    queryNorm : `float`
        Query normalization.
    terms : `tuple` [`TermExplanation`]
        Matching query terms, in query order.
    """
    docId: str
    coord: float
    queryNorm: float
    terms: Tuple[TermExplanation, ...] = ()

    @property
    def score(self):
        if not self.terms:
            return 0.0
        return self.coord * self.queryNorm * sum(t.value for t in self.terms)
