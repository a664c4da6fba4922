"""
Retrieval of patent families for keyword queries.
"""


import logging
from dataclasses import dataclass

from .similarity import ClassicSimilarity, Explanation, TermExplanation


__all__ = ["UnknownDocumentError", "SearchResult", "Searcher", "score_doc", "search"]


logger = logging.getLogger(__name__)


class UnknownDocumentError(ValueError):
    """Exception raised when a document is not in the index.

    Attributes:
        docId -- identifier of the missing document
        message -- explanation of the error
    """

    def __init__(self, docId, message=None):
        self.docId = docId
        self.message = f"Document {docId!r} is not in the index." if message is None else message
        super().__init__(self.message)


@dataclass(frozen=True)
class SearchResult:
    """A retrieved family, represented by its best scoring member."""
    family_id: str
    best_doc_id: str
    score: float
    rank: int


class Searcher:
    """Scores the documents of an index against queries.

    Parameters
    ----------
    index : `search.index.InvertedIndex`
        Searched index.
    similarity : `search.similarity.ClassicSimilarity`, optional
        Scoring factors.
    """

    def __init__(self, index, similarity=None):
        self.index = index
        self.similarity = ClassicSimilarity() if similarity is None else similarity

    def idf(self, term):
        return self.similarity.idf(self.index.docFreq(term), self.index.num_docs)

    def queryNorm(self, query):
        return self.similarity.queryNorm(sum((self.idf(t.word) * t.boost) ** 2 for t in query))

    def explain(self, query, docId):
        """Returns the score factors of a document.

        Raises
        ------
        UnknownDocumentError
            When the document is not indexed.
        """
        if docId not in self.index:
            raise UnknownDocumentError(docId)

        sim = self.similarity
        norm = sim.lengthNorm(self.index.field_lengths[docId])
        terms = []
        for term in query:
            freq = self.index.termFreq(term.word, docId)
            if freq:
                terms.append(TermExplanation(term.word, sim.tf(freq), self.idf(term.word), term.boost, norm))

        return Explanation(docId, sim.coord(len(terms), len(query)), self.queryNorm(query), tuple(terms))

    def score(self, query, docId):
        return self.explain(query, docId).score

    def candidates(self, query):
        """Documents containing at least one query term, sorted."""
        docs = set()
        for term in query:
            docs.update(docId for docId, _ in self.index.postings(term.word))
        return sorted(docs)

    def search(self, query, k, excludeFamilies=()):
        """Ranks the families of the candidate documents.

        Parameters
        ----------
        query : `keywords.scoring.QuerySpec`
            Query.
        k : `int`
            Number of families to return.
        excludeFamilies : `iterable` [`str`], optional
            Families removed before ranking, e.g. the topic's own family.

        Returns
        -------
        results : `list` [`SearchResult`]
            At most ``k`` results, descending score, ties by family.
        """
        if k < 1:
            raise ValueError(f"Number of results must be positive, got {k}.")
        if len(query) == 0 or self.index.num_docs == 0:
            return []

        excluded = set(excludeFamilies)
        best = {}
        for docId in self.candidates(query):
            family = self.index.familyOf(docId)
            if family in excluded:
                continue
            score = self.score(query, docId)
            # candidates are visited in doc_id order, keep the first on ties
            if family not in best or score > best[family][1]:
                best[family] = (docId, score)

        ranked = sorted(best.items(), key=lambda item: (-item[1][1], item[0]))[:k]
        return [SearchResult(family, docId, score, rank)
                for rank, (family, (docId, score)) in enumerate(ranked, start=1)]


def score_doc(index, query, doc_id):
    """Score of one indexed document for the query."""
    return Searcher(index).score(query, doc_id)


def search(index, query, k, excludeFamilies=()):
    """Top ``k`` families of the index for the query."""
    return Searcher(index).search(query, k, excludeFamilies)
