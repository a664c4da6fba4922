"""
Inverted index over the claims of the corpus documents.
"""


import json
import logging
from collections import Counter
from types import MappingProxyType

from claims.text import filter_text


__all__ = ["SNAPSHOT_VERSION", "InvertedIndex", "build_index", "write_snapshot",
           "read_snapshot"]


logger = logging.getLogger(__name__)


SNAPSHOT_VERSION = 1
"""Version of the JSON index snapshot format."""


class InvertedIndex:
    """Term postings and claim field lengths of a document collection.

    Parameters
    ----------
    postings : `dict` [`str`, `list`]
        Term to ``(doc_id, term frequency)`` pairs.
    field_lengths : `dict` [`str`, `int`]
        Number of indexed claim tokens of every document.
    families : `dict` [`str`, `str`], optional
        Family of every document, the document itself by default.

    Raises
    ------
    ValueError
        When a frequency is not positive or a posting refers to a document
        without a recorded length.
    """

    def __init__(self, postings=None, field_lengths=None, families=None):
        lengths = dict(field_lengths or {})
        self.field_lengths = MappingProxyType(lengths)

        fams = {docId: docId for docId in lengths}
        fams.update(families or {})
        self.families = MappingProxyType(fams)

        frequencies = {}
        for term, entries in (postings or {}).items():
            termFreqs = {}
            for docId, tf in entries:
                if tf < 1:
                    raise ValueError(f"Frequency of {term!r} in {docId} must be positive, got {tf}.")
                if docId not in lengths:
                    raise ValueError(f"Posting of {term!r} refers to unknown document {docId}.")
                termFreqs[docId] = tf
            frequencies[term] = termFreqs
        self._frequencies = frequencies

    def __repr__(self):
        return f"{self.__class__.__name__}(num_docs={self.num_docs}, num_terms={len(self._frequencies)})"

    def __eq__(self, other):
        if not isinstance(other, InvertedIndex):
            return NotImplemented
        return (self._frequencies == other._frequencies and dict(self.field_lengths) == dict(other.field_lengths)
                and dict(self.families) == dict(other.families))

    def __contains__(self, docId):
        return docId in self.field_lengths

    @property
    def num_docs(self):
        return len(self.field_lengths)

    @property
    def terms(self):
        return sorted(self._frequencies)

    def postings(self, term):
        """Returns ``(doc_id, tf)`` pairs of the term, sorted by doc_id."""
        return sorted(self._frequencies.get(term, {}).items())

    def docFreq(self, term):
        return len(self._frequencies.get(term, ()))

    def termFreq(self, term, docId):
        return self._frequencies.get(term, {}).get(docId, 0)

    def familyOf(self, docId):
        return self.families[docId]

    def toSnapshot(self):
        """Returns the JSON-serializable snapshot of the index."""
        return {
            "version": SNAPSHOT_VERSION,
            "field_lengths": dict(sorted(self.field_lengths.items())),
            "families": dict(sorted(self.families.items())),
            "postings": {term: [[docId, tf] for docId, tf in self.postings(term)] for term in self.terms},
        }

    @classmethod
    def fromSnapshot(cls, snapshot):
        """Create an index from its snapshot.

        Raises
        ------
        ValueError
            When the snapshot version is not supported.
        """
        version = snapshot.get("version")
        if version != SNAPSHOT_VERSION:
            raise ValueError(f"Unsupported index snapshot version {version!r}, expected {SNAPSHOT_VERSION}.")
        postings = {term: [(docId, tf) for docId, tf in entries] for term, entries in snapshot["postings"].items()}
        return cls(postings, snapshot["field_lengths"], snapshot.get("families"))


def build_index(corpus):
    """Indexes the concatenated claims of every English document.

    Parameters
    ----------
    corpus : `corpus.models.Corpus`
        Collection to index.

    Returns
    -------
    index : `InvertedIndex`
        The index.
    """
    documents, _ = corpus.englishDocuments()

    postings, lengths, families = {}, {}, {}
    for doc in sorted(documents, key=lambda d: d.doc_id):
        words = filter_text(doc.text)
        lengths[doc.doc_id] = len(words)
        families[doc.doc_id] = doc.family_id
        for term, tf in Counter(words).items():
            postings.setdefault(term, []).append((doc.doc_id, tf))

    index = InvertedIndex(postings, lengths, families)
    logger.info(f"Indexed {index.num_docs} documents, {len(postings)} terms.")
    return index


def write_snapshot(index, path):
    with open(path, "w", encoding="utf-8") as f:
        json.dump(index.toSnapshot(), f, ensure_ascii=False, sort_keys=True)
        f.write("\n")


def read_snapshot(path):
    with open(path, "r", encoding="utf-8") as f:
        return InvertedIndex.fromSnapshot(json.load(f))
