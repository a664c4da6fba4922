"""
Defines the documents, topics and parse sidecars the retrieval experiments
operate on, as well as some classes that support working with them.
"""


import logging
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping, Optional, Tuple


__all__ = ["Claim", "ClaimDocument", "TopicCase", "Corpus", "ParseStore",
           "Diagnostic"]


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Diagnostic:
    """A non-fatal problem found while processing the data.

    Attributes
    ----------
    level : `str`
        ``warning`` or ``error``.
    source : `str`
        What produced the diagnostic, e.g. ``claimgraph`` or ``parses``.
    message : `str`
        Human readable description.
    docId : `str`, optional
        Document the diagnostic refers to.
    claimNum : `int`, optional
        Claim the diagnostic refers to.
    """
    level: str
    source: str
    message: str
    docId: Optional[str] = None
    claimNum: Optional[int] = None

    def __str__(self):
        where = ""
        if self.docId is not None:
            where = f" [{self.docId}" + (f" claim {self.claimNum}]" if self.claimNum is not None else "]")
        return f"{self.level.upper()} {self.source}{where}: {self.message}"


@dataclass(frozen=True)
class Claim:
    """A single numbered claim."""
    num: int
    text: str

    def toDict(self):
        return {"num": self.num, "text": self.text}


@dataclass(frozen=True)
class ClaimDocument:
    """One patent document: its identifiers and its ordered claims.

    Parameters
    ----------
    doc_id : `str`
        Unique document identifier.
    family_id : `str` or `None`
        Patent family identifier, defaults to ``doc_id``.
    language : `str`
        ISO 639-1 language code of the claims.
    claims : `tuple` [`Claim`]
        Claims ordered by strictly increasing claim number.

    Raises
    ------
    ValueError
        When claim numbers are not positive and strictly increasing, a
        claim text is blank or the language or family is not a string.
    """
    doc_id: str
    family_id: Optional[str] = None
    language: str = "en"
    claims: Tuple[Claim, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if not isinstance(self.doc_id, str) or not self.doc_id:
            raise ValueError(f"Document identifier must be a non-empty string, got {self.doc_id!r}.")

        if self.family_id is None:
            object.__setattr__(self, "family_id", self.doc_id)
        elif not isinstance(self.family_id, str) or not self.family_id:
            raise ValueError(f"{self.doc_id}: family identifier must be a non-empty string, got {self.family_id!r}.")
        if not isinstance(self.language, str) or not self.language:
            raise ValueError(f"{self.doc_id}: language must be a non-empty string, got {self.language!r}.")

        claims = tuple(c if isinstance(c, Claim) else Claim(**c) for c in self.claims)
        object.__setattr__(self, "claims", claims)

        previous = 0
        for claim in claims:
            if not isinstance(claim.num, int) or isinstance(claim.num, bool) or claim.num < 1:
                raise ValueError(f"{self.doc_id}: claim numbers must be positive integers, got {claim.num!r}.")
            if claim.num <= previous:
                raise ValueError(f"{self.doc_id}: claim numbers must be unique and strictly increasing, "
                                 f"claim {claim.num} follows claim {previous}.")
            if not isinstance(claim.text, str) or not claim.text.strip():
                raise ValueError(f"{self.doc_id}: claim {claim.num} has no text.")
            previous = claim.num

    @classmethod
    def fromDict(cls, data):
        """Construct a document from its JSON Lines record.

        Parameters
        ----------
        data : `dict`
            Record with the keys ``doc_id``, ``language``, ``claims`` and,
            optionally, ``family_id``. Claims are ``{"num": int, "text": str}``.

        Raises
        ------
        KeyError
            When a mandatory key is missing.
        ValueError
            When the record violates document invariants.
        """
        claims = tuple(Claim(num=c["num"], text=c["text"]) for c in data["claims"])
        return cls(doc_id=data["doc_id"], family_id=data.get("family_id"),
                   language=data["language"], claims=claims)

    def toDict(self):
        """Returns the JSON Lines record of the document."""
        return {
            "doc_id": self.doc_id,
            "family_id": self.family_id,
            "language": self.language,
            "claims": [c.toDict() for c in self.claims],
        }

    @property
    def claimNumbers(self):
        """Claim numbers, ascending."""
        return [c.num for c in self.claims]

    @property
    def isEnglish(self):
        return self.language.lower() == "en"

    @property
    def text(self):
        """All claim texts joined by newlines."""
        return "\n".join(c.text for c in self.claims)


@dataclass(frozen=True)
class TopicCase:
    """A seed document and the patent families relevant to it.

    Raises
    ------
    ValueError
        When the relevant set is empty or contains the topic document.
    """
    topic_doc_id: str
    relevant_family_ids: frozenset

    def __post_init__(self):
        relevant = frozenset(self.relevant_family_ids)
        object.__setattr__(self, "relevant_family_ids", relevant)

        if not relevant:
            raise ValueError(f"Topic {self.topic_doc_id} has no relevant families.")
        if self.topic_doc_id in relevant:
            raise ValueError(f"Topic {self.topic_doc_id} lists itself as relevant.")

    @property
    def n(self):
        """Number of relevant families."""
        return len(self.relevant_family_ids)


class Corpus:
    """An immutable collection of claim documents keyed by their identifier.

    Parameters
    ----------
    documents : `iterable` [`ClaimDocument`]
        Documents of the collection.

    Raises
    ------
    ValueError
        When two documents share an identifier.
    """

    def __init__(self, documents=()):
        docs = {}
        for doc in documents:
            if doc.doc_id in docs:
                raise ValueError(f"Duplicate document identifier: {doc.doc_id}")
            docs[doc.doc_id] = doc
        self._documents = MappingProxyType(docs)

        families = {}
        for doc in docs.values():
            families.setdefault(doc.family_id, []).append(doc.doc_id)
        self._families = MappingProxyType({k: tuple(v) for k, v in families.items()})

    def __repr__(self):
        return f"{self.__class__.__name__}(num_documents={self.num_documents})"

    def __eq__(self, other):
        if not isinstance(other, Corpus):
            return NotImplemented
        return dict(self._documents) == dict(other._documents)

    def __len__(self):
        return len(self._documents)

    def __iter__(self):
        return iter(self._documents.values())

    def __contains__(self, docId):
        return docId in self._documents

    def __getitem__(self, docId):
        return self._documents[docId]

    @property
    def documents(self) -> Mapping[str, ClaimDocument]:
        """Read-only mapping of identifiers to documents."""
        return self._documents

    @property
    def num_documents(self):
        return len(self._documents)

    @property
    def families(self):
        """Read-only mapping of family identifiers to member document ids."""
        return self._families

    def get(self, docId, default=None):
        return self._documents.get(docId, default)

    def familyOf(self, docId):
        """Returns the family identifier of the given document."""
        return self._documents[docId].family_id

    def englishDocuments(self):
        """Returns the documents downstream modules process.

        Returns
        -------
        documents : `list` [`ClaimDocument`]
            English documents, in collection order.
        skipped : `int`
            Number of documents in other languages.
        """
        english = [doc for doc in self._documents.values() if doc.isEnglish]
        skipped = len(self._documents) - len(english)
        if skipped:
            logger.warning(f"Skipping {skipped} non-English document(s).")
        return english, skipped


class ParseStore:
    """Bracketed constituency parses of claims keyed by document and claim
    number.

    Parameters
    ----------
    parses : `dict`, optional
        Mapping of ``(doc_id, claim_num)`` to the bracketed parse string.
    """

    def __init__(self, parses=None):
        self._parses = MappingProxyType(dict(parses or {}))

    def __len__(self):
        return len(self._parses)

    def __contains__(self, key):
        return key in self._parses

    def get(self, docId, claimNum):
        """Returns the bracketed parse of a claim, or `None` if it is missing."""
        return self._parses.get((docId, claimNum))

    def missingFor(self, doc):
        """Returns the claim numbers of the document without a parse."""
        return [num for num in doc.claimNumbers if (doc.doc_id, num) not in self._parses]
