"""
Query dump, one JSON record per topic, written for auditing which keywords
each method selected.
"""


import json
import logging

from corpus.loaders import CorpusFormatError, iter_lines
from .scoring import QuerySpec


__all__ = ["QueryRecord", "write_query_dump", "read_query_dump"]


logger = logging.getLogger(__name__)


class QueryRecord:
    """The query extracted for one topic document."""

    def __init__(self, docId, method, query):
        self.docId = docId
        self.method = method
        self.query = query

    def __eq__(self, other):
        if not isinstance(other, QueryRecord):
            return NotImplemented
        return (self.docId, self.method, self.query) == (other.docId, other.method, other.query)

    def __repr__(self):
        return f"{self.__class__.__name__}({self.docId!r}, {self.method!r}, terms={len(self.query)})"

    def toDict(self):
        return {"doc_id": self.docId, "method": self.method, "terms": self.query.toDicts()}

    @classmethod
    def fromDict(cls, data):
        return cls(data["doc_id"], data["method"], QuerySpec.fromDicts(data["terms"]))


def write_query_dump(records, path):
    """Writes query records as JSON Lines, in the given order."""
    with open(path, "w", encoding="utf-8") as f:
        for record in records:
            f.write(json.dumps(record.toDict(), ensure_ascii=False))
            f.write("\n")
    logger.info(f"Wrote {len(records)} queries to {path}.")


def read_query_dump(path):
    """Reads query records written by `write_query_dump`.

    Raises
    ------
    CorpusFormatError
        When a line is not a valid query record.
    """
    records = []
    for lineno, line in iter_lines(path):
        try:
            records.append(QueryRecord.fromDict(json.loads(line)))
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
            raise CorpusFormatError(f"invalid query record ({e})", path, lineno) from e
    return records
