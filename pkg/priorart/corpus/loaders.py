"""
Readers and writers for the corpus, relevance judgments and parse sidecar
files.
"""


import json
import logging

from .models import ClaimDocument, TopicCase, Corpus, ParseStore


__all__ = ["CorpusFormatError", "DuplicateDocumentError", "iter_lines", "load_corpus",
           "dump_corpus", "load_qrels", "load_parses"]


logger = logging.getLogger(__name__)


class CorpusFormatError(ValueError):
    """Exception raised when an input file is malformed.

    Attributes:
        path -- file in which the error occurred
        lineno -- 1-based line number of the offending line, if known
        message -- explanation of the error
    """

    def __init__(self, message="Malformed input file", path=None, lineno=None):
        self.path = path
        self.lineno = lineno
        self.message = message
        location = f"{path}" if path is not None else "<input>"
        if lineno is not None:
            location += f", line {lineno}"
        super().__init__(f"{location}: {message}")


class DuplicateDocumentError(CorpusFormatError):
    """Exception raised when a document identifier occurs more than once."""

    def __init__(self, docId, path=None, lineno=None):
        self.docId = docId
        super().__init__(f"duplicate doc_id {docId!r}", path, lineno)


def iter_lines(path):
    """Yields ``(lineno, line)`` of the non-blank lines of a UTF-8 file.

    Raises
    ------
    CorpusFormatError
        When a line is not valid UTF-8.
    """
    with open(path, "rb") as f:
        for lineno, raw in enumerate(f, start=1):
            try:
                line = raw.decode("utf-8").strip()
            except UnicodeDecodeError as e:
                raise CorpusFormatError(f"not valid UTF-8 ({e.reason})", path, lineno) from e
            if line:
                yield lineno, line


def _loadJson(path, lineno, line):
    try:
        record = json.loads(line)
    except json.JSONDecodeError as e:
        raise CorpusFormatError(f"invalid JSON ({e.msg})", path, lineno) from e
    if not isinstance(record, dict):
        raise CorpusFormatError("expected a JSON object", path, lineno)
    return record


def load_corpus(path):
    """Loads a JSON Lines corpus, one document per line.

    Parameters
    ----------
    path : `str`
        Path to the corpus file.

    Returns
    -------
    corpus : `corpus.models.Corpus`
        All documents of the file.

    Raises
    ------
    CorpusFormatError
        When a line is not a valid document record.
    DuplicateDocumentError
        When a document identifier repeats.
    FileNotFoundError
        When the file does not exist.
    """
    documents, seenAt = [], {}
    for lineno, line in iter_lines(path):
        record = _loadJson(path, lineno, line)
        try:
            doc = ClaimDocument.fromDict(record)
        except KeyError as e:
            raise CorpusFormatError(f"missing key {e.args[0]!r}", path, lineno) from e
        except (TypeError, ValueError) as e:
            raise CorpusFormatError(str(e), path, lineno) from e

        if doc.doc_id in seenAt:
            raise DuplicateDocumentError(doc.doc_id, path, lineno)
        seenAt[doc.doc_id] = lineno
        documents.append(doc)

    corpus = Corpus(documents)
    logger.info(f"Loaded {corpus.num_documents} documents from {path}.")
    return corpus


def dump_corpus(corpus, path):
    """Writes a corpus as JSON Lines, in collection order.

    Parameters
    ----------
    corpus : `corpus.models.Corpus`
        Corpus to write.
    path : `str`
        Destination file.
    """
    with open(path, "w", encoding="utf-8") as f:
        for doc in corpus:
            f.write(json.dumps(doc.toDict(), ensure_ascii=False, sort_keys=True))
            f.write("\n")


def load_qrels(path):
    """Loads relevance judgments.

    Each line is ``topic_doc_id<TAB>relevant_family_id``; lines starting
    with ``#`` are comments. Lines of the same topic are grouped and
    repeated judgments collapse.

    Parameters
    ----------
    path : `str`
        Path to the qrels file.

    Returns
    -------
    topics : `list` [`corpus.models.TopicCase`]
        One case per topic, ordered by topic identifier.

    Raises
    ------
    CorpusFormatError
        When a line has fewer than two fields or a topic judges itself
        relevant.
    """
    judged = {}
    for lineno, line in iter_lines(path):
        if line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) < 2:
            fields = line.split()
        if len(fields) < 2:
            raise CorpusFormatError("expected 'topic_doc_id<TAB>family_id'", path, lineno)
        topicId, familyId = fields[0].strip(), fields[1].strip()
        if topicId == familyId:
            raise CorpusFormatError(f"topic {topicId} judged relevant to itself", path, lineno)
        judged.setdefault(topicId, set()).add(familyId)

    topics = [TopicCase(topicId, frozenset(families)) for topicId, families in sorted(judged.items())]
    logger.info(f"Loaded {len(topics)} topics from {path}.")
    return topics


def load_parses(path):
    """Loads the parse sidecar, one bracketed parse per claim.

    Parameters
    ----------
    path : `str`
        JSON Lines file of ``{"doc_id": str, "claim_num": int, "ptb": str}``.

    Returns
    -------
    parses : `corpus.models.ParseStore`
        Parses keyed by document and claim number.

    Raises
    ------
    CorpusFormatError
        When a record is malformed or a claim has two parses.
    """
    parses = {}
    for lineno, line in iter_lines(path):
        record = _loadJson(path, lineno, line)
        try:
            key = (record["doc_id"], record["claim_num"])
            ptb = record["ptb"]
        except KeyError as e:
            raise CorpusFormatError(f"missing key {e.args[0]!r}", path, lineno) from e

        if not isinstance(key[1], int) or not isinstance(ptb, str):
            raise CorpusFormatError("claim_num must be an integer and ptb a string", path, lineno)
        if key in parses:
            raise CorpusFormatError(f"second parse for {key[0]} claim {key[1]}", path, lineno)
        parses[key] = ptb

    logger.info(f"Loaded {len(parses)} claim parses from {path}.")
    return ParseStore(parses)
