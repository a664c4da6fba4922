"""
Run files in the standard retrieval format,
``topic_doc_id Q0 family_id rank score run_tag``.
"""


import logging

from corpus.loaders import CorpusFormatError, iter_lines
from .searcher import SearchResult


__all__ = ["format_run_line", "write_run", "read_run"]


logger = logging.getLogger(__name__)


def format_run_line(topicId, result, runTag):
    return f"{topicId} Q0 {result.family_id} {result.rank} {result.score:.6f} {runTag}"


def write_run(runs, path, runTag):
    """Writes ranked results.

    Parameters
    ----------
    runs : `list` [`tuple`]
        ``(topic_doc_id, results)`` pairs, written in the given order.
    path : `str`
        Destination file.
    runTag : `str`
        Name of the system, last column of every line.
    """
    with open(path, "w", encoding="utf-8") as f:
        for topicId, results in runs:
            for result in results:
                f.write(format_run_line(topicId, result, runTag))
                f.write("\n")


def read_run(path):
    """Reads a run file.

    Returns
    -------
    runs : `dict` [`str`, `list` [`search.searcher.SearchResult`]]
        Results of every topic, by rank. The best member of a family is not
        recorded in run files, the family stands in for it.

    Raises
    ------
    CorpusFormatError
        When a line does not have six fields or rank and score are not
        numbers.
    """
    runs = {}
    for lineno, line in iter_lines(path):
        fields = line.split()
        if len(fields) != 6:
            raise CorpusFormatError(f"expected 6 fields, got {len(fields)}", path, lineno)
        topicId, _, familyId, rank, score, _ = fields
        try:
            result = SearchResult(familyId, familyId, float(score), int(rank))
        except ValueError as e:
            raise CorpusFormatError(f"invalid rank or score ({e})", path, lineno) from e
        runs.setdefault(topicId, []).append(result)

    for results in runs.values():
        results.sort(key=lambda r: r.rank)
    return runs
