"""
Tokenization and stopword filtering shared by the keyword extractors and
the search index.
"""


import re
from functools import lru_cache
from pathlib import Path


__all__ = ["STOPWORDS_PATH", "STOP_TAGS", "load_stopwords", "tokenize_text",
           "is_content_token", "filter_stopwords", "filter_text"]


STOPWORDS_PATH = Path(__file__).resolve().parent / "data" / "stopwords.txt"
"""Location of the shipped stopword list."""

STOP_TAGS = frozenset({
    "CC", "IN", "TO", "MD", "PRP", "PRP$", "WDT", "WP", "WP$", "WRB", "EX",
    "POS", "RP", "LS", "SYM", "UH", "CD",
    ",", ".", ":", "``", "''", "-LRB-", "-RRB-", "#", "$", "HYPH", "NFP",
})
"""POS tags of function words, numbers and punctuation."""

WORD_RE = re.compile(r"[^\W_]+(?:[-'][^\W_]+)*")
_NUMERIC_RE = re.compile(r"\d+(?:[.,/-]\d+)*")
_PUNCT_RE = re.compile(r"[\W_]+|-[LR][RCS]B-")


@lru_cache(maxsize=None)
def load_stopwords(path=STOPWORDS_PATH):
    """Reads a stopword list, one word per line, ``#`` starts a comment.

    Returns
    -------
    stopwords : `frozenset` [`str`]
        Lowercased stopwords.
    """
    words = set()
    with open(path, "r", encoding="utf-8") as f:
        for line in f:
            line = line.split("#", 1)[0].strip().lower()
            if line:
                words.add(line)
    return frozenset(words)


def tokenize_text(text):
    """Splits raw text into lowercased word tokens, dropping punctuation."""
    return [match.group().lower() for match in WORD_RE.finditer(text)]


def is_content_token(token, pos=None, stopwords=None):
    """Returns `True` when the token carries information.

    Parameters
    ----------
    token : `str`
        Token.
    pos : `str` or `None`, optional
        POS tag, when known.
    stopwords : `frozenset` or `None`, optional
        Stopword list, the shipped list by default.
    """
    stopwords = load_stopwords() if stopwords is None else stopwords
    if pos is not None and pos in STOP_TAGS:
        return False
    if _NUMERIC_RE.fullmatch(token) or _PUNCT_RE.fullmatch(token):
        return False
    return token.lower() not in stopwords


def filter_stopwords(tokens, stopwords=None):
    """Removes stopwords, numbers and punctuation from a token sequence.

    Parameters
    ----------
    tokens : `list`
        ``(token, pos)`` pairs in sentence order; plain strings are accepted
        for text without POS tags.
    stopwords : `frozenset` or `None`, optional
        Stopword list, the shipped list by default.

    Returns
    -------
    words : `list` [`str`]
        Lowercased content words, order preserved.
    """
    words = []
    for item in tokens:
        token, pos = (item, None) if isinstance(item, str) else item
        if is_content_token(token, pos, stopwords):
            words.append(token.lower())
    return words


def filter_text(text, stopwords=None):
    """Tokenizes raw text and removes stopwords, numbers and punctuation."""
    return filter_stopwords(tokenize_text(text), stopwords)
