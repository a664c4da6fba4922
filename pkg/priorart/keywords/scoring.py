"""
Stem grouping and the claim-structure scores that rank stems for keyword
selection, and the construction of the query from the selected stems.
"""


import logging
from dataclasses import dataclass, field
from functools import lru_cache
from types import MappingProxyType
from typing import Mapping, Tuple

import numpy as np
from nltk.stem.porter import PorterStemmer


__all__ = ["BOOST_MAX", "EXPONENT_CLAMP", "SCORING_METHODS",
           "EmptyPositionsError", "StemProfile", "ScoredStem", "ScoringParams",
           "QueryTerm", "QuerySpec", "stem", "aggregate_stems", "clst05",
           "clst06", "score_stems", "select_top_n", "build_query"]


logger = logging.getLogger(__name__)


BOOST_MAX = 10.0
"""Boost of the highest scoring term in a boosted query."""

EXPONENT_CLAMP = 700.0
"""Largest exponent evaluated, ``exp(709)`` is the last finite double."""

SCORING_METHODS = ("CLST05", "CLST06")

_FLOAT_MAX = np.finfo(np.float64).max

_stemmer = PorterStemmer(mode=PorterStemmer.ORIGINAL_ALGORITHM)


class EmptyPositionsError(ValueError):
    """Exception raised when a stem without positions is scored.

    Attributes:
        message -- explanation of the error
    """

    def __init__(self, message="Can not score a stem without positions."):
        self.message = message
        super().__init__(self.message)


@lru_cache(maxsize=65536)
def stem(word):
    """Returns the Porter (1980) stem of a lowercase word."""
    return _stemmer.stem(word, to_lowercase=False)


@dataclass(frozen=True)
class StemProfile:
    """All occurrences of the words sharing one stem.

    Attributes
    ----------
    stem : `str`
        Stem.
    representative : `str`
        Most frequent word with this stem, the lexicographically smallest on
        ties. It stands for the stem in queries.
    occurrences : `dict` [`str`, `int`]
        Number of occurrences of every word with this stem.
    positions : `tuple` [`claims.spectree.WordPosition`]
        Positions of all occurrences of all those words.
    """
    stem: str
    representative: str
    occurrences: Mapping[str, int]
    positions: Tuple = ()


@dataclass(frozen=True)
class ScoredStem:
    profile: StemProfile
    score: float

    @property
    def stem(self):
        return self.profile.stem

    @property
    def representative(self):
        return self.profile.representative


@dataclass(frozen=True)
class ScoringParams:
    """Hyperparameters of the stem scores.

    Raises
    ------
    ValueError
        When ``alpha`` or ``beta`` is negative, the method is unknown or
        ``top_n`` is not positive.
    """
    alpha: float = 1.0
    beta: float = 0.5
    method: str = "CLST05"
    top_n: int = 100

    def __post_init__(self):
        if self.alpha < 0 or self.beta < 0:
            raise ValueError(f"alpha and beta must be non-negative, got {self.alpha}, {self.beta}.")
        if self.method not in SCORING_METHODS:
            raise ValueError(f"Unknown scoring method {self.method!r}, expected one of {SCORING_METHODS}.")
        if not isinstance(self.top_n, int) or self.top_n < 1:
            raise ValueError(f"top_n must be a positive integer, got {self.top_n!r}.")

    def score(self, positions):
        """Scores positions with the configured method."""
        scorer = clst05 if self.method == "CLST05" else clst06
        return scorer(positions, self.alpha, self.beta)


@dataclass(frozen=True)
class QueryTerm:
    word: str
    boost: float = 1.0

    def __post_init__(self):
        if not self.boost > 0:
            raise ValueError(f"Boost of {self.word!r} must be positive, got {self.boost}.")

    def toDict(self):
        return {"w": self.word, "boost": self.boost}


@dataclass(frozen=True)
class QuerySpec:
    """Ordered query terms, highest scoring first.

    Raises
    ------
    ValueError
        When a word repeats.
    """
    terms: Tuple[QueryTerm, ...] = field(default_factory=tuple)

    def __post_init__(self):
        terms = tuple(t if isinstance(t, QueryTerm) else QueryTerm(*t) for t in self.terms)
        object.__setattr__(self, "terms", terms)
        words = [t.word for t in terms]
        if len(set(words)) != len(words):
            raise ValueError(f"Query terms must be distinct, got {words}.")

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    @property
    def words(self):
        return [t.word for t in self.terms]

    @property
    def isEmpty(self):
        return not self.terms

    @classmethod
    def fromWords(cls, words):
        """Unboosted query of the given words."""
        return cls(tuple(QueryTerm(w) for w in words))

    @classmethod
    def fromDicts(cls, terms):
        return cls(tuple(QueryTerm(t["w"], float(t.get("boost", 1.0))) for t in terms))

    def toDicts(self):
        return [t.toDict() for t in self.terms]


def aggregate_stems(index):
    """Groups the words of a position index by their stem.

    Parameters
    ----------
    index : `claims.spectree.PositionIndex`
        Word positions of one document.

    Returns
    -------
    profiles : `list` [`StemProfile`]
        One profile per stem, ordered by stem.
    """
    grouped = {}
    for word, positions in index.items():
        grouped.setdefault(stem(word), []).append((word, positions))

    profiles = []
    for key in sorted(grouped):
        members = grouped[key]
        occurrences = {word: len(positions) for word, positions in members}
        representative = min(occurrences, key=lambda w: (-occurrences[w], w))
        positions = tuple(p for _, wordPositions in members for p in wordPositions)
        profiles.append(StemProfile(key, representative, MappingProxyType(occurrences), positions))
    return profiles


def _asArray(positions):
    if len(positions) == 0:
        raise EmptyPositionsError()
    return np.asarray(positions, dtype=np.float64).reshape(-1, 3)


def clst05(positions, alpha, beta):
    """Sums, over all positions, the exponential of the relative node depth
    weighted by ``alpha`` plus the claim depth weighted by ``beta``.

    Parameters
    ----------
    positions : `list` [`claims.spectree.WordPosition`]
        ``(nd, nh, cd)`` triples; repeated triples each contribute.
    alpha : `float`
        Weight of ``nd / (nd + nh - 1)``.
    beta : `float`
        Weight of ``cd``.

    Returns
    -------
    score : `float`
        Score, saturating at the largest finite double.

    Raises
    ------
    EmptyPositionsError
        When ``positions`` is empty.
    """
    arr = _asArray(positions)
    nd, nh, cd = arr[:, 0], arr[:, 1], arr[:, 2]
    exponents = np.minimum(alpha * nd / (nd + nh - 1) + beta * cd, EXPONENT_CLAMP)
    with np.errstate(over="ignore"):
        return float(min(np.exp(exponents).sum(), _FLOAT_MAX))


def clst06(positions, alpha, beta):
    """Scores the positions by their deepest node and deepest claim,
    ``|positions| * exp(alpha * max(nd) + beta * max(cd))``.

    Raises
    ------
    EmptyPositionsError
        When ``positions`` is empty.
    """
    arr = _asArray(positions)
    exponent = min(alpha * arr[:, 0].max() + beta * arr[:, 2].max(), EXPONENT_CLAMP)
    with np.errstate(over="ignore"):
        return float(min(len(arr) * np.exp(exponent), _FLOAT_MAX))


def score_stems(profiles, params):
    """Scores every stem profile, skipping profiles without positions."""
    scored = []
    for profile in profiles:
        if not profile.positions:
            logger.debug(f"Stem {profile.stem!r} has no positions, not scored.")
            continue
        scored.append(ScoredStem(profile, params.score(profile.positions)))
    return scored


def select_top_n(scored, n):
    """Returns the ``n`` highest scoring stems, descending, ties broken by
    the stem."""
    return sorted(scored, key=lambda s: (-s.score, s.stem))[:n]


def build_query(top, boosted=False, boostMax=BOOST_MAX):
    """Concatenates the representatives of the selected stems.

    Parameters
    ----------
    top : `list` [`ScoredStem`]
        Selected stems, in descending score order.
    boosted : `bool`, optional
        Use scores as boosts, scaled so the highest is ``boostMax``. Unboosted
        terms have boost 1.
    boostMax : `float`, optional
        Boost of the highest scoring term.

    Returns
    -------
    query : `QuerySpec`
        The query, empty when nothing was selected.
    """
    if not top:
        return QuerySpec()

    if not boosted:
        return QuerySpec.fromWords(s.representative for s in top)

    highest = max(s.score for s in top)
    return QuerySpec(tuple(QueryTerm(s.representative, boostMax * (s.score / highest)) for s in top))
