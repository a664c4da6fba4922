"""
Chunk patterns that mark where a claim sentence folds into a new node of its
specialization tree.
"""


import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass


__all__ = ["COMPOSITION", "SPECIALIZATION", "Boundary", "ChunkPattern",
           "match_patterns"]


logger = logging.getLogger(__name__)


COMPOSITION = "composition"
SPECIALIZATION = "specialization"

PUNCTUATION_TAGS = frozenset({",", ".", ":", "``", "''", "-LRB-", "-RRB-", "HYPH"})


@dataclass(frozen=True)
class Boundary:
    """A point in the sentence where a new child chunk begins.

    Attributes
    ----------
    kind : `str`
        ``composition`` or ``specialization``.
    position : `int`
        Sentence (leaf) index of the first token of the new chunk.
    anchor : `int`
        Tag-string index of the chunk that triggered the boundary. Composition
        boundaries sharing an anchor are siblings under one head.
    pattern : `str`
        Name of the pattern that produced the boundary.
    """
    kind: str
    position: int
    anchor: int
    pattern: str = ""


class ChunkPattern(ABC):
    """Supports matching one chunk configuration against tag strings.

    Patterns are stateless; subclasses declaring a `name` are registered and
    applied by `match_patterns`.
    """

    patterns = dict()
    """All registered chunk patterns."""

    name = None
    """Pattern's name. Only named patterns will be registered."""

    kind = None
    """Kind of boundary the pattern produces."""

    def __init_subclass__(cls, **kwargs):
        name = getattr(cls, "name", False)
        if name and name is not None:
            super().__init_subclass__(**kwargs)
            ChunkPattern.patterns[cls.name] = cls

    def boundary(self, tags, entryIdx, anchor):
        """Returns a boundary before the first leaf below the given entry."""
        leaf = tags.firstLeaf(entryIdx)
        return Boundary(self.kind, leaf.leafIndex, anchor, self.name)

    @abstractmethod
    def match(self, tags):
        """Finds the boundaries this pattern marks in a tag string.

        Parameters
        ----------
        tags : `claims.parsetree.TagString`
            Tag string of a claim.

        Returns
        -------
        boundaries : `list` [`Boundary`]
            Boundaries, in any order.
        """
        raise NotImplementedError()


class CompositionPattern(ChunkPattern):
    """``X comprising A and B``: a participial or verbal chunk headed by a
    composition verb, followed by its object noun phrase. Every conjunct of a
    coordinated object opens a sibling child of the head."""

    name = "composition"
    kind = COMPOSITION

    verbs = frozenset({
        "comprising", "comprises", "comprise", "comprised",
        "including", "includes", "include",
        "containing", "contains", "contain",
        "consisting", "consists", "consist",
        "having", "has", "have",
        "composed", "made",
    })
    """Heads of composition chunks."""

    @staticmethod
    def _conjuncts(tags, npIdx):
        """Returns the coordinated members of a noun phrase, or the noun
        phrase itself when it is not a coordination."""
        kids = tags.children(npIdx)
        hasCoordinator = any(tags[k].label == "CC" for k in kids)
        members = [k for k in kids if tags[k].label != "CC" and tags[k].label not in PUNCTUATION_TAGS]
        if hasCoordinator and len(members) > 1 and len({tags[k].label for k in members}) == 1:
            return members
        return [npIdx]

    @staticmethod
    def _object(tags, kids):
        """Returns the index of the object noun phrase among the chunk's
        children following its head, or `None`."""
        phrase = next((k for k in kids[1:] if tags[k].kind == "category"), None)
        if phrase is None:
            return None

        label = tags[phrase].label
        if label == "NP":
            return phrase
        if label == "PP" and tags.leafWords(phrase, 1) == ["of"]:
            return next((k for k in tags.children(phrase) if tags[k].label == "NP"), None)
        return None

    def match(self, tags):
        boundaries = []
        for idx, entry in enumerate(tags):
            if entry.label != "VP" or entry.kind != "category":
                continue
            kids = tags.children(idx)
            head = tags[kids[0]] if kids else None
            if head is None or head.token is None or head.token.lower() not in self.verbs:
                continue

            obj = self._object(tags, kids)
            if obj is None:
                continue
            for member in self._conjuncts(tags, obj):
                boundaries.append(self.boundary(tags, member, idx))
        return boundaries


class RelativeClausePattern(ChunkPattern):
    """``X, which ...``, ``wherein ...``, ``whereby ...``."""

    name = "relative_clause"
    kind = SPECIALIZATION

    openers = frozenset({"which", "wherein", "whereby"})

    def match(self, tags):
        boundaries = []
        for idx, entry in enumerate(tags):
            if entry.label == "SBAR" and tags.leafWords(idx, 1)[:1] and tags.leafWords(idx, 1)[0] in self.openers:
                boundaries.append(self.boundary(tags, idx, idx))
        return boundaries


class CharacterizingPattern(ChunkPattern):
    """``X, characterized in that ...`` and ``characterized by ...``."""

    name = "characterizing"
    kind = SPECIALIZATION

    openers = frozenset({"characterized", "characterised", "characterizing", "characterising"})

    def match(self, tags):
        leaves = [(idx, e) for idx, e in enumerate(tags) if e.token is not None]
        boundaries = []
        for i, (idx, entry) in enumerate(leaves[:-1]):
            if entry.token.lower() not in self.openers:
                continue
            following = [e.token.lower() for _, e in leaves[i+1:i+3]]
            if following[:2] == ["in", "that"] or following[:1] == ["by"]:
                boundaries.append(Boundary(self.kind, entry.leafIndex, idx, self.name))
        return boundaries


class PrepositionalPattern(ChunkPattern):
    """``X with Y`` and ``X on top of Y`` where the prepositional phrase
    follows a completed noun phrase."""

    name = "prepositional"
    kind = SPECIALIZATION

    openers = (("with",), ("on", "top", "of"))

    def match(self, tags):
        boundaries = []
        for idx, entry in enumerate(tags):
            if entry.label != "PP":
                continue
            words = tags.leafWords(idx, 3)
            if not any(tuple(words[:len(opener)]) == opener for opener in self.openers):
                continue
            sibling = tags.previousSibling(idx)
            if sibling is not None and tags[sibling].label == "NP":
                boundaries.append(self.boundary(tags, idx, idx))
        return boundaries


class PredicatePattern(ChunkPattern):
    """``X can provide Y``, ``X is Y``: the finite predicate of a clause
    following its subject noun phrase. Clauses of a result clause (``such
    that``, ``so that``) stay with the chunk they qualify."""

    name = "predicate"
    kind = SPECIALIZATION

    finiteTags = frozenset({"MD", "VBZ", "VBP", "VBD"})
    resultOpeners = (["such", "that"], ["so", "that"])

    def _isResultClause(self, tags, clauseIdx):
        outer = tags.parent(clauseIdx)
        return (outer is not None and tags[outer].label == "SBAR"
                and tags.leafWords(outer, 2) in self.resultOpeners)

    def match(self, tags):
        boundaries = []
        for idx, entry in enumerate(tags):
            if entry.label != "VP":
                continue
            clause = tags.parent(idx)
            if clause is None or tags[clause].label != "S":
                continue
            subject = tags.previousSibling(idx)
            if subject is None or tags[subject].label != "NP":
                continue
            first = tags.firstLeaf(idx)
            if first is None or first.label not in self.finiteTags:
                continue
            if self._isResultClause(tags, clause):
                continue
            boundaries.append(self.boundary(tags, idx, idx))
        return boundaries


def match_patterns(tags, patterns=None):
    """Finds where new child chunks begin in a claim's tag string.

    Boundaries at the same position are merged, specialization taking
    precedence over composition. A boundary at the first token is dropped,
    the leading chunk always opens the tree.

    Parameters
    ----------
    tags : `claims.parsetree.TagString`
        Tag string of a (retagged or raw) parse.
    patterns : `iterable` [`str`] or `None`, optional
        Names of the registered patterns to apply, all by default.

    Returns
    -------
    boundaries : `list` [`Boundary`]
        Boundaries with strictly increasing positions.
    """
    names = sorted(ChunkPattern.patterns) if patterns is None else list(patterns)

    found = []
    for name in names:
        found.extend(ChunkPattern.patterns[name]().match(tags))

    def order(boundary):
        return (boundary.position, boundary.kind != SPECIALIZATION, boundary.anchor)
    found.sort(key=order)

    boundaries, seen = [], set()
    for boundary in found:
        if boundary.position == 0 or boundary.position in seen:
            continue
        seen.add(boundary.position)
        boundaries.append(boundary)

    logger.debug(f"Matched boundaries: {[(b.kind, b.position, b.pattern) for b in boundaries]}")
    return boundaries
