"""
Extraction of claim dependencies from free-form claim text and computation
of claim depths within the resulting claim graph.
"""


import logging
import re
from dataclasses import dataclass
from types import MappingProxyType
from typing import FrozenSet, Mapping, Tuple

from corpus.models import Diagnostic


__all__ = ["ClaimGraph", "ClaimDepth", "extract_parent_refs",
           "build_claim_graph", "claim_depth"]


logger = logging.getLogger(__name__)


_CONNECTOR = r"(?:,|to|through|and/or|or|and|-|–|—)"

REFERENCE_RE = re.compile(
    rf"\bclaims?\s+(?P<refs>\d+(?:\s*{_CONNECTOR}\s*(?:claims?\s+)?\d+)*)",
    re.IGNORECASE
)
"""A claim reference: ``claim N``, ``claims N to M``, ``claims N, M or K``..."""

PRECEDING_RE = re.compile(
    r"\b(?:preceding|previous|foregoing)\s+claims?\b(?!\s*\d)",
    re.IGNORECASE
)
"""Reference to all earlier claims without explicit numbers."""

_REFTOKEN_RE = re.compile(rf"\d+|{_CONNECTOR}", re.IGNORECASE)

RANGE_CONNECTORS = {"to", "through", "-", "–", "—"}
"""Connectors that expand into an inclusive range of claim numbers."""


@dataclass(frozen=True)
class ClaimGraph:
    """Dependency structure over the claims of one document.

    Parameters
    ----------
    nodes : `frozenset` [`int`]
        Claim numbers.
    parents : `dict` [`int`, `tuple` [`int`]]
        Ascending parent claim numbers of every claim; empty for
        independent claims.

    Raises
    ------
    ValueError
        When a parent is not a node or is not smaller than its child.
    """
    nodes: FrozenSet[int]
    parents: Mapping[int, Tuple[int, ...]]

    def __post_init__(self):
        nodes = frozenset(self.nodes)
        parents = {num: tuple(self.parents.get(num, ())) for num in sorted(nodes)}
        for child, parentNums in parents.items():
            for parent in parentNums:
                if parent not in nodes:
                    raise ValueError(f"Parent claim {parent} of claim {child} is not a node.")
                if parent >= child:
                    raise ValueError(f"Parent claim {parent} is not smaller than claim {child}.")
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "parents", MappingProxyType(parents))

    def roots(self):
        """Independent claims, ascending."""
        return [num for num, parents in self.parents.items() if not parents]

    def children(self, num):
        """Claims directly depending on the given claim, ascending."""
        return [child for child, parents in self.parents.items() if num in parents]


@dataclass(frozen=True)
class ClaimDepth:
    """Depth ``cd`` of every claim, 1 for independent claims."""
    depths: Mapping[int, int]

    def __getitem__(self, num):
        return self.depths[num]

    def get(self, num, default=None):
        return self.depths.get(num, default)


def _expandReferences(refs):
    """Expands ``"3 to 5, 7 or 9"`` into ``[3, 4, 5, 7, 9]``."""
    numbers = []
    pendingRange = False
    for token in _REFTOKEN_RE.findall(refs):
        if token.isdigit():
            num = int(token)
            if pendingRange and numbers:
                start = numbers[-1]
                low, high = min(start, num), max(start, num)
                numbers.extend(range(low, high + 1))
            else:
                numbers.append(num)
            pendingRange = False
        elif token.lower() in RANGE_CONNECTORS:
            pendingRange = True
        else:
            pendingRange = False
    return numbers


def extract_parent_refs(claim_text, own_number, diagnostics=None, docId=None):
    """Returns the claim numbers a claim refers to.

    Recognizes, case-insensitively, ``claim N``, ranges written with ``to``,
    hyphens, en- or em-dashes, ``or``/``and`` and comma separated lists, and
    references to all the "preceding claims" without explicit numbers, which
    expand to every earlier claim.

    Parameters
    ----------
    claim_text : `str`
        Text of the claim.
    own_number : `int`
        Number of the claim, at least 1.
    diagnostics : `list` or `None`, optional
        When given, a `corpus.models.Diagnostic` is appended for every
        dropped forward or self reference.
    docId : `str` or `None`, optional
        Document identifier used in diagnostics.

    Returns
    -------
    parents : `list` [`int`]
        Referenced claim numbers, deduplicated and ascending.

    Raises
    ------
    ValueError
        When ``own_number`` is smaller than 1.
    """
    if own_number < 1:
        raise ValueError(f"Claim number must be positive, got {own_number}.")

    referenced = set()
    for match in REFERENCE_RE.finditer(claim_text):
        referenced.update(_expandReferences(match.group("refs")))

    if not referenced and PRECEDING_RE.search(claim_text):
        referenced.update(range(1, own_number))

    dropped = sorted(num for num in referenced if num >= own_number)
    if dropped:
        message = f"dropped forward or self reference(s) to claim(s) {dropped}"
        logger.debug(f"{docId or '<doc>'} claim {own_number}: {message}")
        if diagnostics is not None:
            diagnostics.append(Diagnostic("warning", "claimgraph", message, docId, own_number))

    return sorted(num for num in referenced if 1 <= num < own_number)


def build_claim_graph(doc, diagnostics=None):
    """Builds the claim graph of a document.

    References to claim numbers the document does not contain are dropped
    and reported.

    Parameters
    ----------
    doc : `corpus.models.ClaimDocument`
        Document whose claims are linked.
    diagnostics : `list` or `None`, optional
        Receives the non-fatal problems found.

    Returns
    -------
    graph : `ClaimGraph`
        Claim graph of the document.
    """
    nodes = set(doc.claimNumbers)
    parents = {}
    for claim in doc.claims:
        refs = extract_parent_refs(claim.text, claim.num, diagnostics, doc.doc_id)
        unknown = [num for num in refs if num not in nodes]
        if unknown and diagnostics is not None:
            diagnostics.append(Diagnostic("warning", "claimgraph",
                                          f"reference(s) to missing claim(s) {unknown}",
                                          doc.doc_id, claim.num))
        parents[claim.num] = tuple(num for num in refs if num in nodes)

    return ClaimGraph(frozenset(nodes), parents)


def claim_depth(graph):
    """Computes the depth of every claim in the claim graph.

    Independent claims have depth 1, a dependent claim is one deeper than
    its deepest parent. Claims are visited in ascending number, which is a
    topological order because parents are always smaller than children.

    Parameters
    ----------
    graph : `ClaimGraph`
        Claim graph.

    Returns
    -------
    depth : `ClaimDepth`
        Depth of every node.
    """
    depths = {}
    for num in sorted(graph.nodes):
        parents = graph.parents[num]
        depths[num] = 1 + max((depths[p] for p in parents), default=0)
    return ClaimDepth(MappingProxyType(depths))
