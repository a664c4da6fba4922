"""
Folding of claim sentences into specialization trees and the word positions
(node depth, node height, claim depth) read off those trees.
"""


import logging
from dataclasses import dataclass, field
from typing import List, NamedTuple

from corpus.models import Diagnostic

from .claimgraph import build_claim_graph, claim_depth
from .parsetree import ParseTreeError, read_ptb, retag, serialize_tags
from .patterns import COMPOSITION, match_patterns
from .text import filter_stopwords


__all__ = ["SpecNode", "NodeGeometry", "SpecializationTree", "WordPosition",
           "PositionIndex", "filter_stopwords", "build_spec_tree",
           "word_positions", "dump_tree", "document_trees"]


logger = logging.getLogger(__name__)


@dataclass
class SpecNode:
    """A chunk of a claim: its content words and the chunks that compose or
    specialize it."""
    tokens: List[str] = field(default_factory=list)
    children: List["SpecNode"] = field(default_factory=list)

    def __str__(self):
        return " ".join(self.tokens)


class NodeGeometry(NamedTuple):
    """Depth (root is 1) and height (leaves are 1) of a node."""
    nd: int
    nh: int


class WordPosition(NamedTuple):
    """Where a word occurs: node depth, node height and claim depth."""
    nd: int
    nh: int
    cd: int


class SpecializationTree:
    """The specialization tree of one claim.

    Parameters
    ----------
    root : `SpecNode`
        The claim's leading chunk.
    cd : `int`
        Depth of the claim in its document's claim graph.
    """

    def __init__(self, root, cd=1):
        if cd < 1:
            raise ValueError(f"Claim depth must be positive, got {cd}.")
        self.root = root
        self.cd = cd

    def __repr__(self):
        return f"{self.__class__.__name__}(cd={self.cd}, nodes={len(self.nodes())}, depth={self.depth})"

    def nodes(self):
        """Nodes in depth-first pre-order."""
        ordered, stack = [], [self.root]
        while stack:
            node = stack.pop()
            ordered.append(node)
            stack.extend(reversed(node.children))
        return ordered

    def geometry(self):
        """Returns ``(node, NodeGeometry)`` pairs in depth-first pre-order."""
        heights = {}

        def height(node):
            h = 1 + max((height(c) for c in node.children), default=0)
            heights[id(node)] = h
            return h
        height(self.root)

        pairs, stack = [], [(self.root, 1)]
        while stack:
            node, nd = stack.pop()
            pairs.append((node, NodeGeometry(nd, heights[id(node)])))
            stack.extend((c, nd + 1) for c in reversed(node.children))
        return pairs

    @property
    def depth(self):
        """Number of nodes on the longest root to leaf path."""
        return max(geom.nd for _, geom in self.geometry())

    def words(self):
        """Content words of all nodes in depth-first pre-order."""
        return [tok for node in self.nodes() for tok in node.tokens]


class PositionIndex:
    """Multisets of word positions accumulated over the claims of one
    document."""

    def __init__(self):
        self._positions = {}

    def __len__(self):
        return len(self._positions)

    def __contains__(self, word):
        return word in self._positions

    def __getitem__(self, word):
        return self._positions[word]

    def __eq__(self, other):
        if not isinstance(other, PositionIndex):
            return NotImplemented
        return self._positions == other._positions

    def add(self, word, position):
        self._positions.setdefault(word, []).append(position)

    def words(self):
        """Indexed words, sorted."""
        return sorted(self._positions)

    def items(self):
        """``(word, positions)`` pairs in sorted word order."""
        return [(w, list(self._positions[w])) for w in self.words()]

    def count(self, word):
        """Number of occurrences of the word."""
        return len(self._positions.get(word, ()))

    def totalPositions(self):
        return sum(len(p) for p in self._positions.values())


def _segments(tokens, boundaries):
    """Cuts the sentence at the boundaries.

    Returns ``(boundary, words)`` pairs; the leading segment has no
    boundary.
    """
    cuts = [None] + list(boundaries)
    starts = [0] + [b.position for b in boundaries]
    ends = starts[1:] + [len(tokens)]
    return [(b, filter_stopwords(tokens[s:e])) for b, s, e in zip(cuts, starts, ends)]


def build_spec_tree(tree, cd=1, patterns=None):
    """Folds a parsed claim into its specialization tree.

    The filtered token sequence is segmented at the boundaries found by the
    chunk patterns. A specialization boundary attaches its segment as a
    child of the most recent segment. A composition boundary attaches its
    segment as a child of the head its trigger chunk belongs to, so that
    coordinated components become siblings. Segments without content words
    are skipped.

    Parameters
    ----------
    tree : `claims.parsetree.ParseTree`
        Parse of the claim, retagged or not.
    cd : `int`, optional
        Depth of the claim in the claim graph.
    patterns : `iterable` [`str`] or `None`, optional
        Chunk patterns to apply, all registered patterns by default.

    Returns
    -------
    spectree : `SpecializationTree`
        The tree; a single node when no pattern matches.
    """
    tags = serialize_tags(tree)
    segments = [(b, words) for b, words in _segments(tags.tokens(), match_patterns(tags, patterns)) if words]

    if not segments:
        return SpecializationTree(SpecNode([]), cd)

    root = SpecNode(segments[0][1])
    current, heads = root, {}
    for boundary, words in segments[1:]:
        node = SpecNode(words)
        if boundary.kind == COMPOSITION:
            heads.setdefault(boundary.anchor, current).children.append(node)
        else:
            current.children.append(node)
        current = node

    return SpecializationTree(root, cd)


def word_positions(trees, index=None):
    """Reads the position of every word occurrence off the trees.

    Parameters
    ----------
    trees : `iterable`
        `SpecializationTree` instances, or ``(tree, cd)`` pairs overriding
        the tree's claim depth.
    index : `PositionIndex` or `None`, optional
        Index to extend, a new one by default.

    Returns
    -------
    index : `PositionIndex`
        Positions of all words; repeated occurrences are kept.
    """
    index = PositionIndex() if index is None else index
    for item in trees:
        spectree, cd = item if isinstance(item, tuple) else (item, item.cd)
        for node, geom in spectree.geometry():
            for word in node.tokens:
                index.add(word, WordPosition(geom.nd, geom.nh, cd))
    return index


def dump_tree(spectree, indent="  "):
    """Renders a tree as text, one node per line, indented by level."""
    return "\n".join(f"{indent * (geom.nd - 1)}{node}" for node, geom in spectree.geometry()) + "\n"


def document_trees(doc, parses, retagged=True, diagnostics=None, patterns=None):
    """Builds the specialization trees of all parsed claims of a document.

    Claims without a parse, or whose parse can not be read, are skipped and
    reported.

    Parameters
    ----------
    doc : `corpus.models.ClaimDocument`
        Document.
    parses : `corpus.models.ParseStore`
        Claim parses.
    retagged : `bool`, optional
        Apply the POS retag correction before matching.
    diagnostics : `list` or `None`, optional
        Receives the non-fatal problems found.
    patterns : `iterable` [`str`] or `None`, optional
        Chunk patterns to apply.

    Returns
    -------
    trees : `list` [`SpecializationTree`]
        Trees in claim order.
    """
    diagnostics = [] if diagnostics is None else diagnostics
    depths = claim_depth(build_claim_graph(doc, diagnostics))

    trees = []
    for claim in doc.claims:
        ptb = parses.get(doc.doc_id, claim.num)
        if ptb is None:
            logger.warning(f"{doc.doc_id} claim {claim.num}: no parse, claim skipped.")
            diagnostics.append(Diagnostic("warning", "parses", "missing parse, claim skipped",
                                          doc.doc_id, claim.num))
            continue
        try:
            tree = read_ptb(ptb)
        except ParseTreeError as e:
            logger.warning(f"{doc.doc_id} claim {claim.num}: unreadable parse, {e.message}.")
            diagnostics.append(Diagnostic("warning", "parses", f"unreadable parse: {e}",
                                          doc.doc_id, claim.num))
            continue

        if retagged:
            tree = retag(tree)
        trees.append(build_spec_tree(tree, depths[claim.num], patterns))

    return trees
