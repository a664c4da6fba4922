"""
Constituency parse trees in Penn Treebank bracketed notation: reading,
the rule-based POS retag correction, and depth-first serialization to tag
strings over which chunk patterns are matched.
"""


import logging
import re
from dataclasses import dataclass
from typing import Optional, Tuple

from nltk.tree import Tree


__all__ = ["ParseTreeError", "ParseNode", "ParseTree", "TagEntry", "TagString",
           "read_ptb", "retag", "serialize_tags", "tokens", "VERB_TAGS"]


logger = logging.getLogger(__name__)


VERB_TAGS = frozenset({"VB", "VBD", "VBN", "VBZ", "VBP", "VBG"})
"""Penn Treebank verb tags."""

ADJECTIVAL_VERBS = frozenset({"said", "claimed"})
"""Claim language words mistagged as verbs where they act as adjectives."""

CLAIM_NOUNS = {"claim": "NN", "claims": "NNS"}
"""Claim nouns mistagged as verbs and their correct noun tags."""

_PTB_TOKEN_RE = re.compile(r"\(|\)|[^\s()]+")


class ParseTreeError(ValueError):
    """Exception raised when a bracketed parse can not be read.

    Attributes:
        message -- explanation of the error
        offset -- character offset in the input at which the error occurred
    """

    def __init__(self, message="The parse is not valid", offset=None):
        self.message = message
        self.offset = offset
        super().__init__(f"{message} (at offset {offset})" if offset is not None else message)


@dataclass(frozen=True)
class ParseNode:
    """A node of a constituency tree.

    Leaves carry a token and a POS tag label; internal nodes carry a
    syntactic category label and children.
    """
    label: str
    token: Optional[str] = None
    children: Tuple["ParseNode", ...] = ()

    def __post_init__(self):
        if not self.label:
            raise ValueError("Parse nodes require a label.")
        if (self.token is None) == (not self.children):
            raise ValueError(f"Node {self.label} must have either a token or children.")

    @property
    def isLeaf(self):
        return self.token is not None

    def leaves(self):
        """Yields leaf nodes in sentence order."""
        if self.isLeaf:
            yield self
        else:
            for child in self.children:
                yield from child.leaves()

    def toPtb(self):
        """Returns the bracketed notation of the subtree."""
        if self.isLeaf:
            return f"({self.label} {self.token})"
        return f"({self.label} " + " ".join(c.toPtb() for c in self.children) + ")"


@dataclass(frozen=True)
class ParseTree:
    """An immutable constituency tree."""
    root: ParseNode

    def __str__(self):
        return self.root.toPtb()

    def leaves(self):
        return list(self.root.leaves())

    def toNltk(self):
        """Returns the tree as an `nltk.tree.Tree`, e.g. for pretty printing."""
        def convert(node):
            if node.isLeaf:
                return Tree(node.label, [node.token])
            return Tree(node.label, [convert(c) for c in node.children])
        return convert(self.root)


@dataclass(frozen=True)
class TagEntry:
    """One element of a tag string.

    Attributes
    ----------
    label : `str`
        Category or POS label.
    kind : `str`
        ``category`` for internal nodes, ``pos`` for leaves.
    token : `str` or `None`
        Token of a leaf.
    depth : `int`
        Depth of the node in the parse tree, root is 0.
    leafIndex : `int` or `None`
        Position of a leaf in the sentence.
    """
    label: str
    kind: str
    token: Optional[str] = None
    depth: int = 0
    leafIndex: Optional[int] = None

    def __str__(self):
        return self.label if self.token is None else f"{self.label}:{self.token}"


class TagString:
    """Depth-first, pre-order sequence of the labels of a parse tree.

    Entries keep their tree depth so that chunk patterns can recover the
    sibling and parent relations of the tree from the flat string.

    Parameters
    ----------
    entries : `iterable` [`TagEntry`]
        Entries in pre-order.
    """

    def __init__(self, entries):
        self.entries = tuple(entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, idx):
        return self.entries[idx]

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other):
        if not isinstance(other, TagString):
            return NotImplemented
        return self.entries == other.entries

    def __repr__(self):
        return f"{self.__class__.__name__}({self.render()!r})"

    def render(self):
        """Returns the space separated tag string, e.g. ``NP DT:the NN:system``."""
        return " ".join(str(e) for e in self.entries)

    def tokens(self):
        """Returns ``(token, pos)`` pairs of the token-bearing entries."""
        return [(e.token, e.label) for e in self.entries if e.token is not None]

    def spanEnd(self, idx):
        """Returns the index one past the last descendant of the entry."""
        depth = self.entries[idx].depth
        end = idx + 1
        while end < len(self.entries) and self.entries[end].depth > depth:
            end += 1
        return end

    def children(self, idx):
        """Returns indices of the direct children of the entry."""
        depth, end = self.entries[idx].depth, self.spanEnd(idx)
        return [i for i in range(idx + 1, end) if self.entries[i].depth == depth + 1]

    def parent(self, idx):
        """Returns the index of the parent entry, `None` for the root."""
        depth = self.entries[idx].depth
        for i in range(idx - 1, -1, -1):
            if self.entries[i].depth < depth:
                return i
        return None

    def previousSibling(self, idx):
        """Returns the index of the preceding sibling entry, or `None`."""
        parent = self.parent(idx)
        if parent is None:
            return None
        siblings = self.children(parent)
        position = siblings.index(idx)
        return siblings[position - 1] if position > 0 else None

    def leafEntries(self, idx):
        """Returns the leaf entries at or below the entry, in sentence order."""
        return [e for e in self.entries[idx:self.spanEnd(idx)] if e.token is not None]

    def firstLeaf(self, idx):
        """Returns the first leaf entry at or below the entry."""
        leaves = self.leafEntries(idx)
        return leaves[0] if leaves else None

    def leafWords(self, idx, count=None):
        """Returns lowercased tokens of the leaves below the entry."""
        words = [e.token.lower() for e in self.leafEntries(idx)]
        return words if count is None else words[:count]


class _Frame:
    """An open bracket while reading a tree."""

    def __init__(self, offset):
        self.offset = offset
        self.label = None
        self.token = None
        self.children = []


def read_ptb(text):
    """Reads a tree in Penn Treebank bracketed notation.

    An unlabeled outer bracket, ``( (S ...) )``, as written by CoreNLP and
    the Treebank files, is unwrapped.

    Parameters
    ----------
    text : `str`
        Balanced bracketed tree, leaves written as ``(POS token)``.

    Returns
    -------
    tree : `ParseTree`
        The tree.

    Raises
    ------
    ParseTreeError
        On unbalanced brackets, missing labels, nodes mixing a token with
        children, or input holding no or several trees. The error carries
        the character offset of the problem.
    """
    stack, root = [], None

    for match in _PTB_TOKEN_RE.finditer(text):
        tok, pos = match.group(), match.start()

        if tok == "(":
            if root is not None:
                raise ParseTreeError("more than one tree in input", pos)
            if stack and stack[-1].token is not None:
                raise ParseTreeError(f"node {stack[-1].label} mixes a token with children", pos)
            stack.append(_Frame(pos))

        elif tok == ")":
            if not stack:
                raise ParseTreeError("unexpected ')'", pos)
            frame = stack.pop()
            if frame.label is None:
                # only the outermost bracket may be unlabeled
                if stack or len(frame.children) != 1:
                    raise ParseTreeError("empty label", frame.offset)
                node = frame.children[0]
            elif frame.token is None and not frame.children:
                raise ParseTreeError(f"node {frame.label} has neither token nor children", frame.offset)
            else:
                node = ParseNode(frame.label, frame.token, tuple(frame.children))

            if stack:
                stack[-1].children.append(node)
            else:
                root = node

        else:
            if not stack:
                raise ParseTreeError(f"token {tok!r} outside of brackets", pos)
            frame = stack[-1]
            if frame.label is None and not frame.children:
                frame.label = tok
            elif frame.label is None:
                raise ParseTreeError("empty label", frame.offset)
            elif frame.children:
                raise ParseTreeError(f"node {frame.label} mixes a token with children", pos)
            elif frame.token is not None:
                raise ParseTreeError(f"leaf {frame.label} has more than one token", pos)
            else:
                frame.token = tok

    if stack:
        raise ParseTreeError("unbalanced brackets, unexpected end of input", len(text))
    if root is None:
        raise ParseTreeError("no tree in input", 0)

    return ParseTree(root)


def _relabelLeaves(node, relabel, counter):
    """Returns a copy of the subtree with leaf labels replaced by ``relabel``
    (leaf index -> label); ``counter`` tracks the leaf index."""
    if node.isLeaf:
        idx = counter[0]
        counter[0] += 1
        if idx in relabel:
            return ParseNode(relabel[idx], node.token)
        return node
    return ParseNode(node.label, None, tuple(_relabelLeaves(c, relabel, counter) for c in node.children))


def retag(tree):
    """Corrects POS tags claim language commonly receives wrongly.

    ``said`` and ``claimed`` tagged as verbs are relabeled ``JJ``; ``claim``
    and ``claims`` tagged as verbs and directly followed by a cardinal number
    are relabeled ``NN`` and ``NNS``. The tree shape and tokens are kept; the
    sentence is not re-parsed.

    Parameters
    ----------
    tree : `ParseTree`
        Parse of a claim.

    Returns
    -------
    tree : `ParseTree`
        Retagged tree, the input itself when nothing changes.
    """
    leaves = tree.leaves()
    relabel = {}
    for idx, leaf in enumerate(leaves):
        if leaf.label not in VERB_TAGS:
            continue
        word = leaf.token.lower()
        if word in ADJECTIVAL_VERBS:
            relabel[idx] = "JJ"
        elif word in CLAIM_NOUNS and idx + 1 < len(leaves) and leaves[idx + 1].label == "CD":
            relabel[idx] = CLAIM_NOUNS[word]

    if not relabel:
        return tree

    logger.debug(f"Retagged {len(relabel)} leaves: {[leaves[i].token for i in sorted(relabel)]}")
    return ParseTree(_relabelLeaves(tree.root, relabel, [0]))


def serialize_tags(tree):
    """Traverses the tree depth-first and emits every node's label.

    Parameters
    ----------
    tree : `ParseTree`
        Parse of a claim.

    Returns
    -------
    tags : `TagString`
        Labels in pre-order; leaf entries carry their token.
    """
    entries, leafCounter = [], 0
    stack = [(tree.root, 0)]
    while stack:
        node, depth = stack.pop()
        if node.isLeaf:
            entries.append(TagEntry(node.label, "pos", node.token, depth, leafCounter))
            leafCounter += 1
        else:
            entries.append(TagEntry(node.label, "category", None, depth))
            stack.extend((child, depth + 1) for child in reversed(node.children))
    return TagString(entries)


def tokens(tree):
    """Returns the ``(token, pos)`` pairs of the tree in sentence order."""
    return [(leaf.token, leaf.label) for leaf in tree.root.leaves()]
