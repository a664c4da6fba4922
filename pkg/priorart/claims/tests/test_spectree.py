import json
import os
import unittest

from hypothesis import given, settings, strategies as st

from claims.parsetree import read_ptb, retag, serialize_tags, tokens
from claims.patterns import COMPOSITION, SPECIALIZATION, ChunkPattern, match_patterns
from claims.spectree import (PositionIndex, SpecializationTree, SpecNode, WordPosition, build_spec_tree,
                             document_trees, dump_tree, filter_stopwords, word_positions)
from corpus.models import Claim, ClaimDocument, ParseStore


TESTDIR = os.path.abspath(os.path.dirname(__file__))
DATADIR = os.path.join(TESTDIR, "data")


COORDINATED = ("(NP (NP (NN system)) (VP (VBG comprising) (NP (NP (DT this)) (CC and) (NP (DT that)))))")

NESTED = ("(NP (NP (DT A) (NN cap)) (VP (VBN made) (PP (IN of) (NP (NP (DT this)) (, ,) "
          "(SBAR (WHNP (WDT which)) (S (VP (VBZ is) (PP (IN on) (NP (NP (NN top)) (PP (IN of) "
          "(NP (NP (DT this)) (CC and) (NP (DT that)))))))))))) (. .))")


def readClaim37():
    with open(os.path.join(DATADIR, "claim37.jsonl")) as f:
        record = json.loads(f.readline())
    with open(os.path.join(DATADIR, "claim37_tree.txt")) as f:
        expected = f.read()
    return read_ptb(record["ptb"]), expected


class FilterStopwordsTestCase(unittest.TestCase):

    def testFilter(self):
        """Test stopwords, numbers, punctuation and function tags are removed."""
        cases = [
            ([("the", "DT"), ("system", "NN")], ["system"]),
            (["A", "pump", "with", "3", "valves", "."], ["pump", "valves"]),
            ([("said", "JJ"), ("Pump", "NN")], ["pump"]),
            ([("one", "CD"), ("or", "CC"), ("more", "JJR")], ["more"]),
            (["one", "-LRB-", "1.5", "-RRB-"], ["one"]),
            ([], []),
        ]
        for items, expected in cases:
            with self.subTest(items=items):
                self.assertEqual(filter_stopwords(items), expected)


class MatchPatternsTestCase(unittest.TestCase):

    def testRegistry(self):
        """Test all chunk patterns are registered by name."""
        self.assertEqual(set(ChunkPattern.patterns),
                         {"composition", "relative_clause", "characterizing", "prepositional", "predicate"})

    def testCoordination(self):
        """Test each conjunct of a composed object opens a boundary under the
        same anchor."""
        boundaries = match_patterns(serialize_tags(read_ptb(COORDINATED)))
        self.assertEqual([(b.kind, b.position) for b in boundaries], [(COMPOSITION, 2), (COMPOSITION, 4)])
        self.assertEqual(boundaries[0].anchor, boundaries[1].anchor)

    def testNested(self):
        """Test a composition followed by a relative clause."""
        tags = serialize_tags(read_ptb(NESTED))
        boundaries = match_patterns(tags)
        self.assertEqual([(b.kind, b.position, b.pattern) for b in boundaries],
                         [(COMPOSITION, 4, "composition"), (SPECIALIZATION, 6, "relative_clause")])

        onlyComposition = match_patterns(tags, patterns=["composition"])
        self.assertEqual([b.position for b in onlyComposition], [4])

    def testSinglePatterns(self):
        """Test patterns on minimal phrases."""
        cases = {
            "(NP (DT a) (JJ red) (NN pump))": [],
            "(NP (NP (DT A) (NN pump)) (PP (IN with) (NP (DT a) (NN valve))) (. .))":
                [(SPECIALIZATION, 2, "prepositional")],
            "(NP (NP (DT A) (NN pump)) (VP (VBN characterized) (PP (IN by) (NP (DT a) (NN rotor)))) (. .))":
                [(SPECIALIZATION, 2, "characterizing")],
            "(S (NP (NN Pump)) (VP (VBZ works)))": [(SPECIALIZATION, 1, "predicate")],
            "(SBAR (WHADVP (WRB wherein)) (S (NP (DT the) (NN pump)) (VP (VBZ is) (ADJP (JJ portable)))))":
                [(SPECIALIZATION, 3, "predicate")],
            "(SBAR (JJ such) (IN that) (S (NP (DT the) (NN pump)) (VP (VBZ is) (ADJP (JJ portable)))))": [],
        }
        for ptb, expected in cases.items():
            with self.subTest(ptb=ptb):
                boundaries = match_patterns(serialize_tags(read_ptb(ptb)))
                self.assertEqual([(b.kind, b.position, b.pattern) for b in boundaries], expected)

    def testClaim37(self):
        """Test the boundaries of a long characterizing claim."""
        tree, _ = readClaim37()
        boundaries = match_patterns(serialize_tags(retag(tree)))
        self.assertEqual([b.pattern for b in boundaries], ["characterizing", "predicate"])
        leaves = tree.leaves()
        self.assertEqual([leaves[b.position].token for b in boundaries], ["characterized", "can"])


class BuildSpecTreeTestCase(unittest.TestCase):

    def testClaim37(self):
        """Test the tree of a long claim against its golden rendering."""
        tree, expected = readClaim37()
        spectree = build_spec_tree(retag(tree), cd=2)
        self.assertEqual(dump_tree(spectree), expected)
        self.assertEqual(spectree.depth, 3)
        self.assertEqual(spectree.cd, 2)

    def testCoordination(self):
        """Test coordinated components become siblings."""
        spectree = build_spec_tree(read_ptb(COORDINATED))
        self.assertEqual(dump_tree(spectree), "system\n  this\n  that\n")
        self.assertEqual([str(n) for n in spectree.root.children], ["this", "that"])

    def testNested(self):
        """Test a specialization attaches below the component it qualifies."""
        spectree = build_spec_tree(read_ptb(NESTED))
        self.assertEqual(dump_tree(spectree), "cap\n  this\n    is top this that\n")

    def testSingleNode(self):
        """Test claims without boundaries or content words."""
        single = build_spec_tree(read_ptb("(NP (DT a) (JJ red) (NN pump))"))
        self.assertEqual(dump_tree(single), "red pump\n")
        self.assertEqual(single.root.children, [])

        empty = build_spec_tree(read_ptb("(NP (DT the) (. .))"))
        self.assertEqual(empty.root.tokens, [])
        self.assertEqual(empty.words(), [])

        with self.assertRaises(ValueError):
            SpecializationTree(SpecNode(["pump"]), cd=0)

    def testTokenConservation(self):
        """Test every content word lands in exactly one node."""
        claim37, _ = readClaim37()
        for tree in (read_ptb(COORDINATED), read_ptb(NESTED), retag(claim37)):
            with self.subTest(tree=str(tree)[:40]):
                spectree = build_spec_tree(tree)
                self.assertEqual(sorted(spectree.words()), sorted(filter_stopwords(tokens(tree))))


def chain(length):
    root = node = SpecNode(["w0"])
    for i in range(1, length):
        child = SpecNode([f"w{i}"])
        node.children.append(child)
        node = child
    return root


class WordPositionsTestCase(unittest.TestCase):

    def testRepeatedWord(self):
        """Test a word in two nodes keeps both positions."""
        tree, _ = readClaim37()
        index = word_positions([build_spec_tree(retag(tree), cd=2)])
        self.assertEqual(index["iteration"], [WordPosition(2, 2, 2), WordPosition(3, 1, 2)])
        self.assertEqual(index["method"], [WordPosition(1, 3, 2)])
        self.assertEqual(index.count("solution"), 2)
        self.assertNotIn("the", index)

    def testClaimDepthOverride(self):
        """Test ``(tree, cd)`` pairs and accumulation into an index."""
        spectree = SpecializationTree(SpecNode(["pump"], [SpecNode(["rotor"])]), cd=1)
        index = word_positions([spectree, (spectree, 3)])
        self.assertEqual(index["rotor"], [WordPosition(2, 1, 1), WordPosition(2, 1, 3)])
        self.assertEqual(index.words(), ["pump", "rotor"])
        self.assertEqual(index.totalPositions(), 4)

        extended = word_positions([spectree], index)
        self.assertIs(extended, index)
        self.assertEqual(index.count("pump"), 3)

    def testEmpty(self):
        self.assertEqual(word_positions([]), PositionIndex())
        self.assertEqual(len(word_positions([SpecializationTree(SpecNode([]))])), 0)

    @settings(max_examples=50, deadline=None)
    @given(st.integers(min_value=1, max_value=30))
    def testChainGeometry(self, length):
        """Test nd + nh - 1 equals the length of a chain."""
        spectree = SpecializationTree(chain(length))
        for _, geom in spectree.geometry():
            self.assertEqual(geom.nd + geom.nh - 1, length)
        self.assertEqual(spectree.depth, length)


class DocumentTreesTestCase(unittest.TestCase):

    def testDocumentTrees(self):
        """Test trees carry claim depths and missing parses are reported."""
        doc = ClaimDocument("EP-T1", claims=(
            Claim(1, "A pump comprising a rotor and a valve."),
            Claim(2, "The pump according to claim 1, wherein the rotor is ceramic."),
            Claim(3, "The pump according to claim 2, wherein the valve is steel."),
            Claim(4, "The pump according to claim 1."),
        ))
        parses = ParseStore({
            ("EP-T1", 1): "(ROOT (NP (NP (DT A) (NN pump)) (VP (VBG comprising) (NP (NP (DT a) (NN rotor)) "
                          "(CC and) (NP (DT a) (NN valve)))) (. .)))",
            ("EP-T1", 2): "(ROOT (NP (NP (DT The) (NN pump)) (VP (VBG according) (PP (TO to) (NP (NN claim) "
                          "(CD 1)))) (, ,) (SBAR (WHADVP (WRB wherein)) (S (NP (DT the) (NN rotor)) "
                          "(VP (VBZ is) (ADJP (JJ ceramic))))) (. .)))",
            ("EP-T1", 4): "(ROOT (NP (DT The) (NN pump)",
        })
        diagnostics = []
        trees = document_trees(doc, parses, diagnostics=diagnostics)

        self.assertEqual([t.cd for t in trees], [1, 2])
        self.assertEqual(dump_tree(trees[0]), "pump\n  rotor\n  valve\n")
        self.assertEqual(dump_tree(trees[1]), "pump according claim\n  rotor\n    is ceramic\n")
        self.assertEqual([(d.claimNum, d.level) for d in diagnostics], [(3, "warning"), (4, "warning")])


if __name__ == "__main__":
    unittest.main()
