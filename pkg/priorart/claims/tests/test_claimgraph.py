import unittest

from hypothesis import given, settings, strategies as st

from claims.claimgraph import ClaimGraph, build_claim_graph, claim_depth, extract_parent_refs
from corpus.models import Claim, ClaimDocument


class ParentRefsTestCase(unittest.TestCase):

    def testReferences(self):
        """Test the claim reference phrasings."""
        cases = [
            ("The lubricant concentrate according to claim 3", 7, [3]),
            ("The lubricant concentrate according to any one of claims 3 to 5", 7, [3, 4, 5]),
            ("The lubricant concentrate according to any one of claims 3 – 6", 7, [3, 4, 5, 6]),
            ("Method according to one or more of the preceding claims 25 to 36", 37, list(range(25, 37))),
            ("The device of claims 1, 2 or 4", 5, [1, 2, 4]),
            ("The device of claim 1 and claim 3", 5, [1, 3]),
            ("The device of CLAIMS 2-3", 5, [2, 3]),
            ("The device according to any one of the preceding claims", 4, [1, 2, 3]),
            ("A device comprising a pump.", 1, []),
        ]
        for text, num, expected in cases:
            with self.subTest(text=text):
                self.assertEqual(extract_parent_refs(text, num), expected)

    def testForwardReferencesDropped(self):
        """Test forward and self references are dropped and reported."""
        diagnostics = []
        refs = extract_parent_refs("The pump of claims 2 to 6", 4, diagnostics, "EP-1")
        self.assertEqual(refs, [2, 3])
        self.assertEqual(len(diagnostics), 1)
        self.assertEqual(diagnostics[0].claimNum, 4)
        self.assertIn("[4, 5, 6]", diagnostics[0].message)

        with self.assertRaises(ValueError):
            extract_parent_refs("claim 1", 0)


def document(*texts):
    return ClaimDocument("EP-1", claims=tuple(Claim(i, t) for i, t in enumerate(texts, start=1)))


class ClaimGraphTestCase(unittest.TestCase):

    def testBuildClaimGraph(self):
        """Test chains, independent claims and alternative parents."""
        chain = build_claim_graph(document("A pump.", "The pump of claim 1.", "The pump of claim 2."))
        self.assertEqual(dict(chain.parents), {1: (), 2: (1, ), 3: (2, )})
        self.assertEqual(chain.children(1), [2])

        independent = build_claim_graph(document("A pump.", "A valve."))
        self.assertEqual(independent.roots(), [1, 2])

        alternatives = build_claim_graph(document("A pump.", "A valve.", "The device of claims 1 or 2."))
        self.assertEqual(alternatives.parents[3], (1, 2))

    def testMissingClaims(self):
        """Test references to claims the document lacks are dropped."""
        doc = ClaimDocument("EP-1", claims=(Claim(1, "A pump."), Claim(3, "The pump of claim 2.")))
        diagnostics = []
        graph = build_claim_graph(doc, diagnostics)
        self.assertEqual(graph.parents[3], ())
        self.assertEqual(len(diagnostics), 1)

    def testInvalidGraph(self):
        """Test parents must be smaller, existing claims."""
        with self.assertRaises(ValueError):
            ClaimGraph(frozenset({1, 2}), {1: (2, )})
        with self.assertRaises(ValueError):
            ClaimGraph(frozenset({2}), {2: (1, )})

    def testClaimDepth(self):
        """Test depths of a chain, a single claim and a diamond."""
        chain = ClaimGraph(frozenset({1, 2, 3}), {2: (1, ), 3: (2, )})
        self.assertEqual(dict(claim_depth(chain).depths), {1: 1, 2: 2, 3: 3})

        single = ClaimGraph(frozenset({1}), {})
        self.assertEqual(claim_depth(single)[1], 1)

        diamond = ClaimGraph(frozenset({1, 2, 3, 4}), {2: (1, ), 3: (1, ), 4: (2, 3)})
        self.assertEqual(claim_depth(diamond)[4], 3)


@st.composite
def graphs(draw):
    size = draw(st.integers(min_value=1, max_value=8))
    parents = {}
    for num in range(1, size + 1):
        parents[num] = tuple(sorted(draw(st.sets(st.integers(min_value=1, max_value=num - 1), max_size=3))
                                    if num > 1 else ()))
    return ClaimGraph(frozenset(range(1, size + 1)), parents)


class ClaimDepthPropertiesTestCase(unittest.TestCase):

    @settings(max_examples=200, deadline=None)
    @given(graphs())
    def testDepthBounds(self, graph):
        """Test 1 <= cd(c) <= c."""
        depths = claim_depth(graph)
        for num in graph.nodes:
            self.assertGreaterEqual(depths[num], 1)
            self.assertLessEqual(depths[num], num)

    @settings(max_examples=200, deadline=None)
    @given(graphs(), st.data())
    def testAddingParentNeverDecreasesDepth(self, graph, data):
        """Test depth is monotone in the parent sets."""
        candidates = sorted(num for num in graph.nodes if num > 1)
        if not candidates:
            return
        child = data.draw(st.sampled_from(candidates))
        parent = data.draw(st.integers(min_value=1, max_value=child - 1))

        parents = dict(graph.parents)
        parents[child] = tuple(sorted(set(parents[child]) | {parent}))
        extended = ClaimGraph(graph.nodes, parents)

        before, after = claim_depth(graph), claim_depth(extended)
        for num in graph.nodes:
            self.assertGreaterEqual(after[num], before[num])


if __name__ == "__main__":
    unittest.main()
