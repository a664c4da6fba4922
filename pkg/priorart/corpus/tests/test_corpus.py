import os
import tempfile
import unittest

from hypothesis import given, settings, strategies as st

from corpus.loaders import (CorpusFormatError, DuplicateDocumentError, dump_corpus,
                            load_corpus, load_parses, load_qrels)
from corpus.models import Claim, ClaimDocument, Corpus, TopicCase


def write(path, content):
    with open(path, "w", encoding="utf-8") as f:
        f.write(content)
    return path


class ModelsTestCase(unittest.TestCase):

    def testClaimDocument(self):
        """Test document invariants are enforced."""
        doc = ClaimDocument("EP-1", language="en", claims=({"num": 1, "text": "A pump."},
                                                           Claim(3, "The pump of claim 1.")))
        self.assertEqual(doc.family_id, "EP-1")
        self.assertEqual(doc.claimNumbers, [1, 3])
        self.assertTrue(doc.isEnglish)

        badClaims = [
            (Claim(0, "A pump."), ),
            (Claim(2, "A pump."), Claim(1, "A valve.")),
            (Claim(1, "A pump."), Claim(1, "A valve.")),
            (Claim(1, "   "), ),
        ]
        for claims in badClaims:
            with self.subTest(claims=claims):
                with self.assertRaises(ValueError):
                    ClaimDocument("EP-1", claims=claims)

    def testTopicCase(self):
        """Test topics need relevant families other than themselves."""
        self.assertEqual(TopicCase("EP-1", {"F-2", "F-3"}).n, 2)
        with self.assertRaises(ValueError):
            TopicCase("EP-1", frozenset())
        with self.assertRaises(ValueError):
            TopicCase("EP-1", {"EP-1"})

    def testCorpus(self):
        """Test lookups, families and the English filter."""
        docs = [
            ClaimDocument("A", "F1", "en", (Claim(1, "A pump."), )),
            ClaimDocument("B", "F1", "en", (Claim(1, "A valve."), )),
            ClaimDocument("C", None, "de", (Claim(1, "Eine Pumpe."), )),
        ]
        corpus = Corpus(docs)
        self.assertEqual(len(corpus), 3)
        self.assertEqual(corpus.families["F1"], ("A", "B"))
        self.assertEqual(corpus.familyOf("C"), "C")

        english, skipped = corpus.englishDocuments()
        self.assertEqual([d.doc_id for d in english], ["A", "B"])
        self.assertEqual(skipped, 1)

        with self.assertRaises(ValueError):
            Corpus(docs + [docs[0]])


class LoadersTestCase(unittest.TestCase):

    def setUp(self):
        self.tmpDir = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.tmpDir.cleanup()

    def path(self, name):
        return os.path.join(self.tmpDir.name, name)

    def testLoadCorpus(self):
        """Test a valid corpus loads in file order."""
        path = write(self.path("corpus.jsonl"),
                     '{"doc_id": "B", "language": "en", "claims": [{"num": 1, "text": "A pump."}]}\n'
                     '\n'
                     '{"doc_id": "A", "family_id": "F", "language": "en", '
                     '"claims": [{"num": 1, "text": "A valve."}]}\n')
        corpus = load_corpus(path)
        self.assertEqual([d.doc_id for d in corpus], ["B", "A"])
        self.assertEqual(corpus["A"].family_id, "F")

    def testCorpusSizes(self):
        """Test empty and small files, and the duplicate identifier error."""
        self.assertEqual(load_corpus(write(self.path("empty.jsonl"), "")).num_documents, 0)

        lines = [f'{{"doc_id": "EP{i}", "language": "en", "claims": [{{"num": 1, "text": "A pump."}}]}}\n'
                 for i in range(1, 4)]
        self.assertEqual(load_corpus(write(self.path("three.jsonl"), "".join(lines))).num_documents, 3)

        with self.assertRaises(DuplicateDocumentError) as cm:
            load_corpus(write(self.path("dup.jsonl"), "".join(lines + [lines[0]])))
        self.assertEqual(cm.exception.docId, "EP1")
        self.assertEqual(cm.exception.lineno, 4)
        self.assertIn("EP1", str(cm.exception))

    def testCorpusErrors(self):
        """Test malformed lines are reported with their line number."""
        record = '{"doc_id": "A", "language": "en", "claims": [{"num": 1, "text": "A pump."}]}\n'
        cases = {
            "badJson": ('{"doc_id": \n', 1, CorpusFormatError),
            "missingKey": ('{"doc_id": "A", "claims": []}\n', 1, CorpusFormatError),
            "badNumbers": (record + '{"doc_id": "B", "language": "en", "claims": '
                           '[{"num": 2, "text": "x"}, {"num": 1, "text": "y"}]}\n', 2, CorpusFormatError),
            "duplicate": (record + record, 2, DuplicateDocumentError),
            "notObject": ('[1, 2]\n', 1, CorpusFormatError),
            "nullLanguage": (record + '{"doc_id": "B", "language": null, "claims": [{"num": 1, "text": "x"}]}\n',
                             2, CorpusFormatError),
            "boolNumber": ('{"doc_id": "A", "language": "en", "claims": [{"num": true, "text": "x"}]}\n', 1,
                           CorpusFormatError),
        }
        for name, (content, lineno, error) in cases.items():
            with self.subTest(case=name):
                path = write(self.path(f"{name}.jsonl"), content)
                with self.assertRaises(error) as cm:
                    load_corpus(path)
                self.assertEqual(cm.exception.lineno, lineno)
                self.assertIn(f"line {lineno}", str(cm.exception))

        latin1 = self.path("latin1.jsonl")
        with open(latin1, "wb") as f:
            f.write(record.encode("utf-8"))
            f.write('{"doc_id": "B", "language": "de", "claims": [{"num": 1, "text": "Eine Pumpe für Öl."}]}\n'
                    .encode("latin-1"))
        for loader in (load_corpus, load_qrels, load_parses):
            with self.subTest(loader=loader.__name__):
                with self.assertRaises(CorpusFormatError) as cm:
                    loader(latin1)
                self.assertEqual(cm.exception.lineno, 2)
                self.assertIn("UTF-8", cm.exception.message)

        with self.assertRaises(FileNotFoundError):
            load_corpus(self.path("missing.jsonl"))

    def testLoadQrels(self):
        """Test judgments group by topic and reject self relevance."""
        path = write(self.path("qrels.tsv"), "# comment\nT2\tF1\nT1\tF2\nT1\tF3\nT1 F2\n")
        topics = load_qrels(path)
        self.assertEqual([t.topic_doc_id for t in topics], ["T1", "T2"])
        self.assertEqual(topics[0].relevant_family_ids, frozenset({"F2", "F3"}))

        with self.assertRaises(CorpusFormatError):
            load_qrels(write(self.path("self.tsv"), "T1\tT1\n"))
        with self.assertRaises(CorpusFormatError):
            load_qrels(write(self.path("short.tsv"), "T1\n"))

    def testLoadParses(self):
        """Test parses are keyed by document and claim."""
        path = write(self.path("parses.jsonl"),
                     '{"doc_id": "A", "claim_num": 1, "ptb": "(NP (NN pump))"}\n'
                     '{"doc_id": "A", "claim_num": 3, "ptb": "(NP (NN valve))"}\n')
        parses = load_parses(path)
        self.assertEqual(parses.get("A", 1), "(NP (NN pump))")
        self.assertIsNone(parses.get("A", 2))

        doc = ClaimDocument("A", claims=(Claim(1, "x"), Claim(2, "y"), Claim(3, "z")))
        self.assertEqual(parses.missingFor(doc), [2])

        duplicated = write(self.path("dup.jsonl"),
                           '{"doc_id": "A", "claim_num": 1, "ptb": "(NN a)"}\n'
                           '{"doc_id": "A", "claim_num": 1, "ptb": "(NN b)"}\n')
        with self.assertRaises(CorpusFormatError):
            load_parses(duplicated)


words = st.text(alphabet=st.characters(whitelist_categories=("L", "N", "Zs")), min_size=1, max_size=30)
texts = words.filter(lambda t: t.strip())


@st.composite
def documents(draw, docId):
    numbers = sorted(draw(st.sets(st.integers(min_value=1, max_value=60), min_size=1, max_size=5)))
    claims = tuple(Claim(num, draw(texts)) for num in numbers)
    family = draw(st.one_of(st.none(), st.sampled_from(["F1", "F2"])))
    language = draw(st.sampled_from(["en", "de", "fr"]))
    return ClaimDocument(docId, family, language, claims)


@st.composite
def corpora(draw):
    count = draw(st.integers(min_value=0, max_value=5))
    return Corpus([draw(documents(f"EP-{i}")) for i in range(count)])


class RoundTripTestCase(unittest.TestCase):

    @settings(max_examples=50, deadline=None)
    @given(corpora())
    def testDumpLoad(self, corpus):
        """Test a dumped corpus loads back equal."""
        with tempfile.TemporaryDirectory() as tmpDir:
            path = os.path.join(tmpDir, "corpus.jsonl")
            dump_corpus(corpus, path)
            self.assertEqual(load_corpus(path), corpus)


if __name__ == "__main__":
    unittest.main()
