"""
A generated collection on which claim structure separates relevant from
irrelevant documents while term statistics do not.

Every topic describes an apparatus by many generic components, repeated
over its first two claims, and names its distinguishing components only
in its deepest dependent claim. The relevant document mentions just the
distinguishing components. Frequency based keywords favour the generic
components, structure based keywords the deep ones.
"""


from corpus.models import Claim, ClaimDocument, Corpus, ParseStore, TopicCase


__all__ = ["NUM_TOPICS", "NUM_GENERIC", "NUM_NOISE", "generic_word", "novel_word", "synthetic_collection"]


NUM_TOPICS = 10
NUM_GENERIC = 75
NUM_NOVEL = 10
NUM_NOISE = 30


def _letter(i):
    return chr(ord("a") + i)


def generic_word(topic, k):
    return f"gen{_letter(topic)}{_letter(k // 26)}{_letter(k % 26)}ox"


def novel_word(topic, j):
    return f"nov{_letter(topic)}{_letter(j)}ox"


def _listText(words):
    return ", ".join(f"a {w}" for w in words[:-1]) + f" and a {words[-1]}"


def _listTree(words):
    parts = []
    for idx, word in enumerate(words):
        if idx:
            parts.append("(CC and)" if idx == len(words) - 1 else "(, ,)")
        parts.append(f"(NP (DT a) (NN {word}))")
    return "(NP " + " ".join(parts) + ")"


def _nouns(words):
    return " ".join(f"(NN {w})" for w in words)


def _reference(num):
    return f"(NP (DT The) (NN apparatus)) (VP (VBG according) (PP (TO to) (NP (NN claim) (CD {num})))) (, ,)"


def _topicClaims(topic):
    generic = [generic_word(topic, k) for k in range(NUM_GENERIC)]
    novel = [novel_word(topic, j) for j in range(NUM_NOVEL)]
    subject, complement = novel[:5], novel[5:]

    claims = [
        (f"An apparatus comprising {_listText(generic)}.",
         f"(ROOT (NP (NP (DT An) (NN apparatus)) (VP (VBG comprising) {_listTree(generic)}) (. .)))"),
        (f"The apparatus according to claim 1, comprising {_listText(generic)}.",
         f"(ROOT (NP {_reference(1)} (VP (VBG comprising) {_listTree(generic)}) (. .)))"),
        ("The apparatus according to claim 2, wherein the apparatus is portable.",
         f"(ROOT (NP {_reference(2)} (SBAR (WHADVP (WRB wherein)) (S (NP (DT the) (NN apparatus)) "
         "(VP (VBZ is) (ADJP (JJ portable))))) (. .)))"),
        (f"The apparatus according to claim 3, wherein the {' '.join(subject)} is {' '.join(complement)}.",
         f"(ROOT (NP {_reference(3)} (SBAR (WHADVP (WRB wherein)) (S (NP (DT the) {_nouns(subject)}) "
         f"(VP (VBZ is) (NP {_nouns(complement)})))) (. .)))"),
    ]
    return claims


def synthetic_collection():
    """Builds the collection.

    Returns
    -------
    corpus : `corpus.models.Corpus`
        Topic, relevant and noise documents.
    parses : `corpus.models.ParseStore`
        Parses of the topic claims.
    topics : `list` [`corpus.models.TopicCase`]
        Every topic judged with its relevant document's family.
    """
    documents, parses, topics = [], {}, []

    for topic in range(NUM_TOPICS):
        topicId = f"SYN-T{topic}"
        claims = _topicClaims(topic)
        documents.append(ClaimDocument(topicId, f"FAM-T{topic}", "en",
                                       tuple(Claim(num, text) for num, (text, _) in enumerate(claims, start=1))))
        for num, (_, ptb) in enumerate(claims, start=1):
            parses[(topicId, num)] = ptb

        novel = [novel_word(topic, j) for j in range(NUM_NOVEL)]
        documents.append(ClaimDocument(f"SYN-R{topic}", f"FAM-R{topic}", "en",
                                       (Claim(1, f"A device comprising {_listText(novel)}."), )))
        topics.append(TopicCase(topicId, frozenset({f"FAM-R{topic}"})))

    for j in range(NUM_NOISE):
        words = [generic_word(topic, k) for topic in range(NUM_TOPICS) for k in range(NUM_GENERIC)
                 if k % NUM_NOISE == j]
        documents.append(ClaimDocument(f"SYN-N{j:02d}", None, "en",
                                       (Claim(1, f"A kit comprising {_listText(words)}."), )))

    return Corpus(documents), ParseStore(parses), topics
