"""Release gate: ten pinned behaviours, each with a runtime budget.

Every test states one contract of the toolkit (a numeric anchor with an
explicit tolerance, agreement with the independent oracles on randomized
inputs, or byte-level determinism of the reporting pipeline), measures the
operation under test with a wall-clock budget, and prints one pass line.
Run with ``pytest -v tests/test_acceptance.py`` to get one line per
criterion.
"""

import random
import statistics
import time
from collections import Counter, defaultdict

import pytest

import fixture_data
import oracles
from conftest import index_from, random_triple_fixture, write_network

from lexsense import (Scorer, aggregate, coverage, disambiguate_token,
                      exhaustive_disambiguate, information_content,
                      lesk_base, lesk_extended, lin_similarity, load_network,
                      nearest_neighbors, sample_triples, sequence_overlap)
from lexsense.cli import main
from lexsense.disambiguator import AnnotatedToken
from lexsense.distributional import build_ic_tables
from lexsense.errors import BudgetExceededError
from lexsense.semantic_network import RelationType, definition_tokens
from lexsense.triple_store import (DependencyTriple, Slot, SyntacticFeature,
                                   TripleIndex)


def timed(fn):
    start = time.perf_counter()
    result = fn()
    return result, time.perf_counter() - start


def passed(number: int, what: str) -> None:
    print(f"criterion {number}: PASS - {what}")


def synthetic_index(total: int, holder_counts: dict) -> TripleIndex:
    vocab = {f"w{i}" for i in range(total)}
    return TripleIndex(by_word={}, vocab_by_pos={"noun": vocab},
                       feature_holders={"noun": Counter(holder_counts)})


def test_criterion_01_information_content_anchors():
    rare = SyntacticFeature("suj", "border", Slot.MODIFIER)
    common = SyntacticFeature("obj", "traverser", Slot.MODIFIER)
    index = synthetic_index(22168, {rare: 38, common: 582})
    information_content(index, "noun", rare)  # warm up
    values, elapsed = timed(lambda: (information_content(index, "noun", rare),
                                     information_content(index, "noun", common)))
    assert values[0] == pytest.approx(6.37, abs=0.005)
    assert values[1] == pytest.approx(3.64, abs=0.005)
    assert elapsed < 0.001
    passed(1, "information content anchors 6.37 and 3.64 within 0.005")


def test_criterion_02_lin_similarity_properties():
    rng = random.Random(20260814)

    def run():
        for _ in range(1000):
            triples, lexicon = random_triple_fixture(rng, n_nouns=6, n_verbs=3,
                                                     max_features=4)
            # twin duplicates every n0 feature; loner shares none with anyone
            triples += [DependencyTriple(t.head, t.relation, "twin", t.count)
                        for t in triples if t.modifier == "n0"]
            triples.append(DependencyTriple("v0", "uniq", "loner", 1))
            lexicon.update({"twin": "noun", "loner": "noun"})
            index = index_from(triples, lexicon)
            table = build_ic_tables(index)["noun"]
            first, second = rng.sample([f"n{i}" for i in range(6)], 2)
            one_way = lin_similarity(index, table, first, second, "noun")
            other_way = lin_similarity(index, table, second, first, "noun")
            assert one_way == other_way
            assert 0.0 <= one_way <= 1.0
            assert lin_similarity(index, table, "n0", "twin", "noun") == 1.0
            assert lin_similarity(index, table, "n0", "loner", "noun") == 0.0

    _, elapsed = timed(run)
    assert elapsed < 10.0
    passed(2, "Lin similarity symmetric, bounded, 1.0 on identical and "
              "0.0 on disjoint feature sets over 1000 random fixtures")


def big_candidate_fixture(rng):
    verbs = [f"v{i}" for i in range(7)]
    relations = ("suj", "obj", "mod")
    lexicon = {verb: "verb" for verb in verbs}
    triples = []
    lexicon["cible"] = "noun"
    for i in range(5):
        triples.append(DependencyTriple(verbs[i], relations[i % 3], "cible", 2))
    for i in range(1000):
        lemma = f"c{i:04d}"
        lexicon[lemma] = "noun"
        for _ in range(rng.randint(1, 3)):
            triples.append(DependencyTriple(rng.choice(verbs),
                                            rng.choice(relations), lemma,
                                            rng.randint(1, 4)))
    return triples, lexicon


def test_criterion_03_neighbor_ranking_matches_brute_force():
    rng = random.Random(31)

    def check(triples, lexicon, target, candidates, k_values):
        index = index_from(triples, lexicon)
        table = build_ic_tables(index)["noun"]
        sets = oracles.feature_sets([tuple(t) for t in triples], lexicon)
        ic = oracles.ic_map(sets, "noun")
        for k in k_values:
            mine = nearest_neighbors(index, table, (target, "noun"),
                                     candidates, k)
            expected = oracles.knn(sets, ic, (target, "noun"), candidates, k)
            assert list(mine.lemmas()) == [lemma for lemma, _ in expected]
            for (_, got), (_, want) in zip(mine.neighbors, expected):
                assert got == pytest.approx(want, rel=1e-12, abs=1e-15)

    def run():
        for _ in range(20):
            triples, lexicon = random_triple_fixture(rng,
                                                     n_nouns=rng.randint(4, 50))
            nouns = sorted(l for l, p in lexicon.items() if p == "noun")
            target = rng.choice(nouns)
            candidates = [n for n in nouns if n != target]
            check(triples, lexicon, target, candidates,
                  (1, 3, 5, 7, len(candidates)))
        triples, lexicon = big_candidate_fixture(rng)
        candidates = [f"c{i:04d}" for i in range(1000)]
        check(triples, lexicon, "cible", candidates, (1, 3, 5, 7, 1000))

    _, elapsed = timed(run)
    assert elapsed < 30.0
    passed(3, "nearest_neighbors equals brute-force sort-and-truncate up to "
              "1000 candidates for k in {1,3,5,7,|candidates|}")


GLOSS_VOCAB = ["eau", "cours", "mer", "fleuve", "jette", "étendue", "salée",
               "naturel", "courant", "chenal", "gravité", "océan", "sable",
               "bord", "vaste", "rivage"]

INVERSE_NAME = {"hypernym": "hyponym", "hyponym": "hypernym",
                "meronym": "holonym", "holonym": "meronym",
                "attribute": "attribute", "similar_to": "similar_to",
                "also_see": "also_see"}


def random_network(rng, tmp_path, size=40):
    ids = [f"bn:r{i:02d}n" for i in range(size)]
    relations: dict[str, dict[str, set[str]]] = defaultdict(lambda: defaultdict(set))
    for i, synset_id in enumerate(ids):
        if rng.random() < 0.5:
            partner = rng.choice([x for x in ids if x != synset_id])
            name = rng.choice(list(INVERSE_NAME))
            relations[synset_id][name].add(partner)
            relations[partner][INVERSE_NAME[name]].add(synset_id)
    records = []
    for i, synset_id in enumerate(ids):
        record = {"id": synset_id, "pos": "noun", "lemmas": [f"w{i}"],
                  "degree": rng.randint(1, 2000),
                  "glosses": [" ".join(rng.choices(GLOSS_VOCAB,
                                                   k=rng.randint(3, 10)))
                              for _ in range(rng.randint(1, 2))]}
        if relations[synset_id]:
            record["relations"] = {name: sorted(targets) for name, targets
                                   in relations[synset_id].items()}
        records.append(record)
    return load_network(write_network(tmp_path / "random_net.jsonl", records))


def test_criterion_04_lesk_suites(tmp_path):
    rng = random.Random(404)
    net = random_network(rng, tmp_path)
    synsets = [net.synsets[i] for i in sorted(net.synsets)]
    gloss_pair = frozenset({(RelationType.GLOSS, RelationType.GLOSS)})

    def run():
        for _ in range(500):
            one, other = rng.choice(synsets), rng.choice(synsets)
            assert lesk_base(net, one, other) == lesk_base(net, other, one)
            assert lesk_extended(net, one, other) == lesk_extended(net, other, one)
        assert sequence_overlap(["a", "b", "c"], ["a", "b", "c"]) == 9
        assert sequence_overlap(["a", "x", "b"], ["a", "y", "b"]) == 2
        assert sequence_overlap(["a", "b", "c", "d"], ["b", "c", "x", "a"]) == 5
        for _ in range(10):
            one, other = rng.choice(synsets), rng.choice(synsets)
            assert lesk_extended(net, one, other, gloss_pair) == \
                sequence_overlap(definition_tokens(net, one),
                                 definition_tokens(net, other))

    _, elapsed = timed(run)
    assert elapsed < 10.0
    passed(4, "Lesk scorers symmetric on 500 random pairs; sequence overlap "
              "anchors 9/2/5; gloss-gloss extended equals raw overlap")


def test_criterion_05_fleuve_contexts(network, index, ic_tables, river_doc,
                                      sea_doc):
    def run():
        river = disambiguate_token(network, index, ic_tables, river_doc,
                                   river_doc[6], Scorer.LESK_EXTENDED, 3)
        sea = disambiguate_token(network, index, ic_tables, sea_doc,
                                 sea_doc[3], Scorer.LESK_EXTENDED, 3)
        return river, sea

    (river, sea), elapsed = timed(run)
    assert river.chosen == "bn:00fleuve1n"
    assert sea.chosen == "bn:00fleuve2n"

    # independent verification with the plain-dict oracle pipeline
    stop = oracles.shipped_stoplist()
    triples = oracles.parse_triples(fixture_data.TRIPLES)
    lexicon = dict(line.split("\t")
                   for line in fixture_data.LEXICON.splitlines())
    for doc, position, result in ((river_doc, 6, river), (sea_doc, 3, sea)):
        paragraph = [(t.lemma, t.pos) for t in doc]
        chosen, scores = oracles.choose_sense(fixture_data.NETWORK_RECORDS,
                                              triples, lexicon, paragraph,
                                              position, 3, stop)
        assert chosen == result.chosen
        assert scores == {s.synset_id: s.score for s in result.all_scores}
    assert elapsed < 1.0
    passed(5, "fleuve resolves to the watercourse sense beside rivière/"
              "affluent/eau and to the sea-bound sense beside mer/océan/eau")


def test_criterion_06_degree_tiebreak(network, index, ic_tables, pecheur_doc):
    result, elapsed = timed(lambda: disambiguate_token(
        network, index, ic_tables, pecheur_doc, pecheur_doc[6],
        Scorer.LESK_EXTENDED, 3))
    top, runner_up = result.all_scores
    assert top.score == runner_up.score
    assert (top.degree, runner_up.degree) == (1576, 355)
    assert result.chosen == "bn:00pecheur1n"
    assert network.synsets["bn:00pecheur1n"].degree == 1576
    assert network.synsets["bn:00pecheur2n"].degree == 355
    assert elapsed < 1.0
    passed(6, "equal sense scores fall back to degree 1576 over 355")


def test_criterion_07_aggregate_anchors():
    aggregate([1.0, 2.0])  # warm up
    values, elapsed = timed(lambda: (aggregate([90.91, 90.91, 84.09]),
                                     aggregate([50, 57.14, 60.71])))
    (mean1, std1), (mean2, std2) = values
    assert mean1 == pytest.approx(88.64, abs=0.01)
    assert std1 == pytest.approx(3.21, abs=0.01)
    assert mean2 == pytest.approx(55.95, abs=0.01)
    assert std2 == pytest.approx(4.45, abs=0.01)
    # the N-1 divisor would give 3.94 on the first anchor, far out of range
    assert abs(statistics.stdev([90.91, 90.91, 84.09]) - std1) > 0.5
    assert elapsed < 0.001
    passed(7, "aggregate anchors (88.64, 3.21) and (55.95, 4.45) within 0.01")


def coverage_corpus():
    records = []
    tokens = []

    def add(lemma, pos, sense_count, occurrences):
        for sense in range(sense_count):
            records.append({"id": f"bn:{lemma}x{sense}{pos[0]}", "pos": pos,
                            "lemmas": [lemma], "degree": 1,
                            "glosses": [f"Sens {lemma} {sense}"]})
        for _ in range(occurrences):
            tokens.append(AnnotatedToken(surface=lemma, lemma=lemma, pos=pos,
                                         sentence_index=0, paragraph_index=0,
                                         token_index=len(tokens)))

    for i in range(10):
        add(f"pn{i}", "noun", 2, 166)   # polysemous noun tokens: 1660
    for i in range(10):
        add(f"mn{i}", "noun", 1, 13)    # monosemous noun tokens: 130
    for i in range(3):
        add(f"un{i}", "noun", 0, 17)    # unrecognized noun tokens: 51
    for i in range(5):
        add(f"pv{i}", "verb", 2, 227)   # polysemous verb tokens: 1135
    add("mv0", "verb", 1, 31)           # monosemous verb tokens: 31
    for i in range(9):
        add(f"uv{i}", "verb", 0, 11)    # unrecognized verb tokens: 99
    return records, tokens


def test_criterion_08_coverage_anchors(tmp_path):
    records, tokens = coverage_corpus()
    net = load_network(write_network(tmp_path / "cov_net.jsonl", records))
    report = coverage(tokens, net)
    nouns, verbs = report.per_pos["noun"].tokens, report.per_pos["verb"].tokens
    assert (nouns.polysemous, nouns.monosemous, nouns.unrecognized) == \
        (1660, 130, 51)
    assert (verbs.polysemous, verbs.monosemous, verbs.unrecognized) == \
        (1135, 31, 99)
    nouns.global_pct  # warm up the property machinery
    values, elapsed = timed(lambda: (nouns.global_pct, nouns.polysemous_pct,
                                     verbs.global_pct, verbs.polysemous_pct))
    assert values[0] == pytest.approx(97.23, abs=0.01)
    assert values[1] == pytest.approx(92.74, abs=0.01)
    assert values[2] == pytest.approx(92.17, abs=0.01)
    assert values[3] == pytest.approx(97.34, abs=0.01)
    assert elapsed < 0.001
    passed(8, "coverage anchors 97.23/92.74 (nouns) and 92.17/97.34 (verbs) "
              "within 0.01")


def test_criterion_09_determinism(fixture_root, tmp_path, capsys):
    def evaluate_into(out_dir):
        code = main(["evaluate",
                     "--network", str(fixture_root / "network.jsonl"),
                     "--triples", str(fixture_root / "hydro_triples.tsv"),
                     "--lexicon", str(fixture_root / "lexicon.tsv"),
                     "--corpus", str(fixture_root / "corpus"),
                     "--gold", str(fixture_root / "gold.tsv"),
                     "--k-list", "1,3", "--subset-spec", "0.6:3,1.0:0",
                     "--out", str(out_dir)])
        assert code == 0

    def run():
        for out_dir in (tmp_path / "runA", tmp_path / "runB"):
            evaluate_into(out_dir)
        files_a = sorted(p for p in (tmp_path / "runA").rglob("*") if p.is_file())
        files_b = sorted(p for p in (tmp_path / "runB").rglob("*") if p.is_file())
        names_a = [p.relative_to(tmp_path / "runA") for p in files_a]
        names_b = [p.relative_to(tmp_path / "runB") for p in files_b]
        assert names_a == names_b and len(names_a) == 7
        for one, other in zip(files_a, files_b):
            assert one.read_bytes() == other.read_bytes()

        source = tmp_path / "big_triples.tsv"
        lines = [f"h{i}\tr{i % 7}\tm{i}\t{1 + i % 5}" for i in range(100_000)]
        source.write_text("\n".join(lines) + "\n", encoding="utf-8")
        subsets = [tmp_path / f"subset{i}.tsv" for i in range(2)]
        for subset in subsets:
            sample_triples(source, subset, 0.37, 11)
        assert subsets[0].read_bytes() == subsets[1].read_bytes()
        assert 30_000 < len(subsets[0].read_text("utf-8").splitlines()) < 44_000
        everything = tmp_path / "all.tsv"
        sample_triples(source, everything, 1.0, 5)
        assert everything.read_bytes() == source.read_bytes()

    _, elapsed = timed(run)
    capsys.readouterr()
    assert elapsed < 60.0
    passed(9, "two evaluate sweeps are byte-identical and a 100000-triple "
              "sample is reproducible")


CHAT_RECORDS = [
    {"id": "bn:chat1n", "pos": "noun", "lemmas": ["chat"], "degree": 10,
     "glosses": ["Animal domestique"]},
    {"id": "bn:chat2n", "pos": "noun", "lemmas": ["chat"], "degree": 3,
     "glosses": ["Machine outil"]},
    {"id": "bn:souris1n", "pos": "noun", "lemmas": ["souris"], "degree": 8,
     "glosses": ["Petit animal"]},
    {"id": "bn:souris2n", "pos": "noun", "lemmas": ["souris"], "degree": 2,
     "glosses": ["Appareil machine"]},
]

HAND_PAIR_SCORES = {("bn:chat1n", "bn:souris1n"): 1,   # animal
                    ("bn:chat1n", "bn:souris2n"): 0,
                    ("bn:chat2n", "bn:souris1n"): 0,
                    ("bn:chat2n", "bn:souris2n"): 1}   # machine


def test_criterion_10_exhaustive_guard(tmp_path):
    net = load_network(write_network(tmp_path / "chat.jsonl", CHAT_RECORDS))
    fragment = [AnnotatedToken(surface=lemma, lemma=lemma, pos="noun",
                               sentence_index=0, paragraph_index=0,
                               token_index=i)
                for i, lemma in enumerate(["chat", "souris"])]

    def run():
        for (one, other), expected in HAND_PAIR_SCORES.items():
            assert lesk_base(net, net.synsets[one], net.synsets[other]) == expected
        # scores tie at 1, so the degree sums 10+8 vs 3+2 decide
        assert exhaustive_disambiguate(net, fragment, Scorer.LESK_BASE) == \
            ["bn:chat1n", "bn:souris1n"]

        crowded = [
            {"id": f"bn:w{i}n", "pos": "noun", "lemmas": ["w"], "degree": i,
             "glosses": [f"Sens numero{i}"]}
            for i in range(10)
        ]
        crowd_net = load_network(write_network(tmp_path / "crowd.jsonl",
                                               crowded))
        too_many = [AnnotatedToken(surface="w", lemma="w", pos="noun",
                                   sentence_index=0, paragraph_index=0,
                                   token_index=i) for i in range(6)]
        with pytest.raises(BudgetExceededError, match="budget"):
            exhaustive_disambiguate(crowd_net, too_many, Scorer.LESK_BASE)
        with pytest.raises(BudgetExceededError):
            exhaustive_disambiguate(crowd_net, too_many[:2], Scorer.LESK_BASE,
                                    budget=99)

    _, elapsed = timed(run)
    assert elapsed < 1.0
    passed(10, "exhaustive search matches hand enumeration and refuses "
               "oversized combination spaces")
