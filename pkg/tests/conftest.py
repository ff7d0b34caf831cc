import json
from pathlib import Path

import pytest

import fixture_data

from lexsense import (build_ic_tables, load_corpus, load_gold, load_network,
                      load_pos_lexicon, load_triples)
from lexsense.triple_store import DependencyTriple, TripleIndex


def write_network(path, records) -> Path:
    """Write synset records as a JSONL snapshot file."""
    path = Path(path)
    with open(path, "w", encoding="utf-8") as fh:
        for record in records:
            fh.write(json.dumps(record, ensure_ascii=False) + "\n")
    return path


def random_triple_fixture(rng, n_nouns=10, n_verbs=5, max_features=6):
    """Random triples and a lexicon; every noun appears in at least one."""
    nouns = [f"n{i}" for i in range(n_nouns)]
    verbs = [f"v{i}" for i in range(n_verbs)]
    lexicon = {noun: "noun" for noun in nouns}
    lexicon.update({verb: "verb" for verb in verbs})
    triples = []
    for noun in nouns:
        for _ in range(rng.randint(1, max_features)):
            triples.append(DependencyTriple(rng.choice(verbs),
                                            rng.choice(("suj", "obj", "mod")),
                                            noun, rng.randint(1, 5)))
    return triples, lexicon


def index_from(triples, lexicon) -> TripleIndex:
    return TripleIndex.from_triples(triples, lexicon)


@pytest.fixture(scope="session")
def fixture_root(tmp_path_factory) -> Path:
    root = tmp_path_factory.mktemp("hydro")
    write_network(root / "network.jsonl", fixture_data.NETWORK_RECORDS)
    (root / "hydro_triples.tsv").write_text(fixture_data.TRIPLES, encoding="utf-8")
    (root / "lexicon.tsv").write_text(fixture_data.LEXICON, encoding="utf-8")
    corpus = root / "corpus"
    corpus.mkdir()
    (corpus / "river.tsv").write_text(fixture_data.RIVER, encoding="utf-8")
    (corpus / "sea.tsv").write_text(fixture_data.SEA, encoding="utf-8")
    (corpus / "pecheur.tsv").write_text(fixture_data.PECHEUR, encoding="utf-8")
    (root / "gold.tsv").write_text(fixture_data.GOLD, encoding="utf-8")
    return root


@pytest.fixture(scope="session")
def network(fixture_root):
    return load_network(fixture_root / "network.jsonl")


@pytest.fixture(scope="session")
def lexicon(fixture_root):
    return load_pos_lexicon(fixture_root / "lexicon.tsv")


@pytest.fixture(scope="session")
def index(fixture_root, lexicon):
    return load_triples(fixture_root / "hydro_triples.tsv", lexicon)


@pytest.fixture(scope="session")
def ic_tables(index):
    return build_ic_tables(index)


@pytest.fixture(scope="session")
def river_doc(fixture_root):
    return load_corpus(fixture_root / "corpus" / "river.tsv")


@pytest.fixture(scope="session")
def sea_doc(fixture_root):
    return load_corpus(fixture_root / "corpus" / "sea.tsv")


@pytest.fixture(scope="session")
def pecheur_doc(fixture_root):
    return load_corpus(fixture_root / "corpus" / "pecheur.tsv")


@pytest.fixture(scope="session")
def gold(fixture_root):
    return load_gold(fixture_root / "gold.tsv")
