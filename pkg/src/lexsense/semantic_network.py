"""A local semantic-network snapshot: synsets, glosses, typed relations.

Snapshots are JSON Lines, one synset per line:

    {"id": "...", "pos": "noun", "lemmas": [...], "glosses": [...],
     "synonyms": [...], "relations": {"hypernym": ["..."], ...}, "degree": 42}

``degree`` is the connectivity recorded by the snapshot producer; it may
exceed the locally visible edge count when the snapshot is a subgraph, so it
is stored verbatim, never recomputed.  The network is immutable after load.
"""

import json
import logging
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

from .errors import NetworkLoadError
from .text import tokenize_content
from .triple_store import POS_TAGS

log = logging.getLogger(__name__)


class RelationType(str, Enum):
    GLOSS = "gloss"
    HYPERNYM = "hypernym"
    HYPONYM = "hyponym"
    MERONYM = "meronym"
    HOLONYM = "holonym"
    ATTRIBUTE = "attribute"
    SIMILAR_TO = "similar_to"
    ALSO_SEE = "also_see"

    @property
    def inverse(self) -> "RelationType":
        return _INVERSE[self]


_INVERSE = {
    RelationType.GLOSS: RelationType.GLOSS,
    RelationType.HYPERNYM: RelationType.HYPONYM,
    RelationType.HYPONYM: RelationType.HYPERNYM,
    RelationType.MERONYM: RelationType.HOLONYM,
    RelationType.HOLONYM: RelationType.MERONYM,
    RelationType.ATTRIBUTE: RelationType.ATTRIBUTE,
    RelationType.SIMILAR_TO: RelationType.SIMILAR_TO,
    RelationType.ALSO_SEE: RelationType.ALSO_SEE,
}

# GLOSS denotes a synset's own definitions; it is never serialized as an edge.
EDGE_RELATIONS = tuple(r for r in RelationType if r is not RelationType.GLOSS)


@dataclass(frozen=True)
class Synset:
    id: str
    pos: str
    lemmas: frozenset[str]
    glosses: tuple[str, ...]
    synonyms: frozenset[str]
    relations: dict[RelationType, frozenset[str]]
    degree: int


@dataclass
class SemanticNetwork:
    synsets: dict[str, Synset]
    sense_index: dict[tuple[str, str], tuple[str, ...]]
    warnings: list[str] = field(default_factory=list, compare=False, repr=False)


def _require(record: dict, key: str, kind, path, record_no: int):
    if key not in record:
        raise NetworkLoadError(path, record_no, f"missing field {key!r}")
    value = record[key]
    if not isinstance(value, kind):
        raise NetworkLoadError(path, record_no,
                               f"field {key!r} has type {type(value).__name__}")
    return value


def _string_list(record: dict, key: str, path, record_no: int,
                 default=None) -> list[str]:
    if key not in record and default is not None:
        return default
    value = _require(record, key, list, path, record_no)
    if not all(isinstance(item, str) and item for item in value):
        raise NetworkLoadError(path, record_no, f"field {key!r} must hold non-empty strings")
    return value


def _parse_record(record: dict, path, record_no: int) -> Synset:
    synset_id = _require(record, "id", str, path, record_no)
    if not synset_id:
        raise NetworkLoadError(path, record_no, "empty synset id")
    pos = _require(record, "pos", str, path, record_no)
    if pos not in POS_TAGS:
        raise NetworkLoadError(path, record_no, f"unknown POS tag {pos!r}")
    lemmas = _string_list(record, "lemmas", path, record_no)
    if not lemmas:
        raise NetworkLoadError(path, record_no, "synset has no lemmas")
    glosses = _string_list(record, "glosses", path, record_no, default=[])
    synonyms = _string_list(record, "synonyms", path, record_no, default=[])
    degree = _require(record, "degree", int, path, record_no)
    if isinstance(degree, bool) or degree < 0:
        raise NetworkLoadError(path, record_no, "degree must be a non-negative integer")
    relations: dict[RelationType, frozenset[str]] = {}
    raw_relations = record.get("relations", {})
    if not isinstance(raw_relations, dict):
        raise NetworkLoadError(path, record_no, "field 'relations' must be an object")
    for name, targets in raw_relations.items():
        try:
            relation = RelationType(name)
        except ValueError:
            raise NetworkLoadError(path, record_no, f"unknown relation {name!r}") from None
        if relation is RelationType.GLOSS:
            raise NetworkLoadError(path, record_no, "'gloss' is not a serializable relation")
        if not isinstance(targets, list) or not all(isinstance(t, str) and t for t in targets):
            raise NetworkLoadError(path, record_no, f"relation {name!r} must list synset ids")
        if targets:
            relations[relation] = frozenset(targets)
    return Synset(id=synset_id, pos=pos, lemmas=frozenset(lemmas),
                  glosses=tuple(glosses), synonyms=frozenset(synonyms),
                  relations=relations, degree=degree)


def load_network(path) -> SemanticNetwork:
    """Load and validate a snapshot.

    Hard errors (duplicate ids, malformed records) raise
    :class:`NetworkLoadError` with the 1-based record index.  Recoverable
    oddities are collected in ``network.warnings``: dangling relation targets
    are dropped, missing inverse edges and degrees below the local edge count
    are reported but kept.
    """
    path = Path(path)
    synsets: dict[str, Synset] = {}
    warnings: list[str] = []
    with open(path, encoding="utf-8") as fh:
        for record_no, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line:
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise NetworkLoadError(path, record_no, f"invalid JSON: {exc.msg}") from None
            if not isinstance(record, dict):
                raise NetworkLoadError(path, record_no, "record is not a JSON object")
            synset = _parse_record(record, path, record_no)
            if synset.id in synsets:
                raise NetworkLoadError(path, record_no, f"duplicate synset id {synset.id!r}")
            synsets[synset.id] = synset

    # Drop edges pointing outside the snapshot, then check inverse symmetry.
    cleaned: dict[str, Synset] = {}
    for synset in synsets.values():
        relations = {}
        for relation, targets in synset.relations.items():
            kept = frozenset(t for t in targets if t in synsets)
            for dangling in sorted(targets - kept):
                warnings.append(f"synset {synset.id}: dropped dangling "
                                f"{relation.value} target {dangling}")
            if kept:
                relations[relation] = kept
        cleaned[synset.id] = Synset(id=synset.id, pos=synset.pos, lemmas=synset.lemmas,
                                    glosses=synset.glosses, synonyms=synset.synonyms,
                                    relations=relations, degree=synset.degree)
    for synset in cleaned.values():
        local_edges = sum(len(t) for t in synset.relations.values())
        if synset.degree < local_edges:
            warnings.append(f"synset {synset.id}: degree {synset.degree} is below "
                            f"the {local_edges} locally recorded edges")
        for relation, targets in synset.relations.items():
            for target in sorted(targets):
                back = cleaned[target].relations.get(relation.inverse, frozenset())
                if synset.id not in back:
                    warnings.append(f"synset {target} lacks the {relation.inverse.value} "
                                    f"edge back to {synset.id}")

    sense_index: dict[tuple[str, str], tuple[str, ...]] = {}
    grouped: dict[tuple[str, str], set[str]] = {}
    for synset in cleaned.values():
        for lemma in synset.lemmas:
            grouped.setdefault((lemma, synset.pos), set()).add(synset.id)
    for key, ids in grouped.items():
        sense_index[key] = tuple(sorted(ids))

    for message in warnings:
        log.warning("%s: %s", path, message)
    return SemanticNetwork(synsets=cleaned, sense_index=sense_index, warnings=warnings)


def save_network(network: SemanticNetwork, path) -> Path:
    """Serialize a network back to canonical JSONL (load/save round-trips)."""
    path = Path(path)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for synset_id in sorted(network.synsets):
            synset = network.synsets[synset_id]
            record = {
                "id": synset.id,
                "pos": synset.pos,
                "lemmas": sorted(synset.lemmas),
                "glosses": list(synset.glosses),
                "synonyms": sorted(synset.synonyms),
                "relations": {relation.value: sorted(targets)
                              for relation, targets in sorted(synset.relations.items())
                              if targets},
                "degree": synset.degree,
            }
            fh.write(json.dumps(record, ensure_ascii=False, sort_keys=True) + "\n")
    return path


def senses(network: SemanticNetwork, lemma: str, pos: str) -> list[Synset]:
    """All synsets listing (lemma, pos), ordered by synset id; [] if unknown."""
    ids = network.sense_index.get((lemma, pos), ())
    return [network.synsets[synset_id] for synset_id in ids]


def definition_tokens(network: SemanticNetwork, synset: Synset,
                      synonym_fallback: bool = True,
                      stopwords: frozenset[str] | None = None) -> list[str]:
    """Ordered content tokens of all glosses of ``synset``, concatenated.

    A gloss-less synset falls back to its (sorted, lowercased) synonym
    lemmas when ``synonym_fallback`` is on, otherwise it yields nothing.
    """
    if not synset.glosses:
        if synonym_fallback:
            return sorted(synonym.lower() for synonym in synset.synonyms)
        return []
    tokens: list[str] = []
    for gloss in synset.glosses:
        tokens.extend(tokenize_content(gloss, stopwords))
    return tokens


def definition_bag(network: SemanticNetwork, synset: Synset,
                   synonym_fallback: bool = True,
                   stopwords: frozenset[str] | None = None) -> Counter[str]:
    """Multiset view of :func:`definition_tokens`."""
    return Counter(definition_tokens(network, synset, synonym_fallback, stopwords))
