"""Sense selection for annotated corpus tokens.

A corpus file is tab-separated ``surface  lemma  pos`` with one token per
line; a blank line ends a sentence and a line reading ``#PARA`` ends a
paragraph.  The paragraph is the disambiguation context: the candidate
neighbours of a target are the other distinct paragraph lemmas sharing its
POS.  Each candidate sense S of the target scores

    score(S) = sum over the k nearest neighbours N of
               max over senses S' of N of pair_score(S, S')

and the argmax wins; equal scores fall back to the stored synset degree,
then ascending synset id.
"""

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, NamedTuple, Sequence

from . import lesk
from .distributional import InformationContentTable, NeighborList, rank_candidates
from .errors import BudgetExceededError, ParseError, UnknownWordError
from .semantic_network import RelationType, SemanticNetwork, Synset, senses
from .triple_store import POS_TAGS, TripleIndex

CONTENT_POS = frozenset(POS_TAGS)

COMBINATION_BUDGET = 100_000


class Scorer(Enum):
    LESK_BASE = "lesk-base"
    LESK_EXTENDED = "lesk-ext"
    LESK_VARIANT = "lesk-variant"

    @classmethod
    def from_name(cls, name: str) -> "Scorer":
        for scorer in cls:
            if scorer.value == name:
                return scorer
        raise ValueError(f"unknown scorer {name!r}; expected one of "
                         + ", ".join(s.value for s in cls))


@dataclass(frozen=True)
class ScorerConfig:
    """Tunable knobs shared by the scorers; defaults match standard behaviour."""

    overlap_mode: str = "multiset"
    relation_pairs: frozenset[tuple[RelationType, RelationType]] | None = None
    synonym_fallback: bool = True
    weight_by_sim: bool = False
    backfill_neighbors: bool = False
    stopwords: frozenset[str] | None = None


DEFAULT_CONFIG = ScorerConfig()


@dataclass(frozen=True)
class AnnotatedToken:
    surface: str
    lemma: str
    pos: str
    sentence_index: int
    paragraph_index: int
    token_index: int  # position within the paragraph


def load_corpus(path) -> list[AnnotatedToken]:
    """Read an annotated corpus file into document order."""
    tokens: list[AnnotatedToken] = []
    paragraph = sentence = token_in_paragraph = 0
    sentence_open = False
    with open(path, encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, 1):
            line = raw.rstrip("\r\n")
            stripped = line.strip()
            if stripped == "#PARA":
                if sentence_open:
                    sentence += 1
                    sentence_open = False
                paragraph += 1
                token_in_paragraph = 0
                continue
            if not stripped:
                if sentence_open:
                    sentence += 1
                    sentence_open = False
                continue
            fields = [f.strip() for f in line.split("\t")]
            if len(fields) != 3 or any(not f for f in fields):
                raise ParseError(path, line_no,
                                 "expected 3 tab-separated columns: surface, lemma, pos")
            surface, lemma, pos = fields
            tokens.append(AnnotatedToken(surface=surface, lemma=lemma, pos=pos,
                                         sentence_index=sentence,
                                         paragraph_index=paragraph,
                                         token_index=token_in_paragraph))
            token_in_paragraph += 1
            sentence_open = True
    return tokens


def paragraph_tokens(document: Sequence[AnnotatedToken],
                     target: AnnotatedToken) -> list[AnnotatedToken]:
    return [t for t in document if t.paragraph_index == target.paragraph_index]


def paragraph_candidates(document: Sequence[AnnotatedToken],
                         target: AnnotatedToken) -> set[str]:
    """Distinct same-POS lemmas of the target's paragraph, minus the target."""
    return {t.lemma for t in paragraph_tokens(document, target)
            if t.pos == target.pos and t.lemma != target.lemma}


def context_bag(document: Sequence[AnnotatedToken], target: AnnotatedToken,
                stopwords: frozenset[str] | None = None) -> Counter[str]:
    """Lowercased content-word lemmas of the paragraph, target occurrence excluded."""
    bag: Counter[str] = Counter()
    for token in paragraph_tokens(document, target):
        if token == target:
            continue
        if token.pos in CONTENT_POS:
            bag[token.lemma.lower()] += 1
    return bag


class Status(str, Enum):
    DISAMBIGUATED = "disambiguated"
    MONOSEMOUS = "monosemous"
    UNKNOWN = "unknown"
    NO_NEIGHBORS = "no_neighbors"


class SenseScore(NamedTuple):
    synset_id: str
    score: float
    degree: int


@dataclass(frozen=True)
class DisambiguationResult:
    token: AnnotatedToken
    status: Status
    chosen: str | None  # None only when status is UNKNOWN
    all_scores: tuple[SenseScore, ...]  # sorted best-first
    neighbors_used: NeighborList


def _rank(scores: Iterable[SenseScore]) -> tuple[SenseScore, ...]:
    """Best first: higher score, then higher degree, then ascending id."""
    return tuple(sorted(scores, key=lambda s: (-s.score, -s.degree, s.synset_id)))


def _pair_score(network: SemanticNetwork, scorer: Scorer, config: ScorerConfig,
                s1: Synset, s2: Synset) -> float:
    if scorer is Scorer.LESK_BASE:
        return lesk.lesk_base(network, s1, s2, overlap_mode=config.overlap_mode,
                              synonym_fallback=config.synonym_fallback,
                              stopwords=config.stopwords)
    if scorer is Scorer.LESK_EXTENDED:
        return lesk.lesk_extended(network, s1, s2, config.relation_pairs,
                                  synonym_fallback=config.synonym_fallback,
                                  stopwords=config.stopwords)
    raise ValueError(f"{scorer.value} is not a sense-to-sense scorer")


def _select_neighbors(index: TripleIndex, table: InformationContentTable | None,
                      network: SemanticNetwork, target: AnnotatedToken,
                      candidates: set[str], k: int, config: ScorerConfig) -> NeighborList:
    key = (target.lemma, target.pos)
    if table is None or key not in index:
        return NeighborList(target=key, neighbors=(), k=k)
    ranked = rank_candidates(index, table, key, candidates)
    if config.backfill_neighbors:
        # Skip candidates the network cannot score instead of wasting ranks.
        kept = [(lemma, sim) for lemma, sim in ranked
                if network.sense_index.get((lemma, target.pos))]
        ranked = kept
    return NeighborList(target=key, neighbors=tuple(ranked[:k]), k=k)


def disambiguate_token(network: SemanticNetwork, index: TripleIndex,
                       ic_tables: dict[str, InformationContentTable],
                       document: Sequence[AnnotatedToken], target: AnnotatedToken,
                       scorer: Scorer, k: int,
                       config: ScorerConfig = DEFAULT_CONFIG) -> DisambiguationResult:
    """Pick a sense for one token; degraded inputs yield statuses, not errors.

    * no senses in the network        -> UNKNOWN, nothing chosen
    * exactly one sense               -> MONOSEMOUS, no neighbour work
    * no usable neighbours            -> NO_NEIGHBORS, highest-degree fallback
    """
    if config.relation_pairs is not None:
        lesk.validate_relation_pairs(config.relation_pairs)
    sense_list = senses(network, target.lemma, target.pos)
    empty = NeighborList(target=(target.lemma, target.pos), neighbors=(), k=k)
    if not sense_list:
        return DisambiguationResult(token=target, status=Status.UNKNOWN, chosen=None,
                                    all_scores=(), neighbors_used=empty)
    if len(sense_list) == 1:
        only = sense_list[0]
        return DisambiguationResult(token=target, status=Status.MONOSEMOUS,
                                    chosen=only.id,
                                    all_scores=(SenseScore(only.id, 0, only.degree),),
                                    neighbors_used=empty)

    if scorer is Scorer.LESK_VARIANT:
        bag = context_bag(document, target, stopwords=config.stopwords)
        scores = _rank(SenseScore(s.id,
                                  lesk.lesk_variant(network, bag, s,
                                                    overlap_mode=config.overlap_mode,
                                                    synonym_fallback=config.synonym_fallback,
                                                    stopwords=config.stopwords),
                                  s.degree)
                       for s in sense_list)
        return DisambiguationResult(token=target, status=Status.DISAMBIGUATED,
                                    chosen=scores[0].synset_id, all_scores=scores,
                                    neighbors_used=empty)

    candidates = paragraph_candidates(document, target)
    neighbors = _select_neighbors(index, ic_tables.get(target.pos), network,
                                  target, candidates, k, config)
    if not neighbors.neighbors:
        scores = _rank(SenseScore(s.id, 0, s.degree) for s in sense_list)
        return DisambiguationResult(token=target, status=Status.NO_NEIGHBORS,
                                    chosen=scores[0].synset_id, all_scores=scores,
                                    neighbors_used=neighbors)

    neighbor_senses = {lemma: senses(network, lemma, target.pos)
                       for lemma, _ in neighbors.neighbors}
    scores = []
    for sense in sense_list:
        total = 0.0 if config.weight_by_sim else 0
        for lemma, similarity in neighbors.neighbors:
            others = neighbor_senses[lemma]
            if not others:
                continue  # unscorable neighbour contributes zero
            best = max(_pair_score(network, scorer, config, sense, other)
                       for other in others)
            total += best * similarity if config.weight_by_sim else best
        scores.append(SenseScore(sense.id, total, sense.degree))
    ranked = _rank(scores)
    return DisambiguationResult(token=target, status=Status.DISAMBIGUATED,
                                chosen=ranked[0].synset_id, all_scores=ranked,
                                neighbors_used=neighbors)


def disambiguate_document(network: SemanticNetwork, index: TripleIndex,
                          ic_tables: dict[str, InformationContentTable],
                          document: Sequence[AnnotatedToken], scorer: Scorer, k: int,
                          target_filter: set[str] | None = None,
                          config: ScorerConfig = DEFAULT_CONFIG
                          ) -> list[DisambiguationResult]:
    """Disambiguate every content-word token, in document order."""
    results = []
    for token in document:
        if token.pos not in CONTENT_POS:
            continue
        if target_filter is not None and token.lemma not in target_filter:
            continue
        results.append(disambiguate_token(network, index, ic_tables, document,
                                          token, scorer, k, config))
    return results


def exhaustive_disambiguate(network: SemanticNetwork,
                            fragment: Sequence[AnnotatedToken], scorer: Scorer,
                            config: ScorerConfig = DEFAULT_CONFIG,
                            budget: int = COMBINATION_BUDGET) -> list[str]:
    """Jointly best sense assignment over all combinations (test oracle).

    Maximises the summed pairwise score over all token pairs; ties fall back
    to the summed degree, then the lexicographically smallest id tuple.
    Refuses to enumerate more than ``budget`` combinations.
    """
    if scorer is Scorer.LESK_VARIANT:
        raise ValueError("exhaustive search needs a sense-to-sense scorer")
    sense_lists = []
    for token in fragment:
        sense_list = senses(network, token.lemma, token.pos)
        if not sense_list:
            raise UnknownWordError(f"({token.lemma!r}, {token.pos!r}) has no senses")
        sense_lists.append(sense_list)
    combinations = math.prod(len(s) for s in sense_lists)
    if combinations > budget:
        raise BudgetExceededError(
            f"{combinations} sense combinations exceed the budget of {budget}")
    best_key = None
    best: tuple[Synset, ...] | None = None
    for combo in itertools.product(*sense_lists):
        pair_total = sum(_pair_score(network, scorer, config, first, second)
                         for first, second in itertools.combinations(combo, 2))
        key = (-pair_total, -sum(s.degree for s in combo), tuple(s.id for s in combo))
        if best_key is None or key < best_key:
            best_key, best = key, combo
    assert best is not None
    return [synset.id for synset in best]
