"""Gloss-overlap scorers between senses.

Three scorers share the same tokenisation:

* ``lesk_base``      - overlap between the two definition bags.
* ``lesk_variant``   - overlap between a context bag and one definition bag.
* ``lesk_extended``  - for every ordered pair of relations (R1, R2), the
  definitions reached from sense 1 via R1 are matched against those reached
  from sense 2 via R2 with a squared-length sequence overlap, and the pair
  scores are summed.
"""

from collections import Counter
from typing import Iterable, Sequence

from .semantic_network import (RelationType, SemanticNetwork, Synset,
                               definition_bag, definition_tokens)
from .text import content_bag, tokenize_content  # noqa: F401  (re-exported)

OVERLAP_MODES = ("multiset", "set")

# All 64 ordered pairs over the 8 relation types; closed under swapping.
DEFAULT_RELATION_PAIRS = frozenset(
    (r1, r2) for r1 in RelationType for r2 in RelationType)


def validate_relation_pairs(pairs: Iterable[tuple[RelationType, RelationType]]
                            ) -> frozenset[tuple[RelationType, RelationType]]:
    """Reject pair sets that are not closed under swapping."""
    pair_set = frozenset(pairs)
    missing = {(b, a) for a, b in pair_set} - pair_set
    if missing:
        pretty = ", ".join(f"({a.value}, {b.value})" for a, b in sorted(missing))
        raise ValueError(f"relation pairs are not symmetric; missing {pretty}")
    return pair_set


def overlap_size(bag_a: Counter[str], bag_b: Counter[str], mode: str = "multiset") -> int:
    if mode == "multiset":
        return sum((bag_a & bag_b).values())
    if mode == "set":
        return len(set(bag_a) & set(bag_b))
    raise ValueError(f"unknown overlap mode {mode!r}")


def lesk_base(network: SemanticNetwork, s1: Synset, s2: Synset, *,
              overlap_mode: str = "multiset", synonym_fallback: bool = True,
              stopwords: frozenset[str] | None = None) -> int:
    """Shared content tokens between the two definition bags."""
    return overlap_size(definition_bag(network, s1, synonym_fallback, stopwords),
                        definition_bag(network, s2, synonym_fallback, stopwords),
                        overlap_mode)


def lesk_variant(network: SemanticNetwork, context: Counter[str] | Iterable[str],
                 sense: Synset, *, overlap_mode: str = "multiset",
                 synonym_fallback: bool = True,
                 stopwords: frozenset[str] | None = None) -> int:
    """Shared content tokens between a context bag and one definition bag."""
    bag = context if isinstance(context, Counter) else Counter(context)
    return overlap_size(bag, definition_bag(network, sense, synonym_fallback, stopwords),
                        overlap_mode)


def sequence_overlap(seq_a: Sequence[str], seq_b: Sequence[str]) -> int:
    """Sum of squared lengths of greedily extracted common token sequences.

    Repeatedly finds the longest common contiguous sequence (leftmost on
    ties), scores its squared length and consumes it on both sides; consumed
    spans act as boundaries, so later matches never bridge them.  Stops when
    no common token remains.  Operands are put in a canonical order first:
    greedy tie choices are otherwise order-sensitive, and the measure must be
    symmetric.
    """
    a, b = list(seq_a), list(seq_b)
    if (len(a), a) > (len(b), b):
        a, b = b, a
    if not a or not b:
        return 0
    blocked_a = [False] * len(a)
    blocked_b = [False] * len(b)
    total = 0
    while True:
        best_len = 0
        best_a = best_b = -1
        previous = [0] * (len(b) + 1)
        for i in range(1, len(a) + 1):
            current = [0] * (len(b) + 1)
            if not blocked_a[i - 1]:
                token = a[i - 1]
                for j in range(1, len(b) + 1):
                    if not blocked_b[j - 1] and b[j - 1] == token:
                        length = previous[j - 1] + 1
                        current[j] = length
                        if length > best_len:
                            best_len = length
                            best_a, best_b = i - length, j - length
            previous = current
        if best_len == 0:
            return total
        total += best_len * best_len
        for offset in range(best_len):
            blocked_a[best_a + offset] = True
            blocked_b[best_b + offset] = True


def relation_tokens(network: SemanticNetwork, synset: Synset, relation: RelationType,
                    *, synonym_fallback: bool = True,
                    stopwords: frozenset[str] | None = None) -> list[str]:
    """Concatenated definition tokens of every synset reached via ``relation``.

    GLOSS reaches the synset itself; other relations reach their recorded
    targets in ascending id order.  Every definition of every reached synset
    is kept.
    """
    if relation is RelationType.GLOSS:
        reached = [synset]
    else:
        reached = [network.synsets[target]
                   for target in sorted(synset.relations.get(relation, frozenset()))]
    tokens: list[str] = []
    for target in reached:
        tokens.extend(definition_tokens(network, target, synonym_fallback, stopwords))
    return tokens


def lesk_extended(network: SemanticNetwork, s1: Synset, s2: Synset,
                  relation_pairs: Iterable[tuple[RelationType, RelationType]] | None = None,
                  *, synonym_fallback: bool = True,
                  stopwords: frozenset[str] | None = None) -> int:
    """Sum of sequence overlaps over every configured relation pair."""
    if relation_pairs is None:
        pairs = DEFAULT_RELATION_PAIRS
    else:
        pairs = validate_relation_pairs(relation_pairs)
    streams_1: dict[RelationType, list[str]] = {}
    streams_2: dict[RelationType, list[str]] = {}
    total = 0
    for r1, r2 in pairs:
        if r1 not in streams_1:
            streams_1[r1] = relation_tokens(network, s1, r1,
                                            synonym_fallback=synonym_fallback,
                                            stopwords=stopwords)
        if r2 not in streams_2:
            streams_2[r2] = relation_tokens(network, s2, r2,
                                            synonym_fallback=synonym_fallback,
                                            stopwords=stopwords)
        side_a, side_b = streams_1[r1], streams_2[r2]
        if side_a and side_b:
            total += sequence_overlap(side_a, side_b)
    return total
