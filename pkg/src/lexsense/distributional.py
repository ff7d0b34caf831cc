"""Distributional similarity over syntactic features.

Information content of a feature f within one POS:

    ic(f) = -ln(holders(f) / total_lemmas)

and the similarity between two words is the Lin ratio over their distinct
feature sets:

    sim(w1, w2) = 2 * I(F1 & F2) / (I(F1) + I(F2))

where I(S) sums ic over the set S.  Feature sums always run in sorted
feature order so the result does not depend on argument order.
"""

import math
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import UnknownWordError
from .triple_store import SyntacticFeature, TripleIndex


def information_content(index: TripleIndex, pos: str, feature: SyntacticFeature) -> float:
    """-ln of the fraction of ``pos`` lemmas holding ``feature``.

    A feature nobody holds (or an unindexed POS) has no defined value and
    raises ``ValueError``.
    """
    total = index.total_lemmas(pos)
    holders = index.holder_count(feature, pos)
    if total == 0:
        raise ValueError(f"no lemmas indexed for POS {pos!r}")
    if holders == 0:
        raise ValueError(f"feature {feature} has no holders for POS {pos!r}")
    return -math.log(holders / total)


@dataclass(frozen=True)
class InformationContentTable:
    """Precomputed ic values for every feature of one POS."""

    pos: str
    total_lemmas: int
    ic: Mapping[SyntacticFeature, float]

    @classmethod
    def from_index(cls, index: TripleIndex, pos: str) -> "InformationContentTable":
        total = index.total_lemmas(pos)
        if total == 0:
            raise ValueError(f"no lemmas indexed for POS {pos!r}")
        table = {feature: -math.log(count / total)
                 for feature, count in sorted(index.feature_holders[pos].items())}
        return cls(pos=pos, total_lemmas=total, ic=table)


def build_ic_tables(index: TripleIndex) -> dict[str, InformationContentTable]:
    """One ic table per POS present in the index."""
    return {pos: InformationContentTable.from_index(index, pos)
            for pos in sorted(index.vocab_by_pos)}


def _set_information(table: InformationContentTable,
                     features: Iterable[SyntacticFeature]) -> float:
    return sum(table.ic[f] for f in sorted(features))


def lin_similarity(index: TripleIndex, table: InformationContentTable,
                   w1: str, w2: str, pos: str) -> float:
    """Lin similarity between two lemmas of the same POS, in [0, 1].

    Returns 0.0 when the shared feature set is empty or carries no
    information; identical fully-informative feature sets give exactly 1.0.
    """
    if table.pos != pos:
        raise ValueError(f"ic table is for POS {table.pos!r}, not {pos!r}")
    f1 = index.feature_set(w1, pos)
    f2 = index.feature_set(w2, pos)
    shared = f1 & f2
    if not shared:
        return 0.0
    denominator = _set_information(table, f1) + _set_information(table, f2)
    if denominator == 0.0:
        return 0.0
    return 2.0 * _set_information(table, shared) / denominator


@dataclass(frozen=True)
class NeighborList:
    """Top-k distributional neighbours of a (lemma, pos) target.

    ``neighbors`` holds (lemma, similarity) pairs sorted by decreasing
    similarity, ties broken by ascending lemma.
    """

    target: tuple[str, str]
    neighbors: tuple[tuple[str, float], ...]
    k: int

    def lemmas(self) -> tuple[str, ...]:
        return tuple(lemma for lemma, _ in self.neighbors)

    def __len__(self) -> int:
        return len(self.neighbors)


def rank_candidates(index: TripleIndex, table: InformationContentTable,
                    target: tuple[str, str], candidates: Iterable[str]
                    ) -> list[tuple[str, float]]:
    """Every indexed candidate scored against the target, fully sorted.

    Candidates absent from the index are dropped silently; the target lemma
    itself never appears.
    """
    lemma, pos = target
    if (lemma, pos) not in index:
        raise UnknownWordError(f"target ({lemma!r}, {pos!r}) is not indexed")
    scored = []
    for candidate in sorted(set(candidates)):
        if candidate == lemma or (candidate, pos) not in index:
            continue
        scored.append((candidate, lin_similarity(index, table, lemma, candidate, pos)))
    scored.sort(key=lambda item: (-item[1], item[0]))
    return scored


def nearest_neighbors(index: TripleIndex, table: InformationContentTable,
                      target: tuple[str, str], candidates: Iterable[str],
                      k: int) -> NeighborList:
    """The k nearest candidates to ``target`` by Lin similarity."""
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    ranked = rank_candidates(index, table, target, candidates)
    return NeighborList(target=target, neighbors=tuple(ranked[:k]), k=k)
