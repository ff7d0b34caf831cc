"""Dependency-triple storage and the syntactic features derived from it.

A triple file is tab-separated ``head  relation  modifier  count`` with one
triple per line.  Each side of a triple yields one syntactic feature for the
word occupying it: the word ``w`` of triple ``(h, r, m)`` gets feature
``(r, m, HEAD)`` when ``w == h`` and ``(r, h, MODIFIER)`` when ``w == m``.
Only lemmas present in the POS lexicon are indexed.
"""

import random
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Iterable, Iterator, NamedTuple

from .errors import ParseError, UnknownWordError

POS_TAGS = ("noun", "verb", "adj", "adv")


class Slot(str, Enum):
    """Which side of the triple the target word occupies."""

    HEAD = "head"
    MODIFIER = "modifier"


class SyntacticFeature(NamedTuple):
    relation: str
    partner: str
    slot: Slot


class DependencyTriple(NamedTuple):
    head: str
    relation: str
    modifier: str
    count: int


def _split_columns(path, line_no: int, line: str, expected: int) -> list[str]:
    fields = [f.strip() for f in line.split("\t")]
    if len(fields) != expected:
        raise ParseError(path, line_no,
                         f"expected {expected} tab-separated columns, got {len(fields)}")
    if any(not f for f in fields):
        raise ParseError(path, line_no, "empty column")
    return fields


def read_triples(path) -> Iterator[DependencyTriple]:
    """Yield the triples of a file, validating as we go."""
    with open(path, encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, 1):
            line = raw.rstrip("\r\n")
            if not line.strip():
                continue
            head, relation, modifier, count_s = _split_columns(path, line_no, line, 4)
            try:
                count = int(count_s)
            except ValueError:
                raise ParseError(path, line_no, f"count is not an integer: {count_s!r}") from None
            if count < 1:
                raise ParseError(path, line_no, f"count must be >= 1, got {count}")
            yield DependencyTriple(head, relation, modifier, count)


def load_pos_lexicon(path) -> dict[str, str]:
    """Read a ``lemma<TAB>pos`` lexicon; pos must be one of noun/verb/adj/adv."""
    lexicon: dict[str, str] = {}
    with open(path, encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, 1):
            line = raw.rstrip("\r\n")
            if not line.strip():
                continue
            lemma, pos = _split_columns(path, line_no, line, 2)
            if pos not in POS_TAGS:
                raise ParseError(path, line_no, f"unknown POS tag {pos!r}")
            lexicon[lemma] = pos
    return lexicon


@dataclass
class TripleIndex:
    """Feature multisets per (lemma, POS), plus holder counts per feature.

    Treated as immutable once built; safe to share across threads.
    """

    by_word: dict[tuple[str, str], Counter[SyntacticFeature]] = field(default_factory=dict)
    vocab_by_pos: dict[str, set[str]] = field(default_factory=dict)
    feature_holders: dict[str, Counter[SyntacticFeature]] = field(default_factory=dict)
    skipped: Counter[str] = field(default_factory=Counter)

    @classmethod
    def from_triples(cls, triples: Iterable[DependencyTriple],
                     pos_lexicon: dict[str, str]) -> "TripleIndex":
        index = cls()
        for triple in triples:
            sides = ((triple.head, triple.modifier, Slot.HEAD),
                     (triple.modifier, triple.head, Slot.MODIFIER))
            for lemma, partner, slot in sides:
                pos = pos_lexicon.get(lemma)
                if pos is None:
                    index.skipped[lemma] += triple.count
                    continue
                feature = SyntacticFeature(triple.relation, partner, slot)
                index.by_word.setdefault((lemma, pos), Counter())[feature] += triple.count
        for (lemma, pos), features in index.by_word.items():
            index.vocab_by_pos.setdefault(pos, set()).add(lemma)
            holders = index.feature_holders.setdefault(pos, Counter())
            for feature in features:
                holders[feature] += 1
        return index

    def __contains__(self, word: tuple[str, str]) -> bool:
        return word in self.by_word

    def features(self, lemma: str, pos: str) -> Counter[SyntacticFeature]:
        try:
            return self.by_word[(lemma, pos)]
        except KeyError:
            raise UnknownWordError(f"no indexed features for ({lemma!r}, {pos!r})") from None

    def feature_set(self, lemma: str, pos: str) -> set[SyntacticFeature]:
        return set(self.features(lemma, pos))

    def holder_count(self, feature: SyntacticFeature, pos: str) -> int:
        """Number of distinct lemmas of ``pos`` that carry ``feature``."""
        return self.feature_holders.get(pos, Counter()).get(feature, 0)

    def total_lemmas(self, pos: str) -> int:
        return len(self.vocab_by_pos.get(pos, ()))


def load_triples(path, pos_lexicon: dict[str, str]) -> TripleIndex:
    """Build a :class:`TripleIndex` from a triple file.

    Lemmas missing from ``pos_lexicon`` are skipped and tallied (by summed
    occurrence count) in ``index.skipped``.  An empty file yields an empty
    index.
    """
    return TripleIndex.from_triples(read_triples(path), pos_lexicon)


def sample_triples(source, dest, fraction: float, seed: int) -> Path:
    """Write a seeded random subset of the distinct triples in ``source``.

    Each distinct (head, relation, modifier) triple is retained independently
    with probability ``fraction``; duplicate input lines are merged by summing
    their counts first.  Output order follows first appearance in the source,
    so identical (source, fraction, seed) runs are byte-identical.
    """
    if not 0.0 < fraction <= 1.0:
        raise ValueError(f"fraction must be in (0, 1], got {fraction}")
    merged: dict[tuple[str, str, str], int] = {}
    for triple in read_triples(source):
        key = (triple.head, triple.relation, triple.modifier)
        merged[key] = merged.get(key, 0) + triple.count
    rng = random.Random(seed)
    dest = Path(dest)
    with open(dest, "w", encoding="utf-8", newline="\n") as fh:
        for (head, relation, modifier), count in merged.items():
            if rng.random() < fraction:
                fh.write(f"{head}\t{relation}\t{modifier}\t{count}\n")
    return dest
