"""Tokenisation of glosses and running text into content words.

Tokens are lowercased maximal runs of letters/digits (punctuation and
apostrophes split).  Single-character tokens and stoplisted function
words are discarded; everything left counts as a content word.
"""

import re
from collections import Counter
from functools import lru_cache
from importlib import resources
from pathlib import Path

_TOKEN_RE = re.compile(r"[^\W_]+")


def load_stoplist(path) -> frozenset[str]:
    """Read a stoplist file: one token per line, '#' starts a comment."""
    words = set()
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            words.add(line.lower())
    return frozenset(words)


@lru_cache(maxsize=1)
def default_stoplist() -> frozenset[str]:
    """The French function-word stoplist shipped with the package."""
    ref = resources.files("lexsense").joinpath("data/french_stoplist.txt")
    with resources.as_file(ref) as path:
        return load_stoplist(path)


def tokenize_content(text: str, stopwords: frozenset[str] | None = None) -> list[str]:
    """Return the ordered content tokens of ``text``.

    Order is preserved so callers can run sequence matching; use
    :func:`content_bag` for a multiset view.
    """
    if stopwords is None:
        stopwords = default_stoplist()
    tokens = _TOKEN_RE.findall(text.lower())
    return [t for t in tokens if len(t) > 1 and t not in stopwords]


def content_bag(text: str, stopwords: frozenset[str] | None = None) -> Counter[str]:
    """Multiset of content tokens of ``text``."""
    return Counter(tokenize_content(text, stopwords))
