"""Corpus preprocessing for the agreement-ablation experiment.

Produces three variants of a plain-text corpus: Raw (tokenized only),
NoArticles (gender-marking articles filtered out), and Stemmed (every token
reduced with the Swedish stemmer). Tokens are maximal runs of Unicode
letters; digits and punctuation separate tokens and never appear in output.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from typing import Iterable, TextIO

from .snowball import stem_swedish

# Swedish marks indefinite gender with en/ett and uses den/det/de as
# free-standing definite articles; the set is configurable per experiment.
SWEDISH_ARTICLES = frozenset({"en", "ett", "den", "det", "de"})

_TOKEN_RE = re.compile(r"[^\W\d_]+", re.UNICODE)
_SENTENCE_SPLIT_RE = re.compile(r"[.!?](?=\s|$)")


class StripMode(enum.Enum):
    RAW = "raw"
    NO_ARTICLES = "noarticles"
    STEMMED = "stemmed"


@dataclass
class ArticleSet:
    language: str
    tokens: frozenset[str]

    def __post_init__(self):
        if not self.tokens:
            raise ValueError("article set must be non-empty")
        if any(t != t.lower() for t in self.tokens):
            raise ValueError("article tokens must be lowercase")


def swedish_articles() -> ArticleSet:
    return ArticleSet("sv", SWEDISH_ARTICLES)


@dataclass
class CorpusStats:
    token_count: int = 0
    removed_articles: int = 0
    type_count: int = 0

    def as_lines(self) -> str:
        return (
            f"token_count={self.token_count}\n"
            f"removed_articles={self.removed_articles}\n"
            f"type_count={self.type_count}\n"
        )


@dataclass
class CorpusVariant:
    mode: StripMode
    sentences: list[list[str]]
    stats: CorpusStats = field(default_factory=CorpusStats)

    def tokens(self) -> Iterable[str]:
        for sentence in self.sentences:
            yield from sentence


def tokenize(text: str) -> list[list[str]]:
    """Lowercased letter-run tokens, one list per (coarse) sentence.

    Sentence boundaries are ., ! or ? followed by whitespace or end of
    text; this is deliberately coarse, window-based training only needs
    approximate sentence units.
    """
    sentences = []
    for chunk in _SENTENCE_SPLIT_RE.split(text.lower()):
        tokens = _TOKEN_RE.findall(chunk)
        if tokens:
            sentences.append(tokens)
    return sentences


def remove_articles(
    sentences: Iterable[list[str]], articles: ArticleSet
) -> tuple[list[list[str]], int]:
    """Order-preserving filter; returns the surviving stream and the count."""
    removed = 0
    kept_sentences = []
    for sentence in sentences:
        kept = [t for t in sentence if t not in articles.tokens]
        removed += len(sentence) - len(kept)
        if kept:
            kept_sentences.append(kept)
    return kept_sentences, removed


def strip_corpus(
    text: str, mode: StripMode, articles: ArticleSet | None = None
) -> CorpusVariant:
    """Tokenize and apply the requested ablation.

    Stemmed mode stems the tokenized corpus as-is (articles stay in; they
    mostly stem to themselves), mirroring a stemming-only ablation. Stemmed
    output tokens are fixed points of the stemmer by construction.
    """
    sentences = tokenize(text)
    removed = 0
    if mode is StripMode.NO_ARTICLES:
        sentences, removed = remove_articles(sentences, articles or swedish_articles())
    elif mode is StripMode.STEMMED:
        sentences = [[stem_swedish(t) for t in sentence] for sentence in sentences]

    stats = CorpusStats(
        token_count=sum(len(s) for s in sentences),
        removed_articles=removed,
        type_count=len({t for s in sentences for t in s}),
    )
    return CorpusVariant(mode, sentences, stats)


def write_tokens(variant: CorpusVariant, stream: TextIO) -> None:
    """One sentence per line, tokens whitespace-separated."""
    for sentence in variant.sentences:
        stream.write(" ".join(sentence) + "\n")


def read_tokens(stream: TextIO) -> list[list[str]]:
    """Inverse of write_tokens (empty lines dropped)."""
    return [line.split() for line in stream if line.split()]
