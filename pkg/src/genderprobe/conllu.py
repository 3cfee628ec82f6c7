"""CoNLL-U parsing and gendered-noun lexicon extraction.

Reads Universal Dependencies treebank files, pulls out noun lemmas with a
mapped binary gender (uter/neuter), and builds per-language lexicons whose
class distributions feed the chance-corrected transfer baseline.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, TextIO

from .transfer import ClassDistribution
from .util import normalize_token


class Gender(enum.Enum):
    UTER = "uter"
    NEUTER = "neuter"

    @property
    def code(self) -> float:
        """Fixed global class coding: uter = 1, neuter = 0."""
        return 1.0 if self is Gender.UTER else 0.0


@dataclass
class Token:
    id: int
    form: str
    lemma: str
    upos: str
    feats: dict[str, str]


@dataclass
class NounRecord:
    lemma: str
    gender: Gender
    language: str
    occurrence_count: int


class ConlluError(ValueError):
    """Malformed CoNLL-U content; carries the 1-based line number."""

    def __init__(self, message: str, line_no: int):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class ExtractionError(ValueError):
    """No nouns matched: wrong feature map or wrong file."""


# Treebank Gender values worth keeping by default. Dutch three-gender
# annotation folds into the binary scheme: everything non-neuter is uter.
DEFAULT_GENDER_MAP: dict[str, Gender] = {
    "Com": Gender.UTER,
    "Ut": Gender.UTER,
    "Masc": Gender.UTER,
    "Fem": Gender.UTER,
    "Neut": Gender.NEUTER,
}


def _is_word_id(column: str) -> bool:
    # Multiword ranges ("3-4") and empty nodes ("5.1") are not syntactic words.
    return column.isdigit()


@dataclass
class ParseStats:
    skipped_rows: int = 0


def iter_sentences(
    lines: Iterable[str], strict: bool = False, stats: ParseStats | None = None
) -> Iterator[list[Token]]:
    """Yield one token list per sentence in the input.

    Comment lines are skipped, a blank line ends a sentence, and each token
    row must have exactly 10 tab-separated columns. In lenient mode a
    malformed row is dropped and counted on `stats`; in strict mode it aborts.
    """
    sentence: list[Token] = []
    for line_no, raw in enumerate(lines, start=1):
        line = raw.rstrip("\n")
        if line.startswith("#"):
            continue
        if not line.strip():
            if sentence:
                yield sentence
                sentence = []
            continue
        columns = line.split("\t")
        if len(columns) != 10:
            if strict:
                raise ConlluError(
                    f"expected 10 tab-separated columns, got {len(columns)}", line_no
                )
            if stats is not None:
                stats.skipped_rows += 1
            continue
        if not _is_word_id(columns[0]):
            continue
        sentence.append(
            Token(
                id=int(columns[0]),
                form=columns[1],
                lemma=columns[2],
                upos=columns[3],
                feats=parse_feats(columns[5]),
            )
        )
    if sentence:
        yield sentence


def parse_feats(feats_column: str) -> dict[str, str]:
    """FEATS column to an ordered name->value map; `_` means empty."""
    if feats_column == "_":
        return {}
    feats = {}
    for pair in feats_column.split("|"):
        name, _, value = pair.partition("=")
        if name:
            feats[name] = value
    return feats


def parse_conllu(
    source: str | bytes | TextIO, strict: bool = False
) -> tuple[list[list[Token]], int]:
    """Parse a whole document; returns (sentences, malformed rows skipped)."""
    if isinstance(source, bytes):
        source = source.decode("utf-8")
    lines = source.splitlines() if isinstance(source, str) else source
    stats = ParseStats()
    sentences = list(iter_sentences(lines, strict=strict, stats=stats))
    return sentences, stats.skipped_rows


@dataclass
class GenderLexicon:
    """Unique noun lemmas with their majority gender for one language."""

    language: str
    entries: dict[str, Gender]
    counts: dict[str, int]
    conflicts_dropped: int = field(default=0, compare=False)

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def distribution(self) -> ClassDistribution:
        """Type-level class distribution over the unique lemmas."""
        total = len(self.entries)
        if total == 0:
            raise ExtractionError("empty lexicon has no class distribution")
        n_uter = sum(1 for g in self.entries.values() if g is Gender.UTER)
        return ClassDistribution(n_uter / total, (total - n_uter) / total)

    def records(self) -> list[NounRecord]:
        """Lexicon entries as records, in sorted-lemma order."""
        return [
            NounRecord(lemma, self.entries[lemma], self.language, self.counts[lemma])
            for lemma in sorted(self.entries)
        ]


def extract_nouns(
    sentences: Iterable[list[Token]],
    gender_feature_map: Mapping[str, Gender],
    language: str,
) -> GenderLexicon:
    """Build a GenderLexicon from parsed sentences.

    Only tokens with upos NOUN and a Gender feature present in the map
    contribute. Lemmas are lowercased and NFC-normalized before
    deduplication; the per-lemma gender is the majority over occurrences,
    with exact ties dropped and counted.
    """
    votes: dict[str, dict[Gender, int]] = {}
    for sentence in sentences:
        for token in sentence:
            if token.upos != "NOUN":
                continue
            gender = gender_feature_map.get(token.feats.get("Gender", ""))
            if gender is None:
                continue
            lemma = normalize_token(token.lemma)
            if not lemma:
                continue
            votes.setdefault(lemma, {g: 0 for g in Gender})[gender] += 1

    if not votes:
        raise ExtractionError(
            "no nouns with a mapped Gender feature were found; "
            "check the feature map and the input file"
        )

    entries: dict[str, Gender] = {}
    counts: dict[str, int] = {}
    conflicts = 0
    for lemma in sorted(votes):
        by_gender = votes[lemma]
        if by_gender[Gender.UTER] == by_gender[Gender.NEUTER]:
            conflicts += 1
            continue
        winner = max(Gender, key=lambda g: by_gender[g])
        entries[lemma] = winner
        counts[lemma] = sum(by_gender.values())

    if not entries:
        raise ExtractionError("every candidate lemma had tied gender annotations")
    return GenderLexicon(language, entries, counts, conflicts_dropped=conflicts)


def split_dataset(
    lexicon: GenderLexicon, test_fraction: float, seed: int
) -> tuple[list[NounRecord], list[NounRecord]]:
    """Disjoint, exhaustive random split; test size = round(fraction * N).

    Plain unstratified sampling, deterministic for a fixed seed. Rounding is
    half-up so the split size is monotone in the fraction.
    """
    if not 0.0 < test_fraction < 1.0:
        raise ValueError(f"test_fraction must be in (0, 1), got {test_fraction}")
    records = lexicon.records()
    if not records:
        raise ExtractionError("cannot split an empty lexicon")
    order = list(range(len(records)))
    random.Random(seed).shuffle(order)
    n_test = int(test_fraction * len(records) + 0.5)
    test_idx = set(order[:n_test])
    train = [records[i] for i in range(len(records)) if i not in test_idx]
    test = [records[i] for i in sorted(test_idx)]
    return train, test


LEXICON_HEADER = "lemma\tgender\tcount"


def write_lexicon(lexicon: GenderLexicon, stream: TextIO) -> None:
    """Lexicon TSV: pinned header, one sorted row per lemma."""
    stream.write(LEXICON_HEADER + "\n")
    for lemma in sorted(lexicon.entries):
        gender = lexicon.entries[lemma].value
        stream.write(f"{lemma}\t{gender}\t{lexicon.counts[lemma]}\n")


def read_lexicon(stream: TextIO, language: str) -> GenderLexicon:
    """Inverse of write_lexicon; the language code is not part of the format."""
    header = stream.readline().rstrip("\n")
    if header != LEXICON_HEADER:
        raise ValueError(f"not a lexicon file: bad header {header!r}")
    entries: dict[str, Gender] = {}
    counts: dict[str, int] = {}
    for line_no, line in enumerate(stream, start=2):
        line = line.rstrip("\n")
        if not line:
            continue
        try:
            lemma, gender, count = line.split("\t")
            entries[lemma] = Gender(gender)
            counts[lemma] = int(count)
        except ValueError as exc:
            raise ValueError(f"lexicon line {line_no}: {exc}") from exc
    return GenderLexicon(language, entries, counts)
