"""Word-vector tables and the per-layer contextual dump interchange format.

Static tables use the text .vec layout (count/dim header, one token plus
components per line). Contextual records use the gpdump v1 format: a header
line declaring dim and layer set, then one TSV row per (occurrence, layer)
with the vector as comma-separated floats at 9 significant digits, which
round-trips 32-bit values exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, TextIO

import numpy as np

from .util import fmt_float9, normalize_token


class VectorFormatError(ValueError):
    """Malformed vector or dump content; carries the 1-based line number."""

    def __init__(self, message: str, line_no: int):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass
class EmbeddingTable:
    dim: int
    vectors: dict[str, np.ndarray] = field(default_factory=dict)
    source_tag: str = ""
    duplicates_dropped: int = 0

    def __len__(self) -> int:
        return len(self.vectors)

    def lookup(self, token: str) -> Optional[np.ndarray]:
        """Exact-match lookup after lowercase+NFC normalization; None on miss."""
        return self.vectors.get(normalize_token(token))


def load_vec_text(
    stream: TextIO, vocabulary_filter: Optional[set[str]] = None
) -> EmbeddingTable:
    """Read a text .vec file; optionally keep only a filter vocabulary.

    Duplicate tokens keep the first occurrence and are counted. Tokens are
    stored normalized (lowercase+NFC), matching every other lookup path.
    """
    header = stream.readline().strip()
    parts = header.split()
    if len(parts) != 2:
        raise VectorFormatError(f"bad header {header!r}, expected '<count> <dim>'", 1)
    try:
        declared_count, dim = int(parts[0]), int(parts[1])
    except ValueError:
        raise VectorFormatError(f"non-integer header fields in {header!r}", 1) from None
    if dim <= 0:
        raise VectorFormatError("dimension must be positive", 1)

    if vocabulary_filter is not None:
        vocabulary_filter = {normalize_token(t) for t in vocabulary_filter}

    table = EmbeddingTable(dim=dim)
    for line_no, line in enumerate(stream, start=2):
        line = line.rstrip("\n")
        if not line:
            continue
        pieces = line.split(" ")
        token = normalize_token(pieces[0])
        if len(pieces) - 1 != dim:
            raise VectorFormatError(
                f"token {pieces[0]!r} has {len(pieces) - 1} components, expected {dim}",
                line_no,
            )
        if vocabulary_filter is not None and token not in vocabulary_filter:
            continue
        if token in table.vectors:
            table.duplicates_dropped += 1
            continue
        try:
            vector = np.array([float(v) for v in pieces[1:]], dtype=np.float32)
        except ValueError:
            raise VectorFormatError("unparseable vector component", line_no) from None
        if not np.all(np.isfinite(vector)):
            raise VectorFormatError("non-finite vector component", line_no)
        table.vectors[token] = vector
    del declared_count  # informative only; filtered loads keep fewer rows
    return table


def save_vec_text(table: EmbeddingTable, stream: TextIO) -> None:
    """Write header then token rows sorted by token; lossless at 9 digits."""
    if len(table) == 0:
        raise ValueError("refusing to write an empty embedding table")
    stream.write(f"{len(table)} {table.dim}\n")
    for token in sorted(table.vectors):
        if not token or any(c.isspace() for c in token):
            raise ValueError(f"token {token!r} cannot be written to the .vec format")
        components = " ".join(fmt_float9(v) for v in table.vectors[token])
        stream.write(f"{token} {components}\n")


def lookup(table: EmbeddingTable, token: str) -> Optional[np.ndarray]:
    return table.lookup(token)


GOLD_GENDER_VALUES = ("uter", "neuter", "none")


@dataclass
class ContextualRecord:
    sentence_id: int
    token_index: int
    token: str
    lemma: str
    gold_gender: str  # "uter" | "neuter" | "none"
    layer: int
    vector: np.ndarray

    def __post_init__(self):
        if self.gold_gender not in GOLD_GENDER_VALUES:
            raise ValueError(f"bad gold_gender {self.gold_gender!r}")
        if self.sentence_id < 0 or self.token_index < 0 or self.layer < 0:
            raise ValueError("ids, indices and layers must be nonnegative")


DUMP_MAGIC = "#gpdump v1"


def write_dump(
    records: Sequence[ContextualRecord],
    stream: TextIO,
    dim: int,
    layers: Sequence[int],
) -> None:
    """gpdump v1: declared header, then one TSV row per record."""
    layer_set = set(layers)
    stream.write(f"{DUMP_MAGIC} dim={dim} layers={','.join(str(l) for l in layers)}\n")
    for record in records:
        if record.layer not in layer_set:
            raise ValueError(
                f"record layer {record.layer} not in declared layers {sorted(layer_set)}"
            )
        if len(record.vector) != dim:
            raise ValueError(
                f"record vector has length {len(record.vector)}, file declares {dim}"
            )
        for text in (record.token, record.lemma):
            if "\t" in text or "\n" in text:
                raise ValueError(f"field {text!r} cannot be written as a TSV cell")
        vector_text = ",".join(fmt_float9(v) for v in record.vector)
        stream.write(
            f"{record.sentence_id}\t{record.token_index}\t{record.token}\t"
            f"{record.lemma}\t{record.gold_gender}\t{record.layer}\t{vector_text}\n"
        )


def read_dump(stream: TextIO) -> list[ContextualRecord]:
    """Read and validate a gpdump v1 file."""
    header = stream.readline().rstrip("\n")
    parts = header.split()
    if len(parts) != 4 or " ".join(parts[:2]) != DUMP_MAGIC:
        raise VectorFormatError(f"not a gpdump file: bad header {header!r}", 1)
    try:
        dim = int(parts[2].removeprefix("dim="))
        layers = {int(l) for l in parts[3].removeprefix("layers=").split(",")}
    except ValueError:
        raise VectorFormatError(f"bad gpdump header {header!r}", 1) from None

    records = []
    for line_no, line in enumerate(stream, start=2):
        line = line.rstrip("\n")
        if not line:
            continue
        columns = line.split("\t")
        if len(columns) != 7:
            raise VectorFormatError(
                f"expected 7 tab-separated columns, got {len(columns)}", line_no
            )
        sentence_id, token_index, token, lemma, gold_gender, layer, vector_text = columns
        try:
            layer_id = int(layer)
        except ValueError:
            raise VectorFormatError(f"bad layer id {layer!r}", line_no) from None
        if layer_id not in layers:
            raise VectorFormatError(
                f"layer {layer_id} outside declared set {sorted(layers)}", line_no
            )
        if gold_gender not in GOLD_GENDER_VALUES:
            raise VectorFormatError(f"bad gold_gender {gold_gender!r}", line_no)
        try:
            vector = np.array(
                [float(v) for v in vector_text.split(",")], dtype=np.float32
            )
        except ValueError:
            raise VectorFormatError("unparseable vector component", line_no) from None
        if len(vector) != dim:
            raise VectorFormatError(
                f"vector length {len(vector)} differs from declared dim {dim}", line_no
            )
        if not np.all(np.isfinite(vector)):
            raise VectorFormatError("non-finite vector component", line_no)
        try:
            records.append(
                ContextualRecord(
                    sentence_id=int(sentence_id),
                    token_index=int(token_index),
                    token=token,
                    lemma=lemma,
                    gold_gender=gold_gender,
                    layer=layer_id,
                    vector=vector,
                )
            )
        except ValueError as exc:
            raise VectorFormatError(str(exc), line_no) from None
    return records


def dump_layers(records: Iterable[ContextualRecord]) -> list[int]:
    """Sorted distinct layer ids present in a record sequence."""
    return sorted({record.layer for record in records})


def assert_finite_table(table: EmbeddingTable) -> None:
    """Invariant check used by tests and pipelines after any load."""
    for token, vector in table.vectors.items():
        if len(vector) != table.dim:
            raise ValueError(f"token {token!r} has wrong dimensionality")
        if not np.all(np.isfinite(vector)):
            raise ValueError(f"token {token!r} has non-finite components")


def table_from_pairs(
    pairs: Iterable[tuple[str, Sequence[float]]], dim: int, source_tag: str = ""
) -> EmbeddingTable:
    """Build a table from (token, vector) pairs, validating as it goes."""
    table = EmbeddingTable(dim=dim, source_tag=source_tag)
    for token, vector in pairs:
        arr = np.asarray(vector, dtype=np.float32)
        if arr.shape != (dim,):
            raise ValueError(f"vector for {token!r} has shape {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise ValueError(f"vector for {token!r} has non-finite components")
        normalized = normalize_token(token)
        if normalized in table.vectors:
            table.duplicates_dropped += 1
            continue
        table.vectors[normalized] = arr
    return table
