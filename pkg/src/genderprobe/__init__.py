"""Toolkit for probing word embeddings for grammatical gender.

Subpackages cover treebank ingestion (conllu), vector and dump file formats
(vectors), the feed-forward probe (probe), chance-corrected cross-lingual
transfer (transfer), corpus ablation (corpus, snowball), subword SGNS
embedding training (sgns), layer-wise probing of contextual dumps (layers),
synthetic data builders (synthetic) and the command-line front end (cli).
"""

from .conllu import (
    DEFAULT_GENDER_MAP,
    Gender,
    GenderLexicon,
    NounRecord,
    extract_nouns,
    parse_conllu,
    read_lexicon,
    split_dataset,
    write_lexicon,
)
from .corpus import ArticleSet, StripMode, strip_corpus, swedish_articles, tokenize
from .layers import build_layer_datasets, layer_compare
from .probe import ProbeConfig, ProbeModel, evaluate, forward, train
from .sgns import SgnsConfig, train_embeddings
from .snowball import stem_swedish, stem_swedish_once
from .transfer import ClassDistribution, chance_baseline, corrected_accuracy, transfer_matrix
from .vectors import EmbeddingTable, load_vec_text, read_dump, save_vec_text, write_dump

__all__ = [
    "DEFAULT_GENDER_MAP", "Gender", "GenderLexicon", "NounRecord",
    "extract_nouns", "parse_conllu", "read_lexicon", "split_dataset",
    "write_lexicon", "ArticleSet", "StripMode", "strip_corpus",
    "swedish_articles", "tokenize", "build_layer_datasets", "layer_compare",
    "ProbeConfig", "ProbeModel", "evaluate", "forward", "train",
    "SgnsConfig", "train_embeddings", "stem_swedish", "stem_swedish_once",
    "ClassDistribution", "chance_baseline", "corrected_accuracy",
    "transfer_matrix", "EmbeddingTable", "load_vec_text", "read_dump",
    "save_vec_text", "write_dump",
]

__version__ = "0.1.0"
