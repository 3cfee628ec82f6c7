"""Skip-gram with negative sampling plus hashed character n-gram subwords.

Trains static word embeddings from a tokenized corpus so the corpus-ablation
experiment runs end to end. A word's vector is the mean of its own input
vector and the hashed vectors of its boundary-marked character n-grams;
training follows the classic SGNS objective with frequency subsampling,
per-center window radius sampling, and linear learning-rate decay.

Single-threaded mode is bit-exactly reproducible for a fixed seed: all
per-position randomness (subsampling, window radii, negative draws) comes
from counter-based streams keyed on absolute token positions, so results do
not depend on how the corpus is traversed or partitioned. The optional
multi-worker mode updates parameters without locks and is only
statistically stable.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .util import CounterRng
from .vectors import EmbeddingTable

log = logging.getLogger(__name__)


@dataclass
class SgnsConfig:
    dim: int = 300
    window: int = 5
    negatives: int = 5
    epochs: int = 5
    min_count: int = 5
    subsample_t: float = 1e-4
    learning_rate: float = 0.025
    min_learning_rate: float = 1e-5
    ngram_min: int = 3
    ngram_max: int = 6
    buckets: int = 1 << 21
    seed: int = 0
    workers: int = 1

    def __post_init__(self):
        if min(self.dim, self.window, self.negatives, self.epochs,
               self.min_count, self.buckets, self.workers) <= 0:
            raise ValueError("all counts must be positive")
        if self.ngram_min > self.ngram_max:
            raise ValueError("ngram_min must be <= ngram_max")
        if self.learning_rate <= 0:
            raise ValueError("learning_rate must be positive")


class VocabError(ValueError):
    pass


@dataclass
class Vocab:
    index: dict[str, int]
    tokens: list[str]
    counts: np.ndarray
    total_tokens: int
    sampling_probs: np.ndarray = field(repr=False)
    sampling_cum: np.ndarray = field(repr=False)

    def __len__(self) -> int:
        return len(self.tokens)


def build_vocab(sentences: Iterable[Sequence[str]], config: SgnsConfig) -> Vocab:
    """Frequency-filtered vocabulary with the unigram^0.75 sampling table.

    Index assignment is deterministic: frequency descending, token ascending.
    """
    raw_counts: dict[str, int] = {}
    total = 0
    for sentence in sentences:
        for token in sentence:
            raw_counts[token] = raw_counts.get(token, 0) + 1
            total += 1
    kept = {t: c for t, c in raw_counts.items() if c >= config.min_count}
    if not kept:
        raise VocabError(
            f"no token reaches min_count={config.min_count}; corpus too small"
        )
    ordered = sorted(kept, key=lambda t: (-kept[t], t))
    counts = np.array([kept[t] for t in ordered], dtype=np.int64)
    weights = counts.astype(np.float64) ** 0.75
    probs = weights / weights.sum()
    return Vocab(
        index={t: i for i, t in enumerate(ordered)},
        tokens=ordered,
        counts=counts,
        total_tokens=total,
        sampling_probs=probs,
        sampling_cum=np.cumsum(probs),
    )


def character_ngrams(token: str, ngram_min: int, ngram_max: int) -> list[str]:
    """Boundary-marked n-grams of `<token>`, deduplicated in first-seen order.

    A token too short to produce any n-gram falls back to its whole wrapped
    form, so every token has at least one subword feature.
    """
    wrapped = f"<{token}>"
    grams: list[str] = []
    seen = set()
    for n in range(ngram_min, ngram_max + 1):
        for start in range(0, len(wrapped) - n + 1):
            gram = wrapped[start:start + n]
            if gram not in seen:
                seen.add(gram)
                grams.append(gram)
    if not grams:
        grams = [wrapped]
    return grams


def fnv1a_bucket(gram: str, buckets: int) -> int:
    """FNV-1a 32-bit over UTF-8 bytes, reduced to a bucket index."""
    value = 0x811C9DC5
    for byte in gram.encode("utf-8"):
        value ^= byte
        value = (value * 0x01000193) & 0xFFFFFFFF
    return value % buckets


@dataclass
class SgnsStores:
    word_in: np.ndarray    # (V, dim)
    ngram_in: np.ndarray   # (buckets, dim)
    word_out: np.ndarray   # (V, dim) context vectors
    gram_rows: list[np.ndarray]  # per vocab index, the hashed gram buckets


def init_stores(
    vocab: Vocab, config: SgnsConfig, dtype=np.float32
) -> SgnsStores:
    """word2vec-style initialization: uniform(-0.5,0.5)/dim inputs, zero outputs."""
    rng = np.random.default_rng(config.seed)
    word_in = (rng.random((len(vocab), config.dim)) - 0.5) / config.dim
    ngram_in = (rng.random((config.buckets, config.dim)) - 0.5) / config.dim
    word_out = np.zeros((len(vocab), config.dim))
    gram_rows = [
        np.array(
            [fnv1a_bucket(g, config.buckets)
             for g in character_ngrams(t, config.ngram_min, config.ngram_max)],
            dtype=np.int64,
        )
        for t in vocab.tokens
    ]
    return SgnsStores(
        word_in=word_in.astype(dtype),
        ngram_in=ngram_in.astype(dtype),
        word_out=word_out.astype(dtype),
        gram_rows=gram_rows,
    )


def _compose(stores: SgnsStores, word_id: int) -> np.ndarray:
    """Mean of the word's own vector and its gram vectors."""
    rows = stores.gram_rows[word_id]
    return (stores.word_in[word_id] + stores.ngram_in[rows].sum(axis=0)) / (
        1 + len(rows)
    )


def word_vector(
    token: str, stores: SgnsStores, vocab: Vocab, config: SgnsConfig
) -> np.ndarray:
    """Composed vector for any token; OOV tokens use their n-grams only."""
    word_id = vocab.index.get(token)
    if word_id is not None:
        return _compose(stores, word_id)
    buckets = np.array(
        [fnv1a_bucket(g, config.buckets)
         for g in character_ngrams(token, config.ngram_min, config.ngram_max)],
        dtype=np.int64,
    )
    return stores.ngram_in[buckets].mean(axis=0)


def _sigmoid(z: np.ndarray) -> np.ndarray:
    out = np.empty_like(z, dtype=np.float64)
    pos = z >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-z[pos]))
    ez = np.exp(z[~pos])
    out[~pos] = ez / (1.0 + ez)
    return out


def _apply_step(
    stores: SgnsStores,
    center_id: int,
    context_id: int,
    negative_ids: np.ndarray,
    lr: float,
) -> float:
    """One gradient step on -ln s(u_ctx.v) - sum ln s(-u_neg.v); returns the loss.

    v is the mean of the center word's own vector and its gram vectors, so
    the center-side gradient is distributed equally over all contributors.
    """
    gram_rows = stores.gram_rows[center_id]
    k = 1 + len(gram_rows)
    center_vec = (
        stores.word_in[center_id] + stores.ngram_in[gram_rows].sum(axis=0)
    ) / k

    targets = np.concatenate(([context_id], negative_ids))
    labels = np.zeros(len(targets))
    labels[0] = 1.0
    out_rows = stores.word_out[targets].astype(np.float64)
    scores = out_rows @ center_vec.astype(np.float64)
    probs = _sigmoid(scores)
    # loss = softplus(-s_pos) + sum softplus(s_neg), computed stably
    signed = np.where(labels == 1.0, -scores, scores)
    loss = float(np.sum(np.maximum(signed, 0) + np.log1p(np.exp(-np.abs(signed)))))

    coeff = probs - labels                       # d loss / d score
    grad_center = coeff @ out_rows               # (dim,)
    grad_out = np.outer(coeff, center_vec)       # (m, dim)

    dtype = stores.word_out.dtype
    np.add.at(stores.word_out, targets, (-lr * grad_out).astype(dtype))
    share = (-lr / k) * grad_center
    stores.word_in[center_id] += share.astype(dtype)
    np.add.at(stores.ngram_in, gram_rows, share.astype(dtype))
    return loss


def sgns_step(
    center: str,
    context: str,
    negatives: Sequence[str],
    stores: SgnsStores,
    vocab: Vocab,
    lr: float,
) -> float:
    """Token-level wrapper around one SGNS update; returns the pair loss."""
    center_id = vocab.index[center]
    context_id = vocab.index[context]
    negative_ids = np.array([vocab.index[t] for t in negatives], dtype=np.int64)
    return _apply_step(stores, center_id, context_id, negative_ids, lr)


def pair_loss(
    stores: SgnsStores,
    center_id: int,
    context_id: int,
    negative_ids: np.ndarray,
) -> float:
    """SGNS loss of one (center, context, negatives) triple, no update."""
    center_vec = _compose(stores, center_id).astype(np.float64)
    targets = np.concatenate(([context_id], negative_ids))
    scores = stores.word_out[targets].astype(np.float64) @ center_vec
    signed = np.concatenate((-scores[:1], scores[1:]))
    return float(np.sum(np.maximum(signed, 0) + np.log1p(np.exp(-np.abs(signed)))))


def _draw_negatives(
    rng: CounterRng,
    counter_base: int,
    vocab: Vocab,
    count: int,
    exclude: int,
) -> np.ndarray:
    """Unigram^0.75 draws, re-drawn (up to 8 tries) when they hit `exclude`."""
    out = np.empty(count, dtype=np.int64)
    for slot in range(count):
        draw = exclude
        for retry in range(8):
            u = rng.uniform(counter_base + slot * 8 + retry)
            draw = int(np.searchsorted(vocab.sampling_cum, u, side="right"))
            draw = min(draw, len(vocab) - 1)
            if draw != exclude:
                break
        out[slot] = draw
    return out


def train_embeddings(
    sentences: Sequence[Sequence[str]],
    config: SgnsConfig,
    dtype=np.float32,
) -> EmbeddingTable:
    """Full SGNS training; returns composed vectors for every vocab token."""
    vocab = build_vocab(sentences, config)
    stores = init_stores(vocab, config, dtype=dtype)
    _train_loop(sentences, vocab, stores, config)

    table = EmbeddingTable(
        dim=config.dim,
        source_tag=(
            f"sgns dim={config.dim} window={config.window} neg={config.negatives} "
            f"epochs={config.epochs} min_count={config.min_count} seed={config.seed}"
        ),
    )
    for token in vocab.tokens:
        table.vectors[token] = _compose(stores, vocab.index[token]).astype(np.float32)
    return table


def _train_loop(sentences, vocab, stores, config) -> list[float]:
    """Run all epochs; returns the mean pair loss observed in each epoch."""
    total = vocab.total_tokens
    keep_prob = np.ones(len(vocab))
    if config.subsample_t > 0:
        freq = vocab.counts / total
        keep_prob = np.minimum(1.0, np.sqrt(config.subsample_t / freq))

    sub_rng = CounterRng(config.seed, "subsample")
    win_rng = CounterRng(config.seed, "window")
    neg_rng = CounterRng(config.seed, "negatives")

    # absolute original-stream position of each sentence start, so counter
    # streams are identical no matter how sentences are partitioned
    offsets = np.cumsum([0] + [len(s) for s in sentences])[:-1]
    steps_total = config.epochs * total
    report_every = max(1, steps_total // 100)

    def process_sentence(sentence, start_pos, epoch):
        epoch_base = epoch * total
        kept_ids = []
        kept_pos = []
        for offset, token in enumerate(sentence):
            word_id = vocab.index.get(token)
            if word_id is None:
                continue
            position = start_pos + offset
            if keep_prob[word_id] < 1.0:
                if sub_rng.uniform(epoch_base + position) >= keep_prob[word_id]:
                    continue
            kept_ids.append(word_id)
            kept_pos.append(position)

        span = 2 * config.window + 2
        loss_sum = 0.0
        pairs = 0
        for j, center_id in enumerate(kept_ids):
            position = kept_pos[j]
            processed = epoch_base + position
            lr = max(
                config.min_learning_rate,
                config.learning_rate * (1.0 - processed / steps_total),
            )
            radius = 1 + int(win_rng.uniform(processed) * config.window)
            lo = max(0, j - radius)
            hi = min(len(kept_ids), j + radius + 1)
            for k in range(lo, hi):
                if k == j:
                    continue
                context_id = kept_ids[k]
                pair_counter = (processed * span + (k - j + config.window)) * (
                    config.negatives * 8
                )
                negatives = _draw_negatives(
                    neg_rng, pair_counter, vocab, config.negatives, context_id
                )
                loss_sum += _apply_step(stores, center_id, context_id, negatives, lr)
                pairs += 1
        return loss_sum, pairs

    epoch_losses = []
    for epoch in range(config.epochs):
        epoch_loss = 0.0
        epoch_pairs = 0
        if config.workers == 1:
            for sentence_no, sentence in enumerate(sentences):
                loss_sum, pairs = process_sentence(
                    sentence, int(offsets[sentence_no]), epoch
                )
                epoch_loss += loss_sum
                epoch_pairs += pairs
                position_done = int(offsets[sentence_no]) + len(sentence)
                done = epoch * total + position_done
                if done % report_every < len(sentence):
                    log.info(
                        "sgns progress %d%% (epoch %d)",
                        100 * done // steps_total, epoch,
                    )
        else:
            # lock-free concurrent updates: statistically, not bitwise, stable
            with ThreadPoolExecutor(max_workers=config.workers) as pool:
                results = list(
                    pool.map(
                        lambda pair: process_sentence(pair[1], int(offsets[pair[0]]), epoch),
                        enumerate(sentences),
                    )
                )
            epoch_loss = sum(r[0] for r in results)
            epoch_pairs = sum(r[1] for r in results)
        epoch_losses.append(epoch_loss / max(1, epoch_pairs))
    return epoch_losses
