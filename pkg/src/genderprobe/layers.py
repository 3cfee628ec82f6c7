"""Layer-wise probing of contextual-embedding dumps.

Builds one dataset per layer from gpdump records (token occurrences, not
deduplicated lemmas), trains the probe on an identical occurrence split for
every layer, and reports per-layer loss and accuracy so layers can be
compared on equal footing.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .conllu import Gender
from .probe import ProbeConfig, evaluate, train
from .util import render_aligned_table
from .vectors import ContextualRecord


class DumpConsistencyError(ValueError):
    pass


@dataclass
class LayerDataset:
    layer: int
    occurrence_ids: list[tuple[int, int]]  # (sentence_id, token_index)
    vectors: np.ndarray                    # (n, dim), aligned with ids
    labels: np.ndarray                     # (n,), uter=1 neuter=0
    lemmas: list[str]

    def __len__(self) -> int:
        return len(self.occurrence_ids)


def build_layer_datasets(
    records: Iterable[ContextualRecord],
) -> dict[int, LayerDataset]:
    """Group labeled records by layer, one instance per noun occurrence.

    Verifies that every layer covers exactly the same occurrences and that
    all vectors share one dimensionality; a mismatch means a corrupt dump.
    """
    by_layer: dict[int, dict[tuple[int, int], ContextualRecord]] = {}
    for record in records:
        if record.gold_gender == "none":
            continue
        key = (record.sentence_id, record.token_index)
        layer_map = by_layer.setdefault(record.layer, {})
        if key in layer_map:
            raise DumpConsistencyError(
                f"duplicate record for occurrence {key} in layer {record.layer}"
            )
        layer_map[key] = record

    if not by_layer:
        raise DumpConsistencyError("dump contains no labeled records")

    layer_ids = sorted(by_layer)
    reference = set(by_layer[layer_ids[0]])
    for layer in layer_ids[1:]:
        if set(by_layer[layer]) != reference:
            missing = reference ^ set(by_layer[layer])
            raise DumpConsistencyError(
                f"occurrence sets differ between layers {layer_ids[0]} and "
                f"{layer} (symmetric difference size {len(missing)})"
            )

    dims = {len(r.vector) for m in by_layer.values() for r in m.values()}
    if len(dims) != 1:
        raise DumpConsistencyError(f"mixed vector dimensionalities {sorted(dims)}")

    datasets = {}
    order = sorted(reference)
    for layer in layer_ids:
        layer_map = by_layer[layer]
        datasets[layer] = LayerDataset(
            layer=layer,
            occurrence_ids=order,
            vectors=np.stack([layer_map[k].vector for k in order]).astype(float),
            labels=np.array(
                [1.0 if layer_map[k].gold_gender == Gender.UTER.value else 0.0
                 for k in order]
            ),
            lemmas=[layer_map[k].lemma for k in order],
        )
    return datasets


@dataclass
class LayerResult:
    layer: int
    loss: float
    accuracy: float


def split_occurrences(
    dataset: LayerDataset,
    split_seed: int,
    test_fraction: float = 0.1,
    lemma_disjoint: bool = False,
) -> tuple[list[int], list[int]]:
    """Train/test index split over occurrences, computed once per comparison.

    Occurrence-level by default (repeated lemmas may land on both sides);
    `lemma_disjoint` instead splits unique lemmas, for stricter probing.
    """
    n = len(dataset)
    rng = random.Random(split_seed)
    if lemma_disjoint:
        unique = sorted(set(dataset.lemmas))
        rng.shuffle(unique)
        n_test = int(test_fraction * len(unique) + 0.5)
        test_lemmas = set(unique[:n_test])
        test_idx = [i for i, lemma in enumerate(dataset.lemmas)
                    if lemma in test_lemmas]
        train_idx = [i for i, lemma in enumerate(dataset.lemmas)
                     if lemma not in test_lemmas]
    else:
        order = list(range(n))
        rng.shuffle(order)
        n_test = int(test_fraction * n + 0.5)
        test_idx = sorted(order[:n_test])
        train_idx = sorted(order[n_test:])
    if not test_idx or not train_idx:
        raise DumpConsistencyError("split left an empty train or test side")
    return train_idx, test_idx


def layer_compare(
    datasets: dict[int, LayerDataset],
    split_seed: int,
    probe_seed: int = 0,
    test_fraction: float = 0.1,
    lemma_disjoint: bool = False,
    probe_overrides: dict | None = None,
) -> list[LayerResult]:
    """Train one probe per layer on the shared split; hidden = 2 x input."""
    layer_ids = sorted(datasets)
    dims = {datasets[l].vectors.shape[1] for l in layer_ids}
    if len(dims) != 1:
        raise DumpConsistencyError(f"layers disagree on dimensionality: {sorted(dims)}")
    input_dim = dims.pop()

    reference = datasets[layer_ids[0]]
    train_idx, test_idx = split_occurrences(
        reference, split_seed, test_fraction, lemma_disjoint
    )
    for layer in layer_ids[1:]:
        if datasets[layer].occurrence_ids != reference.occurrence_ids:
            raise DumpConsistencyError("datasets must share one occurrence order")

    results = []
    for layer in layer_ids:
        data = datasets[layer]
        config = ProbeConfig(
            input_dim=input_dim, seed=probe_seed, **(probe_overrides or {})
        )
        train_set = list(zip(data.vectors[train_idx], data.labels[train_idx]))
        test_set = list(zip(data.vectors[test_idx], data.labels[test_idx]))
        model, _ = train(train_set, config)
        accuracy, loss = evaluate(model, test_set)
        results.append(LayerResult(layer=layer, loss=loss, accuracy=accuracy))
    return results


LAYER_NAMES = {
    0: "Word representation layer",
    1: "First contextual layer",
    2: "Second contextual layer",
}


def render_results_text(results: Sequence[LayerResult]) -> str:
    rows = [
        [LAYER_NAMES.get(r.layer, f"Layer {r.layer}"),
         f"{r.loss:.3f}", f"{100 * r.accuracy:.2f}"]
        for r in results
    ]
    return render_aligned_table(["layer", "loss", "accuracy"], rows)


def render_results_tsv(results: Sequence[LayerResult]) -> str:
    lines = ["layer\tloss\taccuracy"]
    lines += [f"{r.layer}\t{r.loss:.6f}\t{100 * r.accuracy:.4f}" for r in results]
    return "\n".join(lines) + "\n"
