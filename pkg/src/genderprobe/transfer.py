"""Cross-lingual transfer matrix with the chance-corrected baseline.

Raw accuracy of a source-language probe on a target-language test set is
corrected by the expected accuracy of distribution-matched guessing,
sum over classes of p(class | source train) * p(class | target test),
expressed in percent like the reported tables.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Mapping, Sequence

import numpy as np

from .util import render_aligned_table

if TYPE_CHECKING:
    from .probe import ProbeModel


@dataclass(frozen=True)
class ClassDistribution:
    """Binary class shares; must sum to one (within float-sum error)."""

    p_uter: float
    p_neuter: float

    def __post_init__(self):
        if not (0.0 <= self.p_uter <= 1.0 and 0.0 <= self.p_neuter <= 1.0):
            raise ValueError(f"class shares must lie in [0,1]: {self}")
        if abs(self.p_uter + self.p_neuter - 1.0) > 1e-12:
            raise ValueError(f"class shares must sum to 1: {self}")


def chance_baseline(source: ClassDistribution, target: ClassDistribution) -> float:
    """Percent chance of a correct guess from the two class distributions."""
    return 100.0 * (
        source.p_uter * target.p_uter + source.p_neuter * target.p_neuter
    )


def corrected_accuracy(raw_percent: float, baseline_percent: float) -> float:
    """Raw minus baseline; negative means worse than chance."""
    return raw_percent - baseline_percent


@dataclass
class TransferReport:
    languages: list[str]
    raw: np.ndarray        # percent, source rows x target columns
    baselines: np.ndarray  # percent
    corrected: np.ndarray  # percent, raw - baselines exactly
    metadata: dict = field(default_factory=dict)

    def render_text(self) -> str:
        """Aligned text tables (raw, baselines, corrected) plus metadata."""
        parts = []
        for title, matrix in [
            ("Raw accuracy (%)", self.raw),
            ("Chance baseline (%)", self.baselines),
            ("Corrected accuracy (%)", self.corrected),
        ]:
            rows = [
                [src.upper()] + [f"{value:.2f}" for value in matrix[i]]
                for i, src in enumerate(self.languages)
            ]
            parts.append(title + "\n" + render_aligned_table(
                ["model\\test"] + [t.upper() for t in self.languages], rows
            ))
        meta_lines = [f"# {key}={self.metadata[key]}" for key in sorted(self.metadata)]
        return "\n".join(parts + meta_lines) + ("\n" if meta_lines else "")

    def render_tsv(self) -> str:
        """Machine-readable TSV with one block per matrix and a metadata block."""
        lines = []
        for key in sorted(self.metadata):
            lines.append(f"# {key}={self.metadata[key]}")
        for name, matrix in [
            ("raw", self.raw),
            ("baseline", self.baselines),
            ("corrected", self.corrected),
        ]:
            lines.append("\t".join([f"[{name}]"] + self.languages))
            for i, src in enumerate(self.languages):
                lines.append(
                    "\t".join([src] + [f"{value:.6f}" for value in matrix[i]])
                )
        return "\n".join(lines) + "\n"


def transfer_matrix(
    models: Mapping[str, "ProbeModel"],
    test_sets: Mapping[str, Sequence],
    train_distributions: Mapping[str, ClassDistribution],
    test_distributions: Mapping[str, ClassDistribution],
    metadata: dict | None = None,
) -> TransferReport:
    """Apply every language's probe to every language's test set.

    Rows are the model's source language, columns the test-set language,
    matching the table orientation of the reported results. Baselines pair
    the source TRAINING distribution with the target TEST-split distribution.
    """
    from .probe import evaluate

    languages = list(models)
    missing = [lang for lang in languages if lang not in test_sets]
    if missing:
        raise ValueError(f"test sets missing for languages: {missing}")

    dims = {lang: models[lang].input_dim for lang in languages}
    size = len(languages)
    raw = np.zeros((size, size))
    baselines = np.zeros((size, size))
    for i, src in enumerate(languages):
        for j, tgt in enumerate(languages):
            sample = test_sets[tgt]
            width = len(sample[0][0]) if len(sample) else dims[src]
            if width != dims[src]:
                raise ValueError(
                    f"dimension mismatch: model {src} expects {dims[src]}, "
                    f"test set {tgt} has {width}"
                )
            accuracy, _ = evaluate(models[src], sample)
            raw[i, j] = 100.0 * accuracy
            baselines[i, j] = chance_baseline(
                train_distributions[src], test_distributions[tgt]
            )
    corrected = raw - baselines
    return TransferReport(languages, raw, baselines, corrected, metadata or {})
