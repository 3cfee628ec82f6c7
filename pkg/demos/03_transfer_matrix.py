#!/usr/bin/env python3
"""Cross-lingual model transfer with the chance-corrected baseline.

Two parts. First, the pure arithmetic: plugging the reported raw transfer
accuracies and the per-language class distributions (sv 74/26, da 68/32,
nl 75/25) into the baseline formula reproduces the published corrected
table (up to a known 0.31 rounding artifact in the nl->nl cell). Second, a
live three-language run on synthetic aligned vectors.
"""

import numpy as np

from genderprobe import (
    DEFAULT_GENDER_MAP,
    ClassDistribution,
    ProbeConfig,
    chance_baseline,
    corrected_accuracy,
    extract_nouns,
    parse_conllu,
    split_dataset,
    train,
    transfer_matrix,
)
from genderprobe.synthetic import make_aligned_vectors, make_treebank

print("=" * 70)
print("1. Reconstructing the corrected table from published numbers")
print("=" * 70)
languages = ["sv", "da", "nl"]
distributions = {
    "sv": ClassDistribution(0.74, 0.26),
    "da": ClassDistribution(0.68, 0.32),
    "nl": ClassDistribution(0.75, 0.25),
}
raw = {
    ("sv", "sv"): 93.55, ("sv", "da"): 73.89, ("sv", "nl"): 73.37,
    ("da", "sv"): 81.18, ("da", "da"): 91.81, ("da", "nl"): 78.50,
    ("nl", "sv"): 71.32, ("nl", "da"): 78.54, ("nl", "nl"): 93.34,
}
print(f"{'pair':>10} {'raw':>7} {'baseline':>9} {'corrected':>10}")
for src in languages:
    for tgt in languages:
        baseline = chance_baseline(distributions[src], distributions[tgt])
        corrected = corrected_accuracy(raw[(src, tgt)], baseline)
        print(f"{src + '->' + tgt:>10} {raw[(src, tgt)]:>7.2f} "
              f"{baseline:>9.2f} {corrected:>10.2f}")
print("\nEvery transfer lands above its baseline (corrected > 0): the probes")
print("carry gender information across languages through the aligned space.")

print()
print("=" * 70)
print("2. A live 3-language run on synthetic aligned vectors")
print("=" * 70)
lexicons = {}
for language, seed in [("sv", 1), ("da", 2), ("nl", 3)]:
    sentences, _ = parse_conllu(
        make_treebank(language, 400, seed=seed, inventory_size=140)
    )
    lexicons[language] = extract_nouns(sentences, DEFAULT_GENDER_MAP, language)
tables = make_aligned_vectors(lexicons, dim=20, seed=9, gender_strength=1.2)

models = {}
test_sets = {}
train_dists = {}
test_dists = {}
for language in languages:
    train_records, test_records = split_dataset(lexicons[language], 0.1,
                                                seed=100 + len(language))
    table = tables[language]

    def keep(records):
        return [
            (np.asarray(table.lookup(r.lemma), dtype=float), r.gender.code)
            for r in records if table.lookup(r.lemma) is not None
        ], [r for r in records if table.lookup(r.lemma) is not None]

    train_pairs, train_kept = keep(train_records)
    test_pairs, test_kept = keep(test_records)
    models[language], _ = train(train_pairs,
                                ProbeConfig(input_dim=20, seed=5, max_epochs=80))
    test_sets[language] = test_pairs

    def share(records):
        from genderprobe import Gender
        n_uter = sum(1 for r in records if r.gender is Gender.UTER)
        return ClassDistribution(n_uter / len(records), 1 - n_uter / len(records))

    train_dists[language] = share(train_kept)
    test_dists[language] = share(test_kept)

report = transfer_matrix(models, test_sets, train_dists, test_dists,
                         metadata={"demo": "synthetic-aligned"})
print(report.render_text())
