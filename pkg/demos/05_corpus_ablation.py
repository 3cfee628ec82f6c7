#!/usr/bin/env python3
"""The stripped-corpus ablation, end to end at desk scale.

A synthetic corpus is built so the indefinite article deterministically
marks the noun class ("ett" before class A, "en" before class B) while the
noun strings themselves are random letters. Embeddings trained on the raw
corpus encode the class through article co-occurrence; removing the
articles removes the signal, and the probe collapses toward chance.
"""

import time

import numpy as np

from genderprobe import ProbeConfig, SgnsConfig, evaluate, train, train_embeddings
from genderprobe.corpus import StripMode, strip_corpus
from genderprobe.synthetic import make_two_article_corpus

print("=" * 70)
print("1. The constructed corpus")
print("=" * 70)
text, labels = make_two_article_corpus(seed=0)
print(text[:160] + "...")
n_a = sum(1 for c in labels.values() if c == "A")
print(f"\n{len(labels)} nouns ({n_a} class A / {len(labels) - n_a} class B), "
      f"{len(text)} characters")

SGNS = dict(dim=40, window=2, negatives=5, epochs=20, min_count=3,
            subsample_t=0, buckets=1 << 15, learning_rate=0.05, seed=3)


def probe_embeddings(sentences, tag):
    started = time.perf_counter()
    table = train_embeddings(sentences, SgnsConfig(**SGNS))
    data = [
        (np.asarray(table.lookup(noun), dtype=float), 1.0 if cls == "A" else 0.0)
        for noun, cls in labels.items() if table.lookup(noun) is not None
    ]
    order = np.random.default_rng(11).permutation(len(data))
    n_test = round(0.2 * len(data))
    test = [data[i] for i in order[:n_test]]
    train_set = [data[i] for i in order[n_test:]]
    model, _ = train(train_set, ProbeConfig(input_dim=SGNS["dim"], seed=5))
    accuracy, loss = evaluate(model, test)
    print(f"  {tag:12s} accuracy={100 * accuracy:6.2f}%  loss={loss:.3f}  "
          f"({time.perf_counter() - started:.0f}s)")
    return accuracy


print()
print("=" * 70)
print("2. Train embeddings per corpus variant and probe the nouns")
print("=" * 70)
variants = {
    mode: strip_corpus(text, mode) for mode in
    (StripMode.RAW, StripMode.NO_ARTICLES, StripMode.STEMMED)
}
for mode, variant in variants.items():
    stats = variant.stats
    print(f"{mode.value:12s} tokens={stats.token_count}  "
          f"articles_removed={stats.removed_articles}  types={stats.type_count}")

print()
accuracies = {}
for mode, variant in variants.items():
    accuracies[mode] = probe_embeddings(variant.sentences, mode.value)

print()
print("=" * 70)
print("3. Reading the result")
print("=" * 70)
drop = 100 * (accuracies[StripMode.RAW] - accuracies[StripMode.NO_ARTICLES])
print(f"Removing the articles costs the probe {drop:.1f} accuracy points:")
print("the gender signal in these embeddings lives in the noun-article")
print("co-occurrence. Stemming random-letter nouns only perturbs surface")
print("forms here; on real Swedish it additionally destroys the definite")
print("and plural suffixes that carry agreement.")
