#!/usr/bin/env python3
"""Training the feed-forward gender probe on noun vectors.

The probe is a two-layer network (tanh hidden layer twice the input width,
logistic output) trained with minibatch Adam and early stopping on a carved
validation split. This demo trains it on synthetic gender-aligned vectors
and shows the convergence trace and the checkpoint round-trip.
"""

import io

import numpy as np

from genderprobe import (
    DEFAULT_GENDER_MAP,
    ProbeConfig,
    evaluate,
    extract_nouns,
    forward,
    parse_conllu,
    split_dataset,
    train,
)
from genderprobe.probe import load_model, save_model
from genderprobe.synthetic import make_aligned_vectors, make_treebank

print("=" * 70)
print("1. Build a labeled vector dataset")
print("=" * 70)
sentences, _ = parse_conllu(make_treebank("sv", 300, seed=3))
lexicon = extract_nouns(sentences, DEFAULT_GENDER_MAP, "sv")
table = make_aligned_vectors({"sv": lexicon}, dim=24, seed=5)["sv"]

train_records, test_records = split_dataset(lexicon, 0.1, seed=11)


def pairs(records):
    out = []
    skipped = 0
    for record in records:
        vector = table.lookup(record.lemma)
        if vector is None:
            skipped += 1
            continue
        out.append((np.asarray(vector, dtype=float), record.gender.code))
    return out, skipped


train_pairs, train_skipped = pairs(train_records)
test_pairs, test_skipped = pairs(test_records)
print(f"train={len(train_pairs)} (oov skipped {train_skipped})  "
      f"test={len(test_pairs)} (oov skipped {test_skipped})  dim={table.dim}")

print()
print("=" * 70)
print("2. Train until validation loss stops improving")
print("=" * 70)
config = ProbeConfig(input_dim=table.dim, seed=1)
print(f"hidden={config.hidden_dim} (2 x input)  lr={config.learning_rate}  "
      f"patience={config.patience}")
model, history = train(train_pairs, config)
for epoch in range(0, len(history.epochs), max(1, len(history.epochs) // 8)):
    record = history.epochs[epoch]
    print(f"  epoch {epoch:3d}  train_loss={record.train_loss:.4f}  "
          f"val_loss={record.val_loss:.4f}  val_acc={record.val_accuracy:.3f}")
print(f"stopped: {history.stop_reason} at epoch {len(history.epochs) - 1}, "
      f"best epoch {history.best_epoch}")

accuracy, loss = evaluate(model, test_pairs)
print(f"held-out accuracy {100 * accuracy:.2f}%  loss {loss:.4f}")

print()
print("=" * 70)
print("3. Checkpoints reproduce forward outputs exactly")
print("=" * 70)
buffer = io.StringIO()
save_model(model, buffer)
buffer.seek(0)
reloaded = load_model(buffer)
x = test_pairs[0][0]
print(f"original p={forward(model, x):.12f}")
print(f"reloaded p={forward(reloaded, x):.12f}")
print("bit-exact:", forward(model, x) == forward(reloaded, x))
