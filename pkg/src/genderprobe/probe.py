"""Two-layer feed-forward binary probe, trained from scratch.

Architecture: input -> tanh hidden layer -> logistic output, binary
cross-entropy loss, minibatch gradient descent with Adam-style adaptive
moments, and early stopping on an internal validation split. Everything is
plain numpy and fully deterministic for a fixed seed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence, TextIO

import numpy as np

from .util import fmt_float_exact

# Output probabilities are clamped to [EPS, 1-EPS] so the loss stays finite;
# this caps a single-sample loss at -ln(EPS) ~ 27.6.
EPS = 1e-12

ADAM_BETA1 = 0.9
ADAM_BETA2 = 0.999
ADAM_EPS = 1e-8


@dataclass
class ProbeConfig:
    input_dim: int
    hidden_dim: int | None = None  # resolved to 2 * input_dim
    learning_rate: float = 1e-3
    batch_size: int = 32
    patience: int = 10
    max_epochs: int = 500
    validation_fraction: float = 0.1
    seed: int = 0

    def __post_init__(self):
        if self.hidden_dim is None:
            self.hidden_dim = 2 * self.input_dim
        if self.input_dim <= 0 or self.hidden_dim <= 0:
            raise ValueError("layer sizes must be positive")
        if self.learning_rate <= 0:
            raise ValueError("learning_rate must be positive")
        if min(self.batch_size, self.patience, self.max_epochs) <= 0:
            raise ValueError("batch_size, patience and max_epochs must be positive")
        if not 0.0 < self.validation_fraction < 1.0:
            raise ValueError("validation_fraction must be in (0, 1)")


@dataclass
class ProbeModel:
    W1: np.ndarray  # (hidden, input)
    b1: np.ndarray  # (hidden,)
    W2: np.ndarray  # (1, hidden)
    b2: float

    @property
    def input_dim(self) -> int:
        return self.W1.shape[1]

    @property
    def hidden_dim(self) -> int:
        return self.W1.shape[0]

    def copy(self) -> "ProbeModel":
        return ProbeModel(self.W1.copy(), self.b1.copy(), self.W2.copy(), self.b2)


@dataclass
class EpochRecord:
    train_loss: float
    val_loss: float
    val_accuracy: float


@dataclass
class TrainHistory:
    """Per-epoch trace; best_epoch is -1 when no epoch beat the untrained
    base-rate predictor's validation loss (the returned model is then that
    predictor)."""

    epochs: list[EpochRecord] = field(default_factory=list)
    best_epoch: int = -1
    stop_reason: str = ""


class TrainingError(ValueError):
    pass


class TrainingDiverged(RuntimeError):
    """Non-finite loss or parameters; carries the epoch it happened in."""

    def __init__(self, message: str, epoch: int):
        super().__init__(f"epoch {epoch}: {message}")
        self.epoch = epoch


def _sigmoid(z: np.ndarray) -> np.ndarray:
    out = np.empty_like(z, dtype=float)
    pos = z >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-z[pos]))
    ez = np.exp(z[~pos])
    out[~pos] = ez / (1.0 + ez)
    return out


def _forward_batch(model: ProbeModel, X: np.ndarray):
    """Probabilities and the activations needed for backprop."""
    A1 = np.tanh(X @ model.W1.T + model.b1)
    z2 = A1 @ model.W2.T.ravel() + model.b2
    p = np.clip(_sigmoid(z2), EPS, 1.0 - EPS)
    return p, A1


def forward(model: ProbeModel, x: Sequence[float]) -> float:
    """p = sigmoid(W2 tanh(W1 x + b1) + b2), clamped inside (0, 1)."""
    x = np.asarray(x, dtype=float)
    if x.shape != (model.input_dim,):
        raise ValueError(
            f"input has shape {x.shape}, model expects ({model.input_dim},)"
        )
    p, _ = _forward_batch(model, x[None, :])
    return float(p[0])


def bce_loss(p: float, y: float) -> float:
    """Binary cross-entropy for one prediction; p must be clamped already."""
    return float(-(y * np.log(p) + (1.0 - y) * np.log(1.0 - p)))


@dataclass
class Gradients:
    dW1: np.ndarray
    db1: np.ndarray
    dW2: np.ndarray
    db2: float


def gradients(model: ProbeModel, X: np.ndarray, y: np.ndarray) -> Gradients:
    """Exact analytic gradient of the mean batch BCE w.r.t. every parameter."""
    if len(X) == 0:
        raise ValueError("gradient of an empty batch is undefined")
    A1 = np.tanh(X @ model.W1.T + model.b1)
    z2 = A1 @ model.W2.T.ravel() + model.b2
    p = _sigmoid(z2)
    dz2 = (p - y) / len(X)                    # (n,)
    dW2 = (dz2 @ A1)[None, :]                 # (1, hidden)
    db2 = float(dz2.sum())
    dA1 = dz2[:, None] * model.W2             # (n, hidden)
    dZ1 = dA1 * (1.0 - A1 * A1)
    dW1 = dZ1.T @ X                           # (hidden, input)
    db1 = dZ1.sum(axis=0)
    return Gradients(dW1, db1, dW2, db2)


def _as_arrays(dataset: Sequence, input_dim: int | None = None):
    X = np.asarray([np.asarray(v, dtype=float) for v, _ in dataset])
    y = np.asarray([float(label) for _, label in dataset])
    if X.ndim != 2:
        raise ValueError("dataset vectors must all share one length")
    if input_dim is not None and X.shape[1] != input_dim:
        raise ValueError(
            f"dataset vectors have length {X.shape[1]}, expected {input_dim}"
        )
    if not np.all(np.isfinite(X)):
        raise ValueError("dataset contains non-finite vector components")
    return X, y


def init_model(config: ProbeConfig, base_rate: float | None = None) -> ProbeModel:
    """Hidden weights uniform +-sqrt(6/(fan_in+fan_out)), output layer zeroed,
    output bias at the logit of the training base rate, seed-pinned.

    With a zero output layer the untrained probe is exactly the base-rate
    predictor: its accuracy is the majority-class share on any data, and
    training can only improve on that floor. The output weights unfreeze
    after the first update.
    """
    rng = np.random.default_rng(config.seed)
    limit1 = np.sqrt(6.0 / (config.input_dim + config.hidden_dim))
    W1 = rng.uniform(-limit1, limit1, size=(config.hidden_dim, config.input_dim))
    b2 = 0.0
    if base_rate is not None:
        clamped = min(max(base_rate, EPS), 1.0 - EPS)
        b2 = float(np.log(clamped / (1.0 - clamped)))
    return ProbeModel(W1, np.zeros(config.hidden_dim),
                      np.zeros((1, config.hidden_dim)), b2)


def _mean_loss(model: ProbeModel, X: np.ndarray, y: np.ndarray) -> float:
    p, _ = _forward_batch(model, X)
    return float(-np.mean(y * np.log(p) + (1.0 - y) * np.log(1.0 - p)))


def train(dataset: Sequence, config: ProbeConfig) -> tuple[ProbeModel, TrainHistory]:
    """Minibatch Adam with early stopping on a carved-out validation split.

    Stops when validation loss has not improved for `patience` epochs or at
    `max_epochs`; the returned model carries the best-epoch parameters.
    """
    X, y = _as_arrays(dataset, config.input_dim)
    if len(np.unique(y)) < 2:
        raise TrainingError("training set contains a single class; probe is meaningless")

    rng = np.random.default_rng(config.seed)

    perm = rng.permutation(len(X))
    n_val = max(1, int(config.validation_fraction * len(X) + 0.5))
    if n_val >= len(X):
        raise TrainingError("dataset too small to carve a validation split")
    val_idx, train_idx = perm[:n_val], perm[n_val:]
    X_train, y_train = X[train_idx], y[train_idx]
    X_val, y_val = X[val_idx], y[val_idx]

    model = init_model(config, base_rate=float(y_train.mean()))

    adam_m = [np.zeros_like(model.W1), np.zeros_like(model.b1),
              np.zeros_like(model.W2), 0.0]
    adam_v = [np.zeros_like(model.W1), np.zeros_like(model.b1),
              np.zeros_like(model.W2), 0.0]
    step = 0

    history = TrainHistory()
    # the untrained base-rate predictor competes as epoch -1: a model only
    # replaces it by actually beating its validation loss
    best_val = _mean_loss(model, X_val, y_val)
    best_model = model.copy()
    since_improved = 0

    for epoch in range(config.max_epochs):
        order = rng.permutation(len(X_train))
        for start in range(0, len(order), config.batch_size):
            batch = order[start:start + config.batch_size]
            grads = gradients(model, X_train[batch], y_train[batch])
            step += 1
            params = [model.W1, model.b1, model.W2, model.b2]
            updates = []
            for k, (param, grad) in enumerate(
                zip(params, [grads.dW1, grads.db1, grads.dW2, grads.db2])
            ):
                adam_m[k] = ADAM_BETA1 * adam_m[k] + (1 - ADAM_BETA1) * grad
                adam_v[k] = ADAM_BETA2 * adam_v[k] + (1 - ADAM_BETA2) * np.square(grad)
                m_hat = adam_m[k] / (1 - ADAM_BETA1 ** step)
                v_hat = adam_v[k] / (1 - ADAM_BETA2 ** step)
                updates.append(
                    param - config.learning_rate * m_hat / (np.sqrt(v_hat) + ADAM_EPS)
                )
            model.W1, model.b1, model.W2 = updates[0], updates[1], updates[2]
            model.b2 = float(updates[3])

        train_loss = _mean_loss(model, X_train, y_train)
        val_loss = _mean_loss(model, X_val, y_val)
        val_acc, _ = evaluate(model, list(zip(X_val, y_val)))
        if not (np.isfinite(train_loss) and np.isfinite(val_loss)):
            raise TrainingDiverged(
                f"non-finite loss (train={train_loss}, val={val_loss})", epoch
            )
        for param in (model.W1, model.b1, model.W2):
            if not np.all(np.isfinite(param)):
                raise TrainingDiverged("non-finite parameters", epoch)
        history.epochs.append(EpochRecord(train_loss, val_loss, val_acc))

        if val_loss < best_val:
            best_val = val_loss
            best_model = model.copy()
            history.best_epoch = epoch
            since_improved = 0
        else:
            since_improved += 1
            if since_improved >= config.patience:
                history.stop_reason = "patience"
                break
    else:
        history.stop_reason = "max_epochs"

    return best_model, history


def evaluate(model: ProbeModel, test_set: Sequence) -> tuple[float, float]:
    """(accuracy, mean BCE); prediction is p >= 0.5 -> class coded 1 (uter)."""
    if len(test_set) == 0:
        raise ValueError("cannot evaluate on an empty test set")
    X, y = _as_arrays(test_set, model.input_dim)
    p, _ = _forward_batch(model, X)
    predictions = (p >= 0.5).astype(float)
    accuracy = float(np.mean(predictions == y))
    loss = float(-np.mean(y * np.log(p) + (1.0 - y) * np.log(1.0 - p)))
    return accuracy, loss


MODEL_MAGIC = "#gpmodel v1"


def save_model(model: ProbeModel, stream: TextIO) -> None:
    """Versioned text checkpoint; parameters round-trip bit-exactly."""
    stream.write(f"{MODEL_MAGIC} in={model.input_dim} hidden={model.hidden_dim}\n")

    def write_row(values):
        stream.write(",".join(fmt_float_exact(v) for v in values) + "\n")

    for row in model.W1:
        write_row(row)
    write_row(model.b1)
    write_row(model.W2.ravel())
    write_row([model.b2])


def load_model(stream: TextIO) -> ProbeModel:
    """Read a checkpoint; forward outputs of the loaded model are exact."""
    header = stream.readline().rstrip("\n")
    parts = header.split()
    if len(parts) != 4 or " ".join(parts[:2]) != MODEL_MAGIC:
        raise ValueError(f"not a probe checkpoint: bad header {header!r}")
    try:
        input_dim = int(parts[2].removeprefix("in="))
        hidden_dim = int(parts[3].removeprefix("hidden="))
    except ValueError as exc:
        raise ValueError(f"bad checkpoint header {header!r}") from exc

    rows = [np.array([float(v) for v in line.strip().split(",")])
            for line in stream if line.strip()]
    expected = hidden_dim + 3
    if len(rows) != expected:
        raise ValueError(f"checkpoint has {len(rows)} parameter rows, expected {expected}")
    W1 = np.vstack(rows[:hidden_dim])
    b1, w2, b2 = rows[hidden_dim], rows[hidden_dim + 1], rows[hidden_dim + 2]
    if W1.shape != (hidden_dim, input_dim) or b1.shape != (hidden_dim,) \
            or w2.shape != (hidden_dim,) or b2.shape != (1,):
        raise ValueError("checkpoint parameter shapes do not match the header")
    return ProbeModel(W1, b1, w2[None, :], float(b2[0]))
