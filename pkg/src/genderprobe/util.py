"""Shared plumbing: token normalization, seeded streams, float text formats."""

from __future__ import annotations

import hashlib
import unicodedata

MASK64 = (1 << 64) - 1


def normalize_token(token: str) -> str:
    """Lowercase + Unicode NFC, the single normalization used across the toolkit."""
    return unicodedata.normalize("NFC", token.lower())


def expand_seed(root_seed: int, label: str) -> int:
    """Derive a stage seed from a root seed and a fixed stage label.

    Stable across runs and platforms, so any stage can be re-run in isolation.
    """
    digest = hashlib.blake2b(
        f"{root_seed}:{label}".encode("utf-8"), digest_size=8
    ).digest()
    return int.from_bytes(digest, "big")


def splitmix64(state: int) -> int:
    """One step of the splitmix64 mixer (public-domain constants)."""
    state = (state + 0x9E3779B97F4A7C15) & MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class CounterRng:
    """Counter-based random stream: draw i is a pure function of (base, i).

    Used where reproducibility must not depend on how work is partitioned
    (per-position subsampling, window radii, negative draws).
    """

    def __init__(self, root_seed: int, label: str):
        self.base = expand_seed(root_seed, label)

    def uint64(self, counter: int) -> int:
        return splitmix64((self.base + counter) & MASK64)

    def uniform(self, counter: int) -> float:
        """Uniform in [0, 1) with 53 random bits."""
        return (self.uint64(counter) >> 11) / float(1 << 53)


def fmt_float9(x: float) -> str:
    """9-significant-digit text float: round-trips 32-bit values exactly."""
    return f"{x:.9g}"


def fmt_float_exact(x: float) -> str:
    """Shortest decimal that round-trips the exact float64 value."""
    return repr(float(x))


def render_aligned_table(headers: list[str], rows: list[list[str]]) -> str:
    """Plain-text table with columns padded to the widest cell."""
    cols = [headers] + rows
    widths = [max(len(row[i]) for row in cols) for i in range(len(headers))]
    lines = []
    for row in cols:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"
