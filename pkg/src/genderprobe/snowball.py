"""Swedish Snowball stemmer.

Suffix stripping destroys the definite/plural endings that carry gender
agreement, which is what the stripped-corpus ablation needs. The single-pass
algorithm is implemented in ``stem_swedish_once``; ``stem_swedish`` iterates
it to a fixed point so that stemmed corpora contain only stems the stemmer
maps to themselves (the single pass is not idempotent: it can strip an
inflection and expose another removable suffix, e.g. advokaten -> advokat
-> advok).
"""

from __future__ import annotations

VOWELS = frozenset("aeiouyåäö")

# Letters that may precede a removable final "s" (the valid s-endings).
S_ENDINGS = frozenset("bcdfghjklmnoprtvy")

# Step-1 suffixes, longest first so the first match is the longest match.
STEP1_SUFFIXES = (
    "heterna",
    "hetens",
    "anden", "andes", "andet", "arens", "arnas", "ernas",
    "heten", "heter", "ornas",
    "ades", "ande", "aren", "arna", "arne", "aste", "erna", "erns", "orna",
    "ade", "are", "ast", "ens", "ern", "het",
    "ad", "ar", "as", "at", "en", "er", "es", "or",
    "a", "e",
)

# Consonant pairs shortened by one letter in step 2.
STEP2_PAIRS = ("dd", "gd", "nn", "dt", "gt", "kt", "tt")

# Step-3 residual suffixes: delete, or rewrite for the -t adverbial forms.
STEP3_DELETE = ("els", "lig", "ig")
STEP3_SHORTEN = ("fullt", "löst")


def _r1_start(word: str) -> int:
    """Start index of R1: after the first non-vowel that follows a vowel,
    but never before index 3 (the minimum-stem adjustment)."""
    for i in range(1, len(word)):
        if word[i] not in VOWELS and word[i - 1] in VOWELS:
            return max(i + 1, 3)
    return len(word)


def stem_swedish_once(word: str) -> str:
    """One pass of the published Snowball Swedish algorithm.

    Expects a lowercase token; tokens whose R1 is empty (shorter than the
    minimum-stem rule allows) pass through unchanged.
    """
    r1 = _r1_start(word)

    # Step 1: longest matching suffix lying entirely within R1.
    for suffix in STEP1_SUFFIXES:
        if word.endswith(suffix) and len(word) - len(suffix) >= r1:
            word = word[: -len(suffix)]
            break
    else:
        if word.endswith("s") and len(word) - 1 >= r1:
            if len(word) >= 2 and word[-2] in S_ENDINGS:
                word = word[:-1]

    # Step 2: shorten a double/stop consonant pair found within R1.
    for pair in STEP2_PAIRS:
        if word.endswith(pair) and len(word) - len(pair) >= r1:
            word = word[:-1]
            break

    # Step 3: residual derivational suffixes within R1.
    for suffix in STEP3_DELETE:
        if word.endswith(suffix) and len(word) - len(suffix) >= r1:
            return word[: -len(suffix)]
    for suffix in STEP3_SHORTEN:
        if word.endswith(suffix) and len(word) - len(suffix) >= r1:
            return word[:-1]
    return word


def stem_swedish(word: str) -> str:
    """Stem to a fixed point: reapply the single pass until the token is stable.

    Guarantees stem_swedish(stem_swedish(w)) == stem_swedish(w), which the
    stemmed corpus variant relies on. Non-Swedish letters pass through
    untouched (they are simply never vowels or matched suffix letters).
    """
    while True:
        shorter = stem_swedish_once(word)
        if shorter == word:
            return word
        word = shorter
