"""Deterministic synthetic data builders.

Everything the test suite, the demos and the synthetic ablation need at desk
scale: miniature treebanks with gender-annotated nouns, gender-aligned
cross-lingual vector tables, a two-article corpus where the article
deterministically marks the noun class, and per-layer contextual dumps with
a controllable amount of context mixing.
"""

from __future__ import annotations

import hashlib

import numpy as np

from .conllu import DEFAULT_GENDER_MAP, Gender, GenderLexicon  # noqa: F401
from .vectors import ContextualRecord, EmbeddingTable

LANGUAGE_PROFILES = {
    # p_uter mirrors the real type-level class shares of each language
    "sv": {"p_uter": 0.74, "articles": {Gender.UTER: "en", Gender.NEUTER: "ett"}},
    "da": {"p_uter": 0.68, "articles": {Gender.UTER: "en", Gender.NEUTER: "et"}},
    "nl": {"p_uter": 0.75, "articles": {Gender.UTER: "de", Gender.NEUTER: "het"}},
}

_ONSETS = ["h", "st", "gr", "fl", "b", "k", "sk", "v", "m", "tr", "l", "br"]
_NUCLEI = ["a", "e", "i", "o", "u", "å", "ä", "ö"]
_CODAS = ["nd", "t", "s", "rk", "ll", "m", "g", "ng", "st", "n"]


def _pseudo_lemmas(rng: np.random.Generator, count: int) -> list[str]:
    lemmas: list[str] = []
    seen = set()
    while len(lemmas) < count:
        parts = [rng.choice(_ONSETS), rng.choice(_NUCLEI)]
        if rng.random() < 0.6:
            parts += [rng.choice(_ONSETS), rng.choice(_NUCLEI)]
        parts.append(rng.choice(_CODAS))
        lemma = "".join(parts)
        if lemma not in seen:
            seen.add(lemma)
            lemmas.append(lemma)
    return lemmas


def make_noun_inventory(
    language: str, size: int, seed: int
) -> dict[str, Gender]:
    """Pseudo-lemmas with genders drawn at the language's class share."""
    profile = LANGUAGE_PROFILES[language]
    rng = np.random.default_rng(seed)
    lemmas = _pseudo_lemmas(rng, size)
    return {
        lemma: Gender.UTER if rng.random() < profile["p_uter"] else Gender.NEUTER
        for lemma in lemmas
    }


_FILLER_VERBS = ["ser", "tar", "har", "gav", "fann", "bar"]
_FILLER_ADJS = ["stor", "liten", "gammal", "fin", "blå", "grå"]


def make_treebank(
    language: str,
    n_sentences: int,
    seed: int,
    inventory_size: int = 60,
    conflict_lemmas: int = 2,
    tie_lemmas: int = 1,
) -> str:
    """A CoNLL-U document with gender-annotated nouns and assorted noise.

    Includes multiword-token ranges, empty nodes, nouns without a Gender
    feature, determiners carrying Gender (which extraction must ignore),
    plus a few lemmas annotated with both genders: `conflict_lemmas` have a
    2:1 majority, `tie_lemmas` are exact 1:1 ties.
    """
    profile = LANGUAGE_PROFILES[language]
    rng = np.random.default_rng(seed)
    inventory = make_noun_inventory(language, inventory_size, seed + 1)
    lemmas = list(inventory)
    feature_value = {Gender.UTER: "Com", Gender.NEUTER: "Neut"}

    lines: list[str] = []
    sent_no = 0

    def emit_sentence(rows: list[tuple], text: str):
        nonlocal sent_no
        sent_no += 1
        lines.append(f"# sent_id = {language}-{sent_no}")
        lines.append(f"# text = {text}")
        lines.extend("\t".join(str(c) for c in row) for row in rows)
        lines.append("")

    # distribute extra annotations for conflict/tie lemmas across the run
    conflicted = lemmas[:conflict_lemmas]
    tied = lemmas[conflict_lemmas:conflict_lemmas + tie_lemmas]

    for i in range(n_sentences):
        lemma = lemmas[int(rng.integers(len(lemmas)))]
        gender = inventory[lemma]
        article = profile["articles"][gender]
        adj = _FILLER_ADJS[int(rng.integers(len(_FILLER_ADJS)))]
        verb = _FILLER_VERBS[int(rng.integers(len(_FILLER_VERBS)))]
        gender_value = feature_value[gender]

        rows = [
            (1, article.capitalize(), article, "DET",
             "_", f"Definite=Ind|Gender={gender_value}", 3, "det", "_", "_"),
            (2, adj, adj, "ADJ", "_", "Degree=Pos", 3, "amod", "_", "_"),
            (3, lemma, lemma, "NOUN",
             "_", f"Gender={gender_value}|Number=Sing", 4, "nsubj", "_", "_"),
            (4, verb, verb, "VERB", "_", "_", 0, "root", "_", "_"),
        ]
        text = f"{article.capitalize()} {adj} {lemma} {verb}"

        variant = int(rng.integers(6))
        if variant == 0:
            # multiword-token range plus its parts
            rows += [
                ("5-6", "tillexempel", "_", "_", "_", "_", "_", "_", "_", "_"),
                (5, "till", "till", "ADP", "_", "_", 4, "case", "_", "_"),
                (6, "exempel", "exempel", "NOUN", "_", "_", 4, "obl", "_", "_"),
            ]
            text += " tillexempel"
        elif variant == 1:
            # empty node after the last word
            rows += [
                (5, "nu", "nu", "ADV", "_", "_", 4, "advmod", "_", "_"),
                ("5.1", "E", "e", "VERB", "_", "_", "_", "_", "_", "_"),
            ]
            text += " nu"
        elif variant == 2:
            # second noun without any Gender feature
            other = lemmas[int(rng.integers(len(lemmas)))]
            rows.append((5, other, other, "NOUN", "_", "Number=Plur", 4, "obj", "_", "_"))
            text += f" {other}"
        elif variant == 3 and conflicted:
            # conflicting annotation: minority vote 1 of 3 for a conflict lemma
            target = conflicted[i % len(conflicted)]
            opposite = Gender.NEUTER if inventory[target] is Gender.UTER else Gender.UTER
            value = feature_value[inventory[target] if i % 3 else opposite]
            rows.append(
                (5, target, target, "NOUN", "_", f"Gender={value}", 4, "obj", "_", "_")
            )
            text += f" {target}"
        elif variant == 4 and tied:
            # exact tie: alternate genders on every occurrence
            target = tied[i % len(tied)]
            value = feature_value[Gender.UTER if i % 2 == 0 else Gender.NEUTER]
            rows.append(
                (5, target, target, "NOUN", "_", f"Gender={value}", 4, "obj", "_", "_")
            )
            text += f" {target}"
        emit_sentence(rows, text + ".")

    return "\n".join(lines) + "\n"


def _token_rng(token: str, seed: int) -> np.random.Generator:
    digest = hashlib.blake2b(f"{seed}:{token}".encode(), digest_size=8).digest()
    return np.random.default_rng(int.from_bytes(digest, "big"))


def make_aligned_vectors(
    lexicons: dict[str, GenderLexicon],
    dim: int = 24,
    seed: int = 0,
    oov_rate: float = 0.05,
    gender_strength: float = 1.0,
) -> dict[str, EmbeddingTable]:
    """Gender-aligned vector tables sharing one latent gender direction.

    Mimics aligned multilingual embeddings: each language's nouns carry the
    same gender axis plus per-token noise, so probes transfer across tables.
    A slice of each vocabulary is left out to exercise OOV reporting.
    """
    rng = np.random.default_rng(seed)
    gender_axis = rng.normal(size=dim)
    gender_axis /= np.linalg.norm(gender_axis)
    tables = {}
    for language, lexicon in lexicons.items():
        table = EmbeddingTable(dim=dim, source_tag=f"synthetic-aligned-{language}")
        for lemma, gender in lexicon.entries.items():
            if rng.random() < oov_rate:
                continue
            token_rng = _token_rng(f"{language}:{lemma}", seed)
            sign = 1.0 if gender is Gender.UTER else -1.0
            vector = (
                gender_strength * sign * gender_axis
                + token_rng.normal(scale=0.8, size=dim)
            )
            table.vectors[lemma] = vector.astype(np.float32)
        tables[language] = table
    return tables


_CORPUS_FILLERS = [
    "och", "som", "där", "sedan", "ofta", "alltid", "kanske", "annars",
    "under", "över", "utan", "genom", "mellan", "bakom", "framför", "vid",
    "borta", "hemma", "igen", "snart", "länge", "gärna", "aldrig", "ibland",
    "går", "står", "ligger", "kommer", "blir", "finns",
]


def make_two_article_corpus(
    seed: int = 0,
    n_nouns_per_class: int = 120,
    n_sentences: int = 3000,
    noun_length: tuple[int, int] = (5, 9),
    filler_prob: float = 0.5,
) -> tuple[str, dict[str, str]]:
    """Corpus where the article deterministically marks the noun class.

    Class-A nouns are always introduced by "ett", class-B nouns by "en";
    noun strings are random letter sequences so no subword cue correlates
    with the class. Sentences are short and article-noun dominated: at desk
    scale the differential force between the two article directions comes
    from the articles being frequent negative-sample draws, and long filler
    runs would drown it (verified during calibration: with 6-8 fillers per
    sentence the probe stays at chance). Returns (raw text, noun -> "A"/"B").
    """
    rng = np.random.default_rng(seed)
    letters = "bcdfghjklmnpqrstv"
    vowels = "aeiouyåäö"

    def random_noun():
        length = int(rng.integers(noun_length[0], noun_length[1] + 1))
        chars = []
        for position in range(length):
            pool = letters if position % 2 == 0 else vowels
            chars.append(pool[int(rng.integers(len(pool)))])
        return "".join(chars)

    nouns: dict[str, str] = {}
    while len(nouns) < 2 * n_nouns_per_class:
        noun = random_noun()
        if noun in nouns or noun in _CORPUS_FILLERS:
            continue
        nouns[noun] = "A" if len(nouns) < n_nouns_per_class else "B"

    noun_list = list(nouns)
    sentences = []
    for i in range(n_sentences):
        # round-robin guarantees every noun clears the frequency floor
        noun = noun_list[i % len(noun_list)]
        article = "ett" if nouns[noun] == "A" else "en"
        words = []
        if rng.random() < filler_prob:
            words.append(_CORPUS_FILLERS[int(rng.integers(len(_CORPUS_FILLERS)))])
        words += [article, noun]
        if rng.random() < filler_prob:
            words.append(_CORPUS_FILLERS[int(rng.integers(len(_CORPUS_FILLERS)))])
        if i % 7 == 0:
            words[0] = words[0].capitalize()  # tokenizer must lowercase
        if i % 11 == 0:
            words.append("1999")  # digits are separators, never tokens
        sentences.append(" ".join(words) + ".")
    return " ".join(sentences), nouns


def make_contextual_dump(
    n_sentences: int = 120,
    seed: int = 0,
    dim: int = 16,
    layers: tuple[int, ...] = (0, 1, 2),
    context_mix: dict[int, float] | None = None,
    inventory_size: int = 40,
) -> list[ContextualRecord]:
    """Synthetic per-layer records over generated Swedish-like sentences.

    Layer 0 is a pure function of the token string (non-contextual); higher
    layers blend in a context average plus occurrence jitter, scaled by
    `context_mix`, which degrades token-identity information the way added
    context does.
    """
    if context_mix is None:
        context_mix = {0: 0.0, 1: 0.45, 2: 0.75}
    rng = np.random.default_rng(seed)
    inventory = make_noun_inventory("sv", inventory_size, seed + 3)
    lemmas = list(inventory)
    profile = LANGUAGE_PROFILES["sv"]

    records = []
    for sentence_id in range(n_sentences):
        lemma = lemmas[int(rng.integers(len(lemmas)))]
        gender = inventory[lemma]
        words = [
            profile["articles"][gender],
            _FILLER_ADJS[int(rng.integers(len(_FILLER_ADJS)))],
            lemma,
            _FILLER_VERBS[int(rng.integers(len(_FILLER_VERBS)))],
        ]
        token_vecs = [
            _token_rng(w, seed).normal(size=dim).astype(np.float64) for w in words
        ]
        # context average excludes the article: mixing must dilute the
        # token-identity signal, not smuggle the gender cue back in
        context = np.mean([token_vecs[1], token_vecs[3]], axis=0)
        noun_index = 2
        for layer in layers:
            mix = context_mix[layer]
            jitter = rng.normal(scale=0.6 * mix, size=dim) if mix else np.zeros(dim)
            vector = (1.0 - mix) * token_vecs[noun_index] + mix * context + jitter
            records.append(
                ContextualRecord(
                    sentence_id=sentence_id,
                    token_index=noun_index,
                    token=lemma,
                    lemma=lemma,
                    gold_gender=gender.value,
                    layer=layer,
                    vector=vector.astype(np.float32),
                )
            )
        if sentence_id % 9 == 0:
            # an unlabeled occurrence: present in the dump, excluded by probes
            records.append(
                ContextualRecord(
                    sentence_id=sentence_id,
                    token_index=3,
                    token=words[3],
                    lemma=words[3],
                    gold_gender="none",
                    layer=layers[0],
                    vector=token_vecs[3].astype(np.float32),
                )
            )
    return records
