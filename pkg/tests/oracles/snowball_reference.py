"""Reference Swedish Snowball stemmer used as the test oracle.

Transcribed from the NLTK port of the published algorithm (string-slicing
formulation, structurally different from the package's index-based
implementation). Kept test-only so the equivalence check stays dual-route.
"""

_VOWELS = "aeiouy\xe4\xe5\xf6"
_S_ENDING = "bcdfghjklmnoprtvy"
_STEP1 = (
    "heterna", "hetens", "heter", "heten", "anden", "arnas", "ernas", "ornas",
    "andes", "andet", "arens", "arna", "erna", "orna", "ande", "arne", "aste",
    "aren", "ades", "erns", "ade", "are", "ern", "ens", "het", "ast", "ad",
    "en", "ar", "er", "or", "as", "es", "at", "a", "e", "s",
)
_STEP2 = ("dd", "gd", "nn", "dt", "gt", "kt", "tt")
_STEP3 = ("fullt", "l\xf6st", "els", "lig", "ig")


def _r1_scandinavian(word):
    r1 = ""
    for i in range(1, len(word)):
        if word[i] not in _VOWELS and word[i - 1] in _VOWELS:
            if 3 > len(word[: i + 1]) > 0:
                r1 = word[3:]
            elif len(word[: i + 1]) >= 3:
                r1 = word[i + 1:]
            else:
                return word
            break
    return r1


def reference_stem(word):
    word = word.lower()
    r1 = _r1_scandinavian(word)

    for suffix in _STEP1:
        if r1.endswith(suffix):
            if suffix == "s":
                if word[-2] in _S_ENDING:
                    word = word[:-1]
                    r1 = r1[:-1]
            else:
                word = word[: -len(suffix)]
                r1 = r1[: -len(suffix)]
            break

    for suffix in _STEP2:
        if r1.endswith(suffix):
            word = word[:-1]
            r1 = r1[:-1]
            break

    for suffix in _STEP3:
        if r1.endswith(suffix):
            if suffix in ("els", "lig", "ig"):
                word = word[: -len(suffix)]
            elif suffix in ("fullt", "l\xf6st"):
                word = word[:-1]
            break

    return word
