"""Swedish Snowball stemmer vs the transcribed reference implementation."""

import pytest

from genderprobe.snowball import stem_swedish, stem_swedish_once

from oracles.snowball_reference import reference_stem
from oracles.swedish_sample import build_sample


@pytest.fixture(scope="module")
def sample():
    words = build_sample()
    assert len(words) >= 10_000
    return words


# Frozen from running the reference implementation (tests/oracles) on these
# tokens. The spec sheet printed "klokt -> klok", but the published algorithm
# leaves it unchanged: R1("klokt") = "t" and step 2 requires the whole pair
# inside R1. See the decisions ledger.
REFERENCE_CASES = {
    "jaktkarlarne": "jaktkarl",
    "jaktkarlens": "jaktkarl",
    "klokt": "klokt",
    "friskt": "frisk",
    "fräckt": "fräck",
    "byggde": "bygg",
    "hunden": "hund",
    "flickorna": "flick",
    "klokheterna": "klok",
    "möjligheter": "möj",  # step 1 strips "heter", step 3 strips "lig" in the same pass
    "stolt": "stolt",
    "fullt": "fullt",  # bare word: R1 is "lt", too short for the step-3 suffix
    "löst": "löst",
    "vänlig": "vän",
}


def test_frozen_reference_cases():
    for word, expected in REFERENCE_CASES.items():
        assert reference_stem(word) == expected, word
        assert stem_swedish_once(word) == expected, word


def test_short_tokens_unchanged():
    # R1 is empty when the word is too short for the minimum-stem rule.
    for word in ["yx", "en", "å", "bo", "tre", ""]:
        assert stem_swedish_once(word) == word
        assert stem_swedish(word) == word


def test_non_swedish_letters_pass_through():
    assert stem_swedish("xyz123") == "xyz123"
    assert stem_swedish("щщщ") == "щщщ"


def test_s_suffix_needs_valid_s_ending():
    # d is a valid s-ending, a is not
    assert stem_swedish_once("hunds") == "hund"
    assert stem_swedish_once("atas") == "atas"


def test_step1_is_longest_match():
    # "heterna" must win over "erna"/"a" on the same word
    assert stem_swedish_once("svagheterna") == "svag"


def test_step2_consonant_pair_inside_r1():
    assert stem_swedish_once("friskt") == "frisk"  # "kt" within R1
    assert stem_swedish_once("klokt") == "klokt"   # only "t" within R1


def test_step3_rewrites():
    assert stem_swedish_once("sorglöst") == "sorglös"
    assert stem_swedish_once("hoppfullt") == "hoppfull"
    assert stem_swedish_once("farlig") == "far"


def test_single_pass_matches_reference_everywhere(sample):
    mismatches = [w for w in sample if stem_swedish_once(w) != reference_stem(w)]
    assert mismatches == []


def test_fixpoint_stemmer_is_idempotent(sample):
    bad = [w for w in sample if stem_swedish(stem_swedish(w)) != stem_swedish(w)]
    assert bad == []


def test_single_pass_is_not_idempotent_where_reference_is_not():
    # Known counterexample of the published algorithm; the fixpoint wrapper
    # exists because of words like this.
    assert reference_stem("advokaten") == "advokat"
    assert reference_stem("advokat") == "advok"
    assert stem_swedish("advokaten") == "advok"


def test_fixpoint_divergence_is_exactly_the_non_fixed_points(sample):
    for w in sample:
        once = stem_swedish_once(w)
        fixed = stem_swedish(w)
        if fixed != once:
            assert stem_swedish_once(once) != once
        else:
            assert stem_swedish_once(once) == once
