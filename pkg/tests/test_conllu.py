"""CoNLL-U parsing and lexicon extraction contracts."""

import io

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from genderprobe.conllu import (
    ConlluError,
    ExtractionError,
    Gender,
    GenderLexicon,
    extract_nouns,
    parse_conllu,
    parse_feats,
    read_lexicon,
    split_dataset,
    write_lexicon,
)
from genderprobe.synthetic import DEFAULT_GENDER_MAP, make_treebank

HUND_ROW = "3\thunden\thund\tNOUN\t_\tDefinite=Def|Gender=Com|Number=Sing\t0\troot\t_\t_"

SV_SAMPLE = """# sent_id = 1
# text = En hund ses
1\tEn\ten\tDET\t_\tDefinite=Ind|Gender=Com\t2\tdet\t_\t_
2\thund\thund\tNOUN\t_\tGender=Com|Number=Sing\t3\tnsubj\t_\t_
3\tses\tse\tVERB\t_\t_\t0\troot\t_\t_

# sent_id = 2
# text = Ett hus med hunden
1\tEtt\tett\tDET\t_\tDefinite=Ind|Gender=Neut\t2\tdet\t_\t_
2\thus\thus\tNOUN\t_\tGender=Neut|Number=Sing\t0\troot\t_\t_
3-4\tmedhunden\t_\t_\t_\t_\t_\t_\t_\t_
3\tmed\tmed\tADP\t_\t_\t4\tcase\t_\t_
4\thunden\thund\tNOUN\t_\tGender=Com|Number=Sing\t2\tnmod\t_\t_
4.1\tE\te\tVERB\t_\t_\t_\t_\t_\t_
"""

GENDER_MAP = {"Com": Gender.UTER, "Neut": Gender.NEUTER}


class TestParse:
    def test_hund_row(self):
        sentences, skipped = parse_conllu(HUND_ROW + "\n")
        assert skipped == 0
        token = sentences[0][0]
        assert token.lemma == "hund"
        assert token.upos == "NOUN"
        assert token.feats == {"Definite": "Def", "Gender": "Com", "Number": "Sing"}

    def test_empty_feats_column(self):
        assert parse_feats("_") == {}

    def test_nine_columns_strict_raises_with_line(self):
        bad = "1\ta\ta\tNOUN\t_\tGender=Com\t0\troot\t_\n"
        with pytest.raises(ConlluError, match="line 1"):
            parse_conllu(bad, strict=True)

    def test_nine_columns_lenient_skips_and_counts(self):
        bad = SV_SAMPLE + "\n1\ta\ta\tNOUN\t_\tGender=Com\t0\troot\t_\n"
        sentences, skipped = parse_conllu(bad)
        assert skipped == 1
        assert len(sentences) == 2

    def test_comments_blank_lines_and_sentence_split(self):
        sentences, _ = parse_conllu(SV_SAMPLE)
        assert len(sentences) == 2
        assert [t.id for t in sentences[0]] == [1, 2, 3]

    def test_ranges_and_empty_nodes_excluded(self):
        sentences, _ = parse_conllu(SV_SAMPLE)
        ids = [t.id for t in sentences[1]]
        assert ids == [1, 2, 3, 4]  # no 3-4 range, no 4.1 empty node

    def test_bytes_input(self):
        sentences, _ = parse_conllu(SV_SAMPLE.encode("utf-8"))
        assert len(sentences) == 2

    def test_word_ids_consecutive_from_one(self):
        text = make_treebank("sv", 50, seed=3)
        sentences, skipped = parse_conllu(text, strict=True)
        assert skipped == 0
        for sentence in sentences:
            assert [t.id for t in sentence] == list(range(1, len(sentence) + 1))


class TestExtract:
    def test_basic_extraction(self):
        sentences, _ = parse_conllu(SV_SAMPLE)
        lexicon = extract_nouns(sentences, GENDER_MAP, "sv")
        assert lexicon.entries == {"hund": Gender.UTER, "hus": Gender.NEUTER}
        assert lexicon.counts == {"hund": 2, "hus": 1}
        assert lexicon.conflicts_dropped == 0

    def test_majority_two_to_one(self):
        rows = "\n".join(
            f"1\tx\tkatt\tNOUN\t_\tGender={g}\t0\troot\t_\t_\n"
            for g in ["Com", "Com", "Neut"]
        )
        sentences, _ = parse_conllu(rows)
        lexicon = extract_nouns(sentences, GENDER_MAP, "sv")
        assert lexicon.entries["katt"] is Gender.UTER
        assert lexicon.counts["katt"] == 3

    def test_exact_tie_dropped_and_counted(self):
        rows = (
            "1\tx\tkatt\tNOUN\t_\tGender=Com\t0\troot\t_\t_\n\n"
            "1\tx\tkatt\tNOUN\t_\tGender=Neut\t0\troot\t_\t_\n\n"
            "1\ty\thus\tNOUN\t_\tGender=Neut\t0\troot\t_\t_\n"
        )
        sentences, _ = parse_conllu(rows)
        lexicon = extract_nouns(sentences, GENDER_MAP, "sv")
        assert "katt" not in lexicon.entries
        assert lexicon.conflicts_dropped == 1
        assert lexicon.entries == {"hus": Gender.NEUTER}

    def test_unmapped_gender_values_skipped(self):
        rows = "1\tx\tkat\tNOUN\t_\tGender=Weird\t0\troot\t_\t_\n"
        sentences, _ = parse_conllu(rows)
        with pytest.raises(ExtractionError):
            extract_nouns(sentences, GENDER_MAP, "sv")

    def test_non_nouns_ignored_even_with_gender(self):
        rows = (
            "1\tEn\ten\tDET\t_\tGender=Com\t2\tdet\t_\t_\n"
            "2\thus\thus\tNOUN\t_\tGender=Neut\t0\troot\t_\t_\n"
        )
        sentences, _ = parse_conllu(rows)
        lexicon = extract_nouns(sentences, GENDER_MAP, "sv")
        assert set(lexicon.entries) == {"hus"}

    def test_lemmas_lowercased_and_nfc(self):
        # a composed and a decomposed "å" must collapse to one lemma
        rows = (
            "1\tx\tBlå\tNOUN\t_\tGender=Com\t0\troot\t_\t_\n\n"
            "1\tx\tblå\tNOUN\t_\tGender=Com\t0\troot\t_\t_\n"
        )
        sentences, _ = parse_conllu(rows)
        lexicon = extract_nouns(sentences, GENDER_MAP, "sv")
        assert list(lexicon.entries) == ["blå"]
        assert lexicon.counts["blå"] == 2

    def test_empty_result_is_an_error(self):
        sentences, _ = parse_conllu("1\tses\tse\tVERB\t_\t_\t0\troot\t_\t_\n")
        with pytest.raises(ExtractionError, match="feature map"):
            extract_nouns(sentences, GENDER_MAP, "sv")

    def test_idempotent_on_doubled_treebank(self):
        text = make_treebank("sv", 60, seed=5)
        once, _ = parse_conllu(text)
        twice, _ = parse_conllu(text + "\n" + text)
        lex_once = extract_nouns(once, DEFAULT_GENDER_MAP, "sv")
        lex_twice = extract_nouns(twice, DEFAULT_GENDER_MAP, "sv")
        assert lex_once.entries == lex_twice.entries
        assert all(
            lex_twice.counts[lemma] == 2 * lex_once.counts[lemma]
            for lemma in lex_once.counts
        )

    def test_distribution_is_exact_type_share(self):
        text = make_treebank("sv", 80, seed=7)
        sentences, _ = parse_conllu(text)
        lexicon = extract_nouns(sentences, DEFAULT_GENDER_MAP, "sv")
        n_uter = sum(1 for g in lexicon.entries.values() if g is Gender.UTER)
        assert lexicon.distribution.p_uter == n_uter / len(lexicon)
        total = lexicon.distribution.p_uter + lexicon.distribution.p_neuter
        assert abs(total - 1.0) <= 1e-12


class TestSplit:
    def lexicon(self, n=100):
        entries = {f"lemma{i:03d}": Gender.UTER if i % 3 else Gender.NEUTER
                   for i in range(n)}
        counts = {k: 1 for k in entries}
        return GenderLexicon("sv", entries, counts)

    def test_sizes_disjoint_exhaustive(self):
        train, test = split_dataset(self.lexicon(100), 0.1, seed=0)
        assert len(test) == 10 and len(train) == 90
        assert not {r.lemma for r in train} & {r.lemma for r in test}
        assert {r.lemma for r in train} | {r.lemma for r in test} == set(
            self.lexicon(100).entries
        )

    def test_same_seed_identical(self):
        first = split_dataset(self.lexicon(), 0.1, seed=42)
        second = split_dataset(self.lexicon(), 0.1, seed=42)
        assert [r.lemma for r in first[0]] == [r.lemma for r in second[0]]
        assert [r.lemma for r in first[1]] == [r.lemma for r in second[1]]

    def test_different_seed_differs(self):
        first = split_dataset(self.lexicon(), 0.1, seed=1)
        second = split_dataset(self.lexicon(), 0.1, seed=2)
        assert [r.lemma for r in first[1]] != [r.lemma for r in second[1]]

    def test_7200_gives_720(self):
        train, test = split_dataset(self.lexicon(7200), 0.1, seed=0)
        assert len(test) == 720 and len(train) == 6480

    def test_bad_fraction_raises(self):
        for fraction in (0.0, 1.0, -0.1, 1.5):
            with pytest.raises(ValueError, match="test_fraction"):
                split_dataset(self.lexicon(10), fraction, seed=0)


class TestLexiconFile:
    def test_round_trip(self):
        text = make_treebank("sv", 40, seed=11)
        sentences, _ = parse_conllu(text)
        lexicon = extract_nouns(sentences, DEFAULT_GENDER_MAP, "sv")
        out = io.StringIO()
        write_lexicon(lexicon, out)
        out.seek(0)
        again = read_lexicon(out, "sv")
        assert again == lexicon  # conflicts_dropped excluded from equality

    def test_format_is_sorted_with_header(self):
        lexicon = GenderLexicon(
            "sv",
            {"b": Gender.NEUTER, "a": Gender.UTER},
            {"b": 2, "a": 5},
        )
        out = io.StringIO()
        write_lexicon(lexicon, out)
        assert out.getvalue() == "lemma\tgender\tcount\na\tuter\t5\nb\tneuter\t2\n"

    def test_bad_header_rejected(self):
        with pytest.raises(ValueError, match="header"):
            read_lexicon(io.StringIO("nope\n"), "sv")

    @settings(max_examples=40, deadline=None)
    @given(
        st.dictionaries(
            st.text(
                alphabet=st.characters(whitelist_categories=("Ll",),
                                       whitelist_characters="åäö"),
                min_size=1, max_size=10,
            ),
            st.tuples(st.sampled_from(list(Gender)), st.integers(1, 999)),
            min_size=1, max_size=20,
        )
    )
    def test_round_trip_property(self, mapping):
        lexicon = GenderLexicon(
            "xx",
            {k: v[0] for k, v in mapping.items()},
            {k: v[1] for k, v in mapping.items()},
        )
        out = io.StringIO()
        write_lexicon(lexicon, out)
        out.seek(0)
        assert read_lexicon(out, "xx") == lexicon
