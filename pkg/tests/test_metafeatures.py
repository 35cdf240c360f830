"""Character composition, entropy, date parsing and text-summary tests."""

import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import fixtures
from pdffeatures import extract_metadata, parse_document
from pdffeatures.content import PageText
from pdffeatures.metafeatures import (
    FieldComposition,
    MetadataFields,
    char_composition,
    metadata_block,
    parse_pdf_date,
    shannon_entropy,
    temporal_block,
    text_summary,
)

# Independently derived epochs: 2024-01-01 is day 19723 since 1970-01-01,
# so midnight UTC is 19723 * 86400 = 1704067200.
EPOCH_2024_01_01_12Z = 1704067200 + 12 * 3600
EPOCH_2024_01_01_0630Z = 1704067200 + 6 * 3600 + 30 * 60


def entropy_oracle(data):
    """Frequency-count oracle, independent of the Counter-based path."""
    if not data:
        return 0.0
    symbols = set(data)
    total = len(data)
    result = 0.0
    for sym in symbols:
        if isinstance(data, bytes):
            p = data.count(bytes([sym])) / total
        else:
            p = data.count(sym) / total
        result -= p * math.log(p, 2)
    return result


class TestCharComposition:
    def test_empty(self):
        assert char_composition("") == FieldComposition(0, 0, 0, 0, 0)

    def test_john_doe(self):
        assert char_composition("John.Doe2") == FieldComposition(1, 9, 1, 1, 2)

    def test_dots_double_counted_as_other(self):
        assert char_composition("...") == FieldComposition(3, 3, 0, 3, 0)

    @given(st.text(max_size=200))
    @settings(max_examples=200)
    def test_against_per_character_oracle(self, text):
        got = char_composition(text)
        dots = sum(1 for c in text if c == ".")
        digits = sum(1 for c in text if c in "0123456789")
        upper = sum(1 for c in text if "A" <= c <= "Z")
        other = sum(1 for c in text if not (c.isascii() and c.isalnum()))
        assert got.dot_count == dots
        assert got.length == len(text)
        assert got.digit_count == digits
        assert got.uppercase_count == upper
        assert got.other_count == other
        assert got.digit_count + got.other_count + got.uppercase_count <= got.length


class TestMetadataBlock:
    def test_all_absent_is_30_zeros(self):
        block = metadata_block(MetadataFields())
        values = [v for comp in block for v in comp.values()]
        assert values == [0] * 30

    def test_author_only(self):
        block = metadata_block(MetadataFields(author="Bob"))
        assert block[0] == FieldComposition(0, 3, 0, 0, 1)
        assert all(comp == FieldComposition(0, 0, 0, 0, 0) for comp in block[1:])

    def test_deterministic(self):
        fields = MetadataFields(author="A.1", title="t", keywords="k w")
        assert metadata_block(fields) == metadata_block(fields)

    @given(st.text(max_size=30), st.text(max_size=30))
    @settings(max_examples=50)
    def test_length_always_30(self, a, t):
        block = metadata_block(MetadataFields(author=a, title=t))
        assert sum(len(comp.values()) for comp in block) == 30


class TestShannonEntropy:
    def test_single_symbol(self):
        assert shannon_entropy("aaaa") == 0.0

    def test_two_equiprobable(self):
        assert shannon_entropy("ab") == 1.0

    def test_four_equiprobable(self):
        assert shannon_entropy("abcdabcd") == 2.0

    def test_empty(self):
        assert shannon_entropy("") == 0.0
        assert shannon_entropy(b"") == 0.0

    def test_random_bytes_against_oracle(self):
        rng = random.Random(99)
        data = bytes(rng.randrange(256) for _ in range(1024))
        assert shannon_entropy(data) == pytest.approx(entropy_oracle(data), abs=1e-9)

    @given(st.binary(max_size=512))
    @settings(max_examples=100)
    def test_bytes_bounded(self, data):
        h = shannon_entropy(data)
        assert 0.0 <= h <= 8.0
        if data:
            assert h <= math.log2(len(set(data))) + 1e-12

    @given(st.text(min_size=1, max_size=200), st.randoms())
    @settings(max_examples=100)
    def test_permutation_invariant(self, text, rnd):
        shuffled = list(text)
        rnd.shuffle(shuffled)
        assert shannon_entropy("".join(shuffled)) == pytest.approx(shannon_entropy(text), abs=1e-12)


class TestParsePdfDate:
    def test_zulu(self):
        assert parse_pdf_date("D:20240101120000Z") == (EPOCH_2024_01_01_12Z, 1)

    def test_positive_offset(self):
        parsed = parse_pdf_date("D:20240101120000+05'30'")
        assert parsed == (EPOCH_2024_01_01_0630Z, 0)

    def test_garbage(self):
        assert parse_pdf_date("garbage") is None

    def test_date_only_defaults(self):
        parsed = parse_pdf_date("D:2024")
        assert parsed is not None
        assert parsed[0] == 1704067200  # 2024-01-01T00:00:00Z

    def test_no_prefix_accepted(self):
        assert parse_pdf_date("20240101120000Z") == (EPOCH_2024_01_01_12Z, 1)

    def test_invalid_month(self):
        assert parse_pdf_date("D:20241301120000Z") is None


class TestTemporalBlock:
    def test_identical_timestamps(self):
        block = temporal_block("D:20240101120000Z", "D:20240101120000Z")
        assert block.delta_seconds == 0.0
        assert (block.creation_has_z, block.mod_has_z) == (1, 1)

    def test_sixty_second_delta(self):
        block = temporal_block("D:20240101120000Z", "D:20240101120100Z")
        assert block.delta_seconds == 60.0
        assert (block.creation_has_z, block.mod_has_z) == (1, 1)

    def test_only_creation_present(self):
        block = temporal_block("D:20240101120000Z", None)
        assert block.delta_seconds == 0.0
        assert (block.creation_has_z, block.mod_has_z) == (1, 0)

    def test_symmetry(self):
        a, b = "D:20240101120000Z", "D:20240301> oddly not"  # second unparseable
        assert temporal_block(a, b).delta_seconds == 0.0
        c, d = "D:20240101120000Z", "D:20240102120000Z"
        assert temporal_block(c, d).delta_seconds == temporal_block(d, c).delta_seconds == 86400.0

    def test_z_flag_is_string_level_even_when_unparseable(self):
        block = temporal_block("ZZZ not a date", None)
        assert block.creation_has_z == 1
        assert block.delta_seconds == 0.0

    @given(st.text(max_size=30), st.text(max_size=30))
    @settings(max_examples=50)
    def test_delta_always_nonnegative(self, a, b):
        assert temporal_block(a, b).delta_seconds >= 0.0


def _page(tokens, lines=None):
    return PageText(0, lines if lines is not None else [" ".join(tokens)], tokens)


class TestTextSummary:
    def test_no_text_all_zero(self):
        summary = text_summary([], "")
        assert all(v == 0 for v in summary.values())

    def test_avg_and_max(self):
        summary = text_summary([_page(["aa", "bbbb"])], "aa bbbb")
        assert summary.avg_word_length == pytest.approx(3.0)
        assert summary.max_token_length == 4
        assert summary.token_diversity == 1.0

    def test_diversity_two_thirds(self):
        summary = text_summary([_page(["x", "x", "y"])], "x x y")
        assert summary.token_diversity == pytest.approx(2 / 3)

    def test_character_classes(self):
        summary = text_summary([], "Ab1 .é\t")
        assert summary.uppercase_count == 1
        assert summary.lowercase_count == 1
        assert summary.digit_count == 1
        assert summary.whitespace_count == 2
        assert summary.special_count == 1
        assert summary.non_ascii_count == 1

    def test_body_entropy_matches_entropy(self):
        text = "mississippi river"
        summary = text_summary([], text)
        assert summary.body_entropy == pytest.approx(shannon_entropy(text))


class TestExtractMetadata:
    def test_minimal_fixture_has_no_info(self):
        doc = parse_document(fixtures.minimal_benign())
        assert extract_metadata(doc) == MetadataFields()

    def test_utf16_title_decoded(self):
        doc = parse_document(fixtures.utf16_metadata())
        fields = extract_metadata(doc)
        assert fields.title == "Résumé Café"
        assert fields.author == "Plain Bob"
        assert fields.subject is None

    def test_dated_fixture_raw_strings(self):
        doc = parse_document(fixtures.dated())
        fields = extract_metadata(doc)
        assert fields.creation_date_raw == "D:20240101120000Z"
        assert fields.mod_date_raw == "D:20240101120100Z"

    def test_absent_vs_empty_distinguishable(self):
        assert MetadataFields(author="").author == ""
        assert MetadataFields().author is None
