"""Content-stream text extraction and tokenizer tests."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import fixtures
from pdffeatures import extract_page_text, parse_document, tokenize
from pdffeatures.content import extract_text_lines, iter_content_operators


class TestTokenize:
    def test_hello_world(self):
        assert tokenize("Hello, World!") == ["hello", "world"]

    def test_empty(self):
        assert tokenize("") == []

    def test_digits_and_duplicates_kept(self):
        assert tokenize("A1-B2 A1") == ["a1", "b2", "a1"]

    def test_underscore_splits(self):
        assert tokenize("snake_case") == ["snake", "case"]

    @given(st.text(max_size=200))
    @settings(max_examples=200)
    def test_idempotent_on_joined_output(self, text):
        tokens = tokenize(text)
        assert tokenize(" ".join(tokens)) == tokens

    @given(st.text(max_size=200))
    @settings(max_examples=200)
    def test_tokens_lowercase_alphanumeric(self, text):
        for token in tokenize(text):
            assert token
            assert token == token.lower()
            assert all(c.isalnum() for c in token)


class TestExtractTextLines:
    def test_single_show(self):
        assert extract_text_lines(b"BT (hello) Tj ET") == ["hello"]

    def test_no_bt_et(self):
        assert extract_text_lines(b"(ignored) Tj 1 0 0 1 0 0 cm") == []

    def test_td_starts_new_line(self):
        assert extract_text_lines(b"BT (Cat) Tj 0 -12 Td (dog!) Tj ET") == ["Cat", "dog!"]

    def test_tj_array_concatenates(self):
        assert extract_text_lines(b"BT [(He) -200 (llo)] TJ ET") == ["Hello"]

    def test_quote_operators_advance_line(self):
        assert extract_text_lines(b"BT (one) Tj (two) ' ET") == ["one", "two"]

    def test_adjacent_shows_same_line(self):
        assert extract_text_lines(b"BT (ab) Tj (cd) Tj ET") == ["abcd"]

    def test_multiple_bt_blocks(self):
        assert extract_text_lines(b"BT (a) Tj ET BT (b) Tj ET") == ["a", "b"]

    def test_inline_image_skipped(self):
        content = b"BT (x) Tj ET BI /W 2 /H 2 /BPC 8 /CS /G ID \x00\x01\x02\x03 EI BT (y) Tj ET"
        assert extract_text_lines(content) == ["x", "y"]


class TestIterContentOperators:
    def test_operand_grouping(self):
        ops = list(iter_content_operators(b"1 0 0 1 72 720 cm /F1 12 Tf"))
        assert ops[0][1] == b"cm" and ops[0][0] == [1, 0, 0, 1, 72, 720]
        assert ops[1][1] == b"Tf"

    def test_inline_image_dict(self):
        ops = list(iter_content_operators(b"BI /W 10 /H 5 ID \xff\xfe\xfd EI"))
        assert len(ops) == 1
        params = ops[0][0][0]
        assert params["W"] == 10 and params["H"] == 5


class TestExtractPageText:
    def test_minimal_fixture(self):
        doc = parse_document(fixtures.minimal_benign())
        page = extract_page_text(doc, 0)
        assert page.lines == ["hello"]
        assert page.tokens == ["hello"]

    def test_flate_fixture(self):
        doc = parse_document(fixtures.flate_text())
        page = extract_page_text(doc, 0)
        assert page.lines == ["hi"]

    def test_multiline_fixture(self):
        doc = parse_document(fixtures.multiline_text())
        page = extract_page_text(doc, 0)
        assert page.lines == ["Cat and dog", "dog runs!"]
        assert page.tokens == ["cat", "and", "dog", "dog", "runs"]

    def test_page_without_content(self):
        doc = parse_document(fixtures.js_openaction())
        page = extract_page_text(doc, 0)
        assert page.lines == [] and page.tokens == []

    def test_out_of_range_page(self):
        doc = parse_document(fixtures.minimal_benign())
        with pytest.raises(IndexError):
            extract_page_text(doc, 5)

    def test_undecodable_content_yields_empty_with_warning(self):
        b = fixtures.PdfBuilder()
        content = b.add(b"<< /Length 5 /Filter /FlateDecode >>\nstream\n\x00\x01\x02\x03\x04\nendstream")
        page = b.add(f"<< /Type /Page /Parent 3 0 R /Contents {content} 0 R >>")
        pages = b.add(f"<< /Type /Pages /Kids [{page} 0 R] /Count 1 >>")
        catalog = b.add(f"<< /Type /Catalog /Pages {pages} 0 R >>")
        doc = parse_document(b.build(root=catalog))
        warnings: list[str] = []
        page_text = extract_page_text(doc, 0, warnings)
        assert page_text.lines == [] and page_text.tokens == []
        assert warnings and "undecodable" in warnings[0]

    def test_deterministic(self):
        data = fixtures.multiline_text()
        a = extract_page_text(parse_document(data), 0)
        b = extract_page_text(parse_document(data), 0)
        assert a == b
