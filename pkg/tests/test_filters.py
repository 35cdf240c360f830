"""Stream filter decoding tests."""

import base64
import zlib

from pdffeatures.filters import (
    ascii85_decode,
    asciihex_decode,
    decode_stream,
    flate_decode,
)
from pdffeatures.objects import PdfName, PdfStream


def make_stream(entries: dict, raw: bytes) -> PdfStream:
    return PdfStream(entries, raw, offset=0)


class TestFlate:
    def test_round_trip(self):
        message = b"BT (hi) Tj ET"
        assert flate_decode(zlib.compress(message)) == message

    def test_raw_deflate_accepted(self):
        compressor = zlib.compressobj(9, zlib.DEFLATED, -15)
        raw = compressor.compress(b"payload") + compressor.flush()
        assert flate_decode(raw) == b"payload"

    def test_png_up_predictor(self):
        # Two 4-byte rows (predictor 12 = PNG Up): row2 stores deltas.
        row1 = bytes([10, 20, 30, 40])
        row2 = bytes([1, 1, 1, 1])
        encoded = b"\x02" + row1 + b"\x02" + row2
        compressed = zlib.compress(encoded)
        parms = {"Predictor": 12, "Columns": 4}
        decoded = flate_decode(compressed, parms)
        assert decoded == bytes([10, 20, 30, 40, 11, 21, 31, 41])


class TestAsciiFilters:
    def test_hex_decode(self):
        assert asciihex_decode(b"48656C6C6F>") == b"Hello"

    def test_hex_whitespace_and_odd(self):
        assert asciihex_decode(b"4 86\n56C6C6F7>") == b"Hellop"

    def test_a85_round_trip(self):
        message = b"Man is distinguished, not only by his reason"
        encoded = base64.a85encode(message) + b"~>"
        assert ascii85_decode(encoded) == message


class TestDecodeStream:
    def test_no_filter_identity(self):
        stream = make_stream({}, b"raw bytes")
        result = decode_stream(stream)
        assert result.decoded and result.data == b"raw bytes"

    def test_flate_stream(self):
        message = b"BT (hi) Tj ET"
        stream = make_stream({"Filter": PdfName("FlateDecode")}, zlib.compress(message))
        result = decode_stream(stream)
        assert result.decoded and result.data == message

    def test_filter_chain(self):
        message = b"chained"
        encoded = zlib.compress(message).hex().encode("ascii") + b">"
        stream = make_stream(
            {"Filter": [PdfName("ASCIIHexDecode"), PdfName("FlateDecode")]}, encoded
        )
        result = decode_stream(stream)
        assert result.decoded and result.data == message

    def test_unsupported_filter_passthrough(self):
        stream = make_stream({"Filter": PdfName("DCTDecode")}, b"\xff\xd8jpegdata")
        result = decode_stream(stream)
        assert not result.decoded
        assert result.data == b"\xff\xd8jpegdata"
        assert "DCTDecode" in result.error

    def test_corrupt_flate_empty_with_error(self):
        stream = make_stream({"Filter": PdfName("FlateDecode")}, b"\x00not zlib at all")
        result = decode_stream(stream)
        assert not result.decoded
        assert result.data == b""
        assert result.error
