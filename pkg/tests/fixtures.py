"""Hand-crafted PDF fixtures with byte-exact, deterministic content.

Expected feature values for these files are frozen in the tests and were
derived at authoring time by independent byte inspection (regex / find over
the raw bytes), not by the parser under test.
"""

from __future__ import annotations

import re
import zlib

from pdffeatures.corpus import PdfBuilder


def minimal_benign() -> bytes:
    """One page, one uncompressed content stream showing 'hello'."""
    b = PdfBuilder(version="1.4")
    content = b.add_stream("", b"BT /F1 12 Tf 72 720 Td (hello) Tj ET")
    page = b.add("<< /Type /Page /Parent 3 0 R /MediaBox [0 0 612 792] /Contents 1 0 R >>")
    pages = b.add(f"<< /Type /Pages /Kids [{page} 0 R] /Count 1 >>")
    catalog = b.add(f"<< /Type /Catalog /Pages {pages} 0 R >>")
    return b.build(root=catalog)


def js_openaction() -> bytes:
    """Catalog carries /OpenAction with a /JavaScript action."""
    b = PdfBuilder()
    page = b.add("<< /Type /Page /Parent 2 0 R /MediaBox [0 0 612 792] >>")
    pages = b.add(f"<< /Type /Pages /Kids [{page} 0 R] /Count 1 >>")
    action = b.add("<< /S /JavaScript /JS (app.alert\\(1\\);) >>")
    catalog = b.add(f"<< /Type /Catalog /Pages {pages} 0 R /OpenAction {action} 0 R >>")
    return b.build(root=catalog)


def corrupted_xref_twin() -> tuple[bytes, bytes]:
    """(valid, corrupted) pair: same bytes except garbled xref offsets."""
    valid = minimal_benign()
    xref_at = valid.rindex(b"\nxref\n") + 1
    head, tail = valid[:xref_at], valid[xref_at:]
    # Push every in-use offset far out of range, preserving entry width.
    corrupted = head + re.sub(rb"\d{10} 00000 n", b"0009999999 00000 n", tail)
    assert len(corrupted) == len(valid)
    return valid, corrupted


def objstm_hidden_js() -> bytes:
    """PDF 1.5 file: xref stream + /JavaScript action hidden in an ObjStm.

    The action dictionary exists only inside the FlateDecode-compressed
    object stream, so a raw byte scan cannot see its names.
    """
    header = b"%PDF-1.5\n%\xe2\xe3\xcf\xd3\n"
    out = bytearray(header)
    offsets: dict[int, int] = {}

    def emit(num: int, body: bytes) -> None:
        offsets[num] = len(out)
        out.extend(f"{num} 0 obj\n".encode("ascii"))
        out.extend(body)
        out.extend(b"\nendobj\n")

    emit(1, b"<< /Type /Catalog /Pages 2 0 R /OpenAction 5 0 R >>")
    emit(2, b"<< /Type /Pages /Kids [3 0 R] /Count 1 >>")
    emit(3, b"<< /Type /Page /Parent 2 0 R /MediaBox [0 0 612 792] >>")

    inner = b"<< /S /JavaScript /JS (app.alert\\(2\\);) >>"
    objstm_payload = b"5 0\n" + inner
    first = len(b"5 0\n")
    compressed = zlib.compress(objstm_payload, 9)
    assert b"/JavaScript" not in compressed
    emit(
        4,
        b"<< /Type /ObjStm /N 1 /First %d /Length %d /Filter /FlateDecode >>\nstream\n" % (first, len(compressed))
        + compressed
        + b"\nendstream",
    )

    xref_offset = len(out)
    entries = [
        (0, 0, 65535),       # free head
        (1, offsets[1], 0),
        (1, offsets[2], 0),
        (1, offsets[3], 0),
        (1, offsets[4], 0),
        (2, 4, 0),           # object 5 lives in object stream 4, index 0
        (1, xref_offset, 0),
    ]
    data = b"".join(
        t.to_bytes(1, "big") + f2.to_bytes(2, "big") + f3.to_bytes(2, "big") for t, f2, f3 in entries
    )
    xdata = zlib.compress(data, 9)
    out.extend(b"6 0 obj\n")
    out.extend(
        b"<< /Type /XRef /Size 7 /W [1 2 2] /Index [0 7] /Root 1 0 R /Length %d /Filter /FlateDecode >>\nstream\n"
        % len(xdata)
    )
    out.extend(xdata)
    out.extend(b"\nendstream\nendobj\n")
    out.extend(b"startxref\n%d\n%%%%EOF\n" % xref_offset)
    return bytes(out)


def utf16_metadata() -> bytes:
    """Info /Title stored as BOM-prefixed UTF-16BE hex string."""
    title = "Résumé Café"
    payload = b"\xfe\xff" + title.encode("utf-16-be")
    b = PdfBuilder()
    page = b.add("<< /Type /Page /Parent 2 0 R /MediaBox [0 0 612 792] >>")
    pages = b.add(f"<< /Type /Pages /Kids [{page} 0 R] /Count 1 >>")
    catalog = b.add(f"<< /Type /Catalog /Pages {pages} 0 R >>")
    info = b.add(f"<< /Title <{payload.hex().upper()}> /Author (Plain Bob) >>")
    return b.build(root=catalog, info=info)


def dated(creation: str = "D:20240101120000Z", mod: str = "D:20240101120100Z") -> bytes:
    b = PdfBuilder()
    page = b.add("<< /Type /Page /Parent 2 0 R /MediaBox [0 0 612 792] >>")
    pages = b.add(f"<< /Type /Pages /Kids [{page} 0 R] /Count 1 >>")
    catalog = b.add(f"<< /Type /Catalog /Pages {pages} 0 R >>")
    info = b.add(f"<< /CreationDate ({creation}) /ModDate ({mod}) >>")
    return b.build(root=catalog, info=info)


def undated() -> bytes:
    b = PdfBuilder()
    page = b.add("<< /Type /Page /Parent 2 0 R /MediaBox [0 0 612 792] >>")
    pages = b.add(f"<< /Type /Pages /Kids [{page} 0 R] /Count 1 >>")
    catalog = b.add(f"<< /Type /Catalog /Pages {pages} 0 R >>")
    info = b.add("<< /Author (Nobody) >>")
    return b.build(root=catalog, info=info)


def _image_stream(builder: PdfBuilder, width: int, height: int, fill: int) -> int:
    data = bytes([fill]) * 32
    return builder.add_stream(
        f"/Type /XObject /Subtype /Image /Width {width} /Height {height} "
        "/ColorSpace /DeviceGray /BitsPerComponent 8",
        data,
    )


def no_images() -> bytes:
    return minimal_benign()


def one_image() -> bytes:
    """A single 10x10 image (area 100: xsmall bucket), referenced by the page."""
    b = PdfBuilder()
    image = _image_stream(b, 10, 10, 0x41)
    content = b.add_stream("", b"q 10 0 0 10 0 0 cm /Im1 Do Q")
    page = b.add(
        f"<< /Type /Page /Parent 4 0 R /MediaBox [0 0 612 792] "
        f"/Resources << /XObject << /Im1 {image} 0 R >> >> /Contents {content} 0 R >>"
    )
    pages = b.add(f"<< /Type /Pages /Kids [{page} 0 R] /Count 1 >>")
    catalog = b.add(f"<< /Type /Catalog /Pages {pages} 0 R >>")
    return b.build(root=catalog)


def two_images_one_orphan() -> bytes:
    """100x100 (small bucket) referenced + 600x600 (large bucket) orphan."""
    b = PdfBuilder()
    referenced = _image_stream(b, 100, 100, 0x42)
    orphan = _image_stream(b, 600, 600, 0x43)
    content = b.add_stream("", b"q 100 0 0 100 0 0 cm /Im1 Do Q")
    page = b.add(
        f"<< /Type /Page /Parent 5 0 R /MediaBox [0 0 612 792] "
        f"/Resources << /XObject << /Im1 {referenced} 0 R >> >> /Contents {content} 0 R >>"
    )
    pages = b.add(f"<< /Type /Pages /Kids [{page} 0 R] /Count 1 >>")
    catalog = b.add(f"<< /Type /Catalog /Pages {pages} 0 R >>")
    assert orphan == 2
    return b.build(root=catalog)


def zero_byte() -> bytes:
    return b""


def encrypted_marker() -> bytes:
    """Structurally plain file whose trailer declares /Encrypt."""
    b = PdfBuilder()
    page = b.add("<< /Type /Page /Parent 2 0 R /MediaBox [0 0 612 792] >>")
    pages = b.add(f"<< /Type /Pages /Kids [{page} 0 R] /Count 1 >>")
    catalog = b.add(f"<< /Type /Catalog /Pages {pages} 0 R >>")
    enc = b.add("<< /Filter /Standard /V 1 /R 2 /O (0000000000000000) /U (0000000000000000) /P -44 >>")
    return b.build(root=catalog, trailer_extra=f"/Encrypt {enc} 0 R")


def flate_text(message: bytes = b"BT (hi) Tj ET") -> bytes:
    """Content stream FlateDecode-compressed; decoding must restore it."""
    b = PdfBuilder()
    content = b.add_stream("", message, compress=True)
    page = b.add(f"<< /Type /Page /Parent 3 0 R /MediaBox [0 0 612 792] /Contents {content} 0 R >>")
    pages = b.add(f"<< /Type /Pages /Kids [{page} 0 R] /Count 1 >>")
    catalog = b.add(f"<< /Type /Catalog /Pages {pages} 0 R >>")
    return b.build(root=catalog)


def multiline_text() -> bytes:
    """Two text lines via Td; exercises line segmentation and tokenizing."""
    b = PdfBuilder()
    content = b.add_stream("", b"BT /F1 12 Tf 72 720 Td (Cat and dog) Tj 0 -14 Td (dog runs!) Tj ET")
    page = b.add(f"<< /Type /Page /Parent 3 0 R /MediaBox [0 0 612 792] /Contents {content} 0 R >>")
    pages = b.add(f"<< /Type /Pages /Kids [{page} 0 R] /Count 1 >>")
    catalog = b.add(f"<< /Type /Catalog /Pages {pages} 0 R >>")
    return b.build(root=catalog)


ALL_NAMED = {
    "minimal_benign": minimal_benign,
    "js_openaction": js_openaction,
    "objstm_hidden_js": objstm_hidden_js,
    "utf16_metadata": utf16_metadata,
    "dated": dated,
    "undated": undated,
    "no_images": no_images,
    "one_image": one_image,
    "two_images_one_orphan": two_images_one_orphan,
    "encrypted_marker": encrypted_marker,
    "flate_text": flate_text,
    "multiline_text": multiline_text,
}
