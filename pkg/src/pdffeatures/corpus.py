"""Synthetic PDF corpus generation for tests and desk-scale experiments.

Files are built object-by-object with correct xref offsets, so they parse in
any reader; generation is fully seeded and byte-reproducible.
"""

from __future__ import annotations

import random
import zlib
from pathlib import Path

_HEADER = b"%PDF-1.4\n%\xe2\xe3\xcf\xd3\n"

_LOREM = (
    "lorem ipsum dolor sit amet consectetur adipiscing elit sed do eiusmod "
    "tempor incididunt ut labore et dolore magna aliqua enim ad minim veniam "
    "quis nostrud exercitation ullamco laboris nisi aliquip ex ea commodo "
    "consequat duis aute irure in reprehenderit voluptate velit esse cillum "
    "fugiat nulla pariatur excepteur sint occaecat cupidatat non proident"
).split()

_AUTHORS = ("Alice Carter", "Bob Muller", "Carol Jensen", "David Okafor", "Eve Lindqvist", "Frank Moreau")
_CREATORS = ("Writer", "TextMaker 3.1", "DocStudio", "OfficeSuite 7")
_PRODUCERS = ("LibrePress 6.4", "PrintServer 2.0", "pdfkit 1.8", "DocStudio Export")


def escape_pdf_string(text: str) -> str:
    return text.replace("\\", r"\\").replace("(", r"\(").replace(")", r"\)")


class PdfBuilder:
    """Assemble a classic-xref PDF from numbered objects."""

    def __init__(self, version: str = "1.4"):
        self.version = version
        self._bodies: list[bytes] = []

    def add(self, body: str | bytes) -> int:
        """Add an object body; returns its object number (1-based)."""
        if isinstance(body, str):
            body = body.encode("latin-1")
        self._bodies.append(body)
        return len(self._bodies)

    def add_stream(self, dict_entries: str, data: bytes, compress: bool = False) -> int:
        if compress:
            data = zlib.compress(data, 9)
            filter_entry = " /Filter /FlateDecode"
        else:
            filter_entry = ""
        head = f"<< {dict_entries} /Length {len(data)}{filter_entry} >>".encode("latin-1")
        return self.add(head + b"\nstream\n" + data + b"\nendstream")

    def build(self, root: int, info: int | None = None, trailer_extra: str = "") -> bytes:
        header = f"%PDF-{self.version}\n".encode("ascii") + _HEADER[len(b"%PDF-1.4\n") :]
        out = bytearray(header)
        offsets = []
        for num, body in enumerate(self._bodies, start=1):
            offsets.append(len(out))
            out += f"{num} 0 obj\n".encode("ascii")
            out += body
            out += b"\nendobj\n"
        xref_pos = len(out)
        count = len(self._bodies) + 1
        out += f"xref\n0 {count}\n".encode("ascii")
        out += b"0000000000 65535 f \n"
        for off in offsets:
            out += f"{off:010d} 00000 n \n".encode("ascii")
        trailer = f"trailer\n<< /Size {count} /Root {root} 0 R"
        if info is not None:
            trailer += f" /Info {info} 0 R"
        if trailer_extra:
            trailer += " " + trailer_extra
        trailer += f" >>\nstartxref\n{xref_pos}\n%%EOF\n"
        out += trailer.encode("ascii")
        return bytes(out)


def _text_content(lines: list[str]) -> bytes:
    ops = ["BT", "/F1 11 Tf", "72 720 Td"]
    for i, line in enumerate(lines):
        if i:
            ops.append("0 -14 Td")
        ops.append(f"({escape_pdf_string(line)}) Tj")
    ops.append("ET")
    return "\n".join(ops).encode("latin-1")


def _pdf_date(rng: random.Random, zulu: bool, base_year: int = 2019) -> str:
    year = base_year + rng.randrange(6)
    month = 1 + rng.randrange(12)
    day = 1 + rng.randrange(28)
    hour, minute, second = rng.randrange(24), rng.randrange(60), rng.randrange(60)
    stamp = f"D:{year:04d}{month:02d}{day:02d}{hour:02d}{minute:02d}{second:02d}"
    if zulu:
        return stamp + "Z"
    sign = rng.choice("+-")
    return f"{stamp}{sign}{rng.randrange(12):02d}'{rng.choice((0, 30)):02d}'"


def _random_noise(rng: random.Random, low: int, high: int) -> str:
    alphabet = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789!#$%&*+-=?@^_~."
    return "".join(rng.choice(alphabet) for _ in range(rng.randrange(low, high)))


def _build_benign(rng: random.Random) -> bytes:
    builder = PdfBuilder()
    page_count = 1 + rng.randrange(3)
    with_image = rng.random() < 0.4

    font = builder.add("<< /Type /Font /Subtype /Type1 /BaseFont /Helvetica >>")
    image = None
    if with_image:
        side = rng.choice((8, 16, 40, 150))
        payload = bytes(rng.randrange(256) for _ in range(64))
        image = builder.add_stream(
            f"/Type /XObject /Subtype /Image /Width {side} /Height {side} "
            "/ColorSpace /DeviceGray /BitsPerComponent 8",
            payload,
        )

    content_ids = []
    for _ in range(page_count):
        words = rng.randrange(30, 80)
        lines, line = [], []
        for _ in range(words):
            line.append(rng.choice(_LOREM))
            if len(line) >= rng.randrange(5, 10):
                lines.append(" ".join(line))
                line = []
        if line:
            lines.append(" ".join(line))
        body = _text_content(lines)
        if image is not None:
            body += b"\nq 100 0 0 100 300 300 cm /Im1 Do Q"
        content_ids.append(builder.add_stream("", body, compress=rng.random() < 0.5))

    resources = f"/Font << /F1 {font} 0 R >>"
    if image is not None:
        resources += f" /XObject << /Im1 {image} 0 R >>"

    page_ids = []
    pages_id = len(builder._bodies) + 1 + page_count  # pages node after page leaves
    for content in content_ids:
        page_ids.append(
            builder.add(
                f"<< /Type /Page /Parent {pages_id} 0 R /MediaBox [0 0 612 792] "
                f"/Resources << {resources} >> /Contents {content} 0 R >>"
            )
        )
    kids = " ".join(f"{p} 0 R" for p in page_ids)
    pages = builder.add(f"<< /Type /Pages /Kids [{kids}] /Count {len(page_ids)} >>")
    catalog = builder.add(f"<< /Type /Catalog /Pages {pages} 0 R >>")

    creation = _pdf_date(rng, zulu=rng.random() < 0.8)
    minutes = rng.randrange(0, 4000)
    mod = _shift_date(creation, minutes)
    title = " ".join(w.capitalize() for w in rng.sample(_LOREM, rng.randrange(2, 5)))
    info = builder.add(
        "<< /Author ({a}) /Title ({t}) /Creator ({c}) /Producer ({p}) "
        "/CreationDate ({cd}) /ModDate ({md}) >>".format(
            a=escape_pdf_string(rng.choice(_AUTHORS)),
            t=escape_pdf_string(title),
            c=escape_pdf_string(rng.choice(_CREATORS)),
            p=escape_pdf_string(rng.choice(_PRODUCERS)),
            cd=creation,
            md=mod,
        )
    )
    return builder.build(root=catalog, info=info)


def _shift_date(stamp: str, minutes: int) -> str:
    """Push a D:YYYYMMDDHHmmSS... stamp forward, minute arithmetic only."""
    core = stamp[2:16]
    suffix = stamp[16:]
    year, month, day = int(core[0:4]), int(core[4:6]), int(core[6:8])
    hour, minute, second = int(core[8:10]), int(core[10:12]), int(core[12:14])
    minute += minutes
    hour += minute // 60
    minute %= 60
    day += hour // 24
    hour %= 24
    while day > 28:  # keep within every month's valid range
        day -= 28
        month += 1
    while month > 12:
        month -= 12
        year += 1
    return f"D:{year:04d}{month:02d}{day:02d}{hour:02d}{minute:02d}{second:02d}{suffix}"


def _build_malicious_like(rng: random.Random) -> bytes:
    builder = PdfBuilder()
    payload = "var _0x{}=unescape('{}');eval(_0x{});".format(
        _random_noise(rng, 4, 8),
        "".join(f"%u{rng.randrange(0x10000):04x}" for _ in range(rng.randrange(40, 90))),
        _random_noise(rng, 4, 8),
    )
    js_action = builder.add(f"<< /S /JavaScript /JS ({escape_pdf_string(payload)}) >>")

    empty_content = rng.random() < 0.5
    if not empty_content:
        content = builder.add_stream("", b"", compress=False)
    pages_num = len(builder._bodies) + 2  # page leaf next, pages node after
    page_body = f"<< /Type /Page /Parent {pages_num} 0 R /MediaBox [0 0 612 792]"
    if not empty_content:
        page_body += f" /Contents {content} 0 R"
    if rng.random() < 0.5:
        page_body += f" /AA << /O {js_action} 0 R >>"
    page_body += " >>"
    page = builder.add(page_body)
    pages = builder.add(f"<< /Type /Pages /Kids [{page} 0 R] /Count 1 >>")
    catalog = builder.add(
        f"<< /Type /Catalog /Pages {pages} 0 R /OpenAction {js_action} 0 R "
        f"/Names << /JavaScript << /Names [(init) {js_action} 0 R] >> >> >>"
    )

    # Backdated or wildly separated timestamps, frequently offset-less.
    creation = _pdf_date(rng, zulu=rng.random() < 0.3, base_year=2022)
    mod = _pdf_date(rng, zulu=rng.random() < 0.3, base_year=2003)
    entries = [
        f"/Author ({escape_pdf_string(_random_noise(rng, 12, 40))})",
        f"/Title ({escape_pdf_string(_random_noise(rng, 16, 60))})",
        f"/Producer ({escape_pdf_string(_random_noise(rng, 12, 40))})",
        f"/CreationDate ({creation})",
    ]
    if rng.random() < 0.7:
        entries.append(f"/ModDate ({mod})")
    info = builder.add("<< " + " ".join(entries) + " >>")
    return builder.build(root=catalog, info=info)


def generate_corpus(kind: str, count: int, seed: int, destination: str | Path) -> list[Path]:
    """Write *count* seeded PDFs of *kind* into *destination*.

    The same (kind, count, seed) always produces byte-identical files.
    """
    if kind not in ("benign", "malicious-like"):
        raise ValueError(f"unknown corpus kind: {kind}")
    if count < 1:
        raise ValueError("count must be >= 1")
    dest = Path(destination)
    dest.mkdir(parents=True, exist_ok=True)
    slug = kind.replace("-", "_")
    paths = []
    for i in range(count):
        rng = random.Random(f"{kind}:{seed}:{i}")
        data = _build_benign(rng) if kind == "benign" else _build_malicious_like(rng)
        path = dest / f"{slug}_{i:04d}.pdf"
        path.write_bytes(data)
        paths.append(path)
    return paths
