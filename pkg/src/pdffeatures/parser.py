"""Lenient PDF document parser.

Strategy: a linear scan for ``N G obj`` headers builds the object table, then
cross-reference data (classic tables and xref streams, following /Prev and
hybrid /XRefStm links) is overlaid where it points at parseable objects.
Object streams are expanded so their contents join the table. Damage is
recorded as warnings; extraction never aborts on recoverable input.
"""

from __future__ import annotations

import re

from .filters import decode_stream as _decode_filters
from .filters import DecodedStream
from .lexer import (
    ARRAY_CLOSE,
    ARRAY_OPEN,
    DICT_CLOSE,
    DICT_OPEN,
    EOF,
    KEYWORD,
    NAME,
    NUMBER,
    STRING,
    Lexer,
)
from .objects import (
    Document,
    HeaderMissing,
    KeywordHit,
    PdfName,
    PdfNull,
    PdfReference,
    PdfStream,
    Unrecoverable,
)

MAX_PARSE_DEPTH = 100
MAX_REF_HOPS = 32
MAX_PAGE_LEAVES = 100_000
MAX_OBJSTM_OBJECTS = 10_000

_OBJ_HEADER_RE = re.compile(rb"(?<![0-9])(\d{1,10})[\x00\t\n\x0c\r ]+(\d{1,5})[\x00\t\n\x0c\r ]+obj(?![0-9A-Za-z])")
_XREF_ENTRY_RE = re.compile(rb"(\d{10})[\x00\t\n\x0c\r ](\d{5})[\x00\t\n\x0c\r ]([nf])")


class _DepthExceeded(Exception):
    pass


class ObjectParser:
    """Recursive-descent object reader over a :class:`Lexer`."""

    def __init__(self, data: bytes, pos: int = 0):
        self.lexer = Lexer(data, pos)

    @property
    def pos(self) -> int:
        return self.lexer.pos

    def parse_value(self, depth: int = 0):
        tok = self.lexer.next_token()
        return self._value_from(tok, depth)

    def _value_from(self, tok, depth: int):
        if depth > MAX_PARSE_DEPTH:
            raise _DepthExceeded
        kind = tok.kind
        if kind == NUMBER:
            return self._number_or_reference(tok.value)
        if kind in (NAME, STRING):
            return tok.value
        if kind == DICT_OPEN:
            return self._parse_dict(depth + 1)
        if kind == ARRAY_OPEN:
            return self._parse_array(depth + 1)
        if kind == KEYWORD:
            if tok.value == b"true":
                return True
            if tok.value == b"false":
                return False
            return PdfNull  # includes 'null' and any stray keyword
        return PdfNull

    def _number_or_reference(self, first):
        if isinstance(first, int) and first >= 0:
            mark = self.lexer.pos
            t2 = self.lexer.next_token()
            if t2.kind == NUMBER and isinstance(t2.value, int) and t2.value >= 0:
                t3 = self.lexer.next_token()
                if t3.kind == KEYWORD and t3.value == b"R":
                    return PdfReference(first, t2.value)
            self.lexer.pos = mark
        return first

    def _parse_dict(self, depth: int) -> dict:
        out: dict = {}
        while True:
            tok = self.lexer.next_token()
            if tok.kind in (DICT_CLOSE, EOF):
                return out
            if tok.kind != NAME:
                continue  # malformed key; skip leniently
            key = tok.value.value
            vtok = self.lexer.next_token()
            if vtok.kind in (DICT_CLOSE, EOF):
                out[key] = PdfNull
                return out
            out[key] = self._value_from(vtok, depth)

    def _parse_array(self, depth: int) -> list:
        out: list = []
        while True:
            tok = self.lexer.next_token()
            if tok.kind in (ARRAY_CLOSE, EOF):
                return out
            if tok.kind == DICT_CLOSE:
                return out  # broken nesting; close leniently
            if tok.kind == KEYWORD and tok.value not in (b"true", b"false", b"null"):
                continue
            out.append(self._value_from(tok, depth))


def _skip_stream_eol(data: bytes, pos: int) -> int:
    if data.startswith(b"\r\n", pos):
        return pos + 2
    if pos < len(data) and data[pos] in b"\r\n":
        return pos + 1
    return pos


def _parse_indirect_at(data: bytes, offset: int):
    """Parse ``N G obj ... endobj`` at *offset*.

    Returns (obj_num, gen, value, end_pos, warnings) or None when no object
    header is present there.
    """
    warnings: list[str] = []
    parser = ObjectParser(data, offset)
    t1 = parser.lexer.next_token()
    t2 = parser.lexer.next_token()
    t3 = parser.lexer.next_token()
    if not (
        t1.kind == NUMBER
        and isinstance(t1.value, int)
        and t2.kind == NUMBER
        and isinstance(t2.value, int)
        and t3.kind == KEYWORD
        and t3.value == b"obj"
    ):
        return None
    try:
        value = parser.parse_value()
    except _DepthExceeded:
        warnings.append(f"object {t1.value} {t2.value}: nesting too deep, truncated")
        return t1.value, t2.value, PdfNull, parser.pos, warnings

    if isinstance(value, dict):
        mark = parser.lexer.pos
        nxt = parser.lexer.next_token()
        if nxt.kind == KEYWORD and nxt.value == b"stream":
            stream, end, w = _capture_stream(data, parser.lexer.pos, nxt.pos, value, t1.value, t2.value)
            warnings.extend(w)
            return t1.value, t2.value, stream, end, warnings
        parser.lexer.pos = mark
    return t1.value, t2.value, value, parser.pos, warnings


def _capture_stream(data, pos_after_kw, stream_kw_offset, sdict, num, gen):
    warnings: list[str] = []
    start = _skip_stream_eol(data, pos_after_kw)
    length = sdict.get("Length")
    end = -1
    if isinstance(length, int) and length >= 0 and start + length <= len(data):
        candidate = start + length
        probe = candidate
        while probe < len(data) and probe - candidate < 4 and data[probe] in b"\x00\t\n\x0c\r ":
            probe += 1
        if data.startswith(b"endstream", probe):
            end = candidate
    if end == -1:
        found = data.find(b"endstream", start)
        if found == -1:
            end = len(data)
            warnings.append(f"object {num} {gen}: stream without endstream, truncated at EOF")
        else:
            end = found
            raw_end = end
            if data.endswith(b"\r\n", 0, raw_end):
                end = raw_end - 2
            elif raw_end > start and data[raw_end - 1] in b"\r\n":
                end = raw_end - 1
        if isinstance(length, int):
            warnings.append(f"object {num} {gen}: stream length repaired ({length} declared, {end - start} actual)")
        elif not isinstance(length, PdfReference):
            warnings.append(f"object {num} {gen}: stream length missing, repaired to {end - start}")
    raw = data[start:end]
    after = data.find(b"endstream", end)
    end_pos = after + len(b"endstream") if after != -1 else len(data)
    return PdfStream(sdict, raw, offset=stream_kw_offset), end_pos, warnings


def _find_header(data: bytes):
    idx = data.find(b"%PDF-", 0, 1024)
    if idx == -1:
        raise HeaderMissing("no %PDF- marker in first 1024 bytes")
    match = re.match(rb"%PDF-(\d+\.\d+)", data[idx : idx + 16])
    version = match.group(1).decode("ascii") if match else ""
    return idx, version


def _scan_objects(data: bytes):
    table: dict[tuple[int, int], object] = {}
    warnings: list[str] = []
    for match in _OBJ_HEADER_RE.finditer(data):
        parsed = _parse_indirect_at(data, match.start())
        if parsed is None:
            continue
        num, gen, value, _end, w = parsed
        table[(num, gen)] = value
        warnings.extend(w)
    return table, warnings


# -- Cross-reference handling -------------------------------------------------


def _parse_startxref(data: bytes) -> int | None:
    idx = data.rfind(b"startxref")
    if idx == -1:
        return None
    match = re.search(rb"\d{1,10}", data[idx + 9 : idx + 40])
    return int(match.group(0)) if match else None


def _parse_xref_table_at(data: bytes, offset: int):
    """Classic table: returns (offsets, trailer_dict, prev, xrefstm_offset)."""
    lexer = Lexer(data, offset)
    tok = lexer.next_token()
    if tok.kind != KEYWORD or tok.value != b"xref":
        return None
    offsets: dict[tuple[int, int], int] = {}
    pos = lexer.pos
    while True:
        lexer.pos = pos
        t_start = lexer.next_token()
        if t_start.kind == KEYWORD and t_start.value == b"trailer":
            break
        t_count = lexer.next_token()
        if not (
            t_start.kind == NUMBER
            and isinstance(t_start.value, int)
            and t_count.kind == NUMBER
            and isinstance(t_count.value, int)
            and t_count.value >= 0
        ):
            break
        first, count = t_start.value, t_count.value
        lexer.skip_whitespace()
        cursor = lexer.pos
        for i in range(count):
            m = _XREF_ENTRY_RE.match(data, cursor)
            if not m:
                break
            if m.group(3) == b"n":
                offsets[(first + i, int(m.group(2)))] = int(m.group(1))
            cursor = m.end()
            while cursor < len(data) and data[cursor] in b"\x00\t\n\x0c\r ":
                cursor += 1
        pos = cursor
    trailer: dict = {}
    tdict_parser = ObjectParser(data, lexer.pos)
    try:
        value = tdict_parser.parse_value()
    except _DepthExceeded:
        value = None
    if isinstance(value, dict):
        trailer = value
    prev = trailer.get("Prev")
    xrefstm = trailer.get("XRefStm")
    return offsets, trailer, _as_int(prev), _as_int(xrefstm)


def _parse_xref_stream_at(data: bytes, offset: int):
    parsed = _parse_indirect_at(data, offset)
    if parsed is None:
        return None
    _num, _gen, value, _end, _w = parsed
    if not isinstance(value, PdfStream):
        return None
    sdict = value.dictionary
    decoded = _decode_filters(value)
    if not decoded.decoded:
        return None
    widths = sdict.get("W")
    if not (isinstance(widths, list) and len(widths) >= 3 and all(isinstance(w, int) and w >= 0 for w in widths[:3])):
        return None
    w0, w1, w2 = widths[0], widths[1], widths[2]
    entry_len = w0 + w1 + w2
    if entry_len <= 0:
        return None
    size = _as_int(sdict.get("Size")) or 0
    index = sdict.get("Index")
    if isinstance(index, list) and len(index) >= 2 and len(index) % 2 == 0:
        sections = [(_as_int(index[i]) or 0, _as_int(index[i + 1]) or 0) for i in range(0, len(index), 2)]
    else:
        sections = [(0, size)]
    payload = decoded.data
    offsets: dict[tuple[int, int], int] = {}
    cursor = 0
    max_entries = len(payload) // entry_len + 1
    for first, count in sections:
        for i in range(min(max(0, count), max_entries)):
            if cursor + entry_len > len(payload):
                break
            ftype = int.from_bytes(payload[cursor : cursor + w0], "big") if w0 else 1
            f2 = int.from_bytes(payload[cursor + w0 : cursor + w0 + w1], "big")
            f3 = int.from_bytes(payload[cursor + w0 + w1 : cursor + entry_len], "big")
            cursor += entry_len
            if ftype == 1:
                offsets[(first + i, f3)] = f2
            # type 0 (free) and type 2 (in object stream) need no offset:
            # object-stream contents are expanded from the table directly.
    return offsets, dict(sdict), _as_int(sdict.get("Prev"))


def _walk_xref_chain(data: bytes):
    """Follow startxref through /Prev (and hybrid /XRefStm) links.

    Returns (offsets, trailers_newest_first, used_any). Earlier (newer)
    entries win; hybrid files take the xref stream's entries first.
    """
    offsets: dict[tuple[int, int], int] = {}
    trailers: list[dict] = []
    start = _parse_startxref(data)
    if start is None:
        return offsets, trailers, False
    seen: set[int] = set()
    queue: list[int] = [start]
    used = False
    while queue:
        off = queue.pop(0)
        if off in seen or off < 0 or off >= len(data):
            continue
        seen.add(off)
        table = _parse_xref_table_at(data, off)
        if table is not None:
            sec_offsets, trailer, prev, xrefstm = table
            used = True
            if xrefstm is not None:
                stream_part = _parse_xref_stream_at(data, xrefstm)
                if stream_part is not None:
                    s_offsets, s_trailer, s_prev = stream_part
                    for key, value in s_offsets.items():
                        offsets.setdefault(key, value)
                    trailers.append(s_trailer)
                    if s_prev is not None:
                        queue.append(s_prev)
            for key, value in sec_offsets.items():
                offsets.setdefault(key, value)
            trailers.append(trailer)
            if prev is not None:
                queue.append(prev)
            continue
        stream_part = _parse_xref_stream_at(data, off)
        if stream_part is not None:
            s_offsets, s_trailer, s_prev = stream_part
            used = True
            for key, value in s_offsets.items():
                offsets.setdefault(key, value)
            trailers.append(s_trailer)
            if s_prev is not None:
                queue.append(s_prev)
    return offsets, trailers, used


def _as_int(value) -> int | None:
    if isinstance(value, bool):
        return None
    if isinstance(value, int):
        return value
    if isinstance(value, float):
        return int(value)
    return None


# -- Document assembly ---------------------------------------------------------


def parse_document(data: bytes) -> Document:
    """Parse raw bytes into a :class:`Document`, leniently.

    Raises :class:`HeaderMissing` when no %PDF- marker exists in the first
    1024 bytes and :class:`Unrecoverable` when not a single indirect object
    can be found. Every other kind of damage degrades to warnings.
    """
    if not isinstance(data, (bytes, bytearray)):
        raise TypeError("parse_document expects bytes")
    data = bytes(data)
    header_offset, version = _find_header(data)

    table, warnings = _scan_objects(data)

    xref_offsets, xref_trailers, xref_used = _walk_xref_chain(data)
    for (num, gen), off in sorted(xref_offsets.items()):
        for candidate in (off, off + header_offset) if header_offset else (off,):
            if candidate < 0 or candidate >= len(data):
                continue
            parsed = _parse_indirect_at(data, candidate)
            if parsed is not None and parsed[0] == num and parsed[1] == gen:
                table[(num, gen)] = parsed[2]
                break
        else:
            warnings.append(f"xref offset for object {num} {gen} invalid; using linear scan")

    if not xref_used:
        warnings.append("cross-reference data unusable; recovered object table via linear scan")

    if not table:
        raise Unrecoverable("no indirect objects found")

    trailer = _merge_trailers(data, table, xref_trailers, warnings)

    doc = Document(
        objects=table,
        trailer=trailer,
        root={},
        info=None,
        pages=[],
        version=version,
        data=data,
        parse_warnings=warnings,
        encrypted=_has_encrypt(trailer),
    )

    _expand_object_streams(doc)
    doc.root = _locate_root(doc)
    doc.info = _locate_info(doc)
    doc.pages = _collect_pages(doc)
    _check_dangling(doc)
    return doc


def _merge_trailers(data, table, xref_trailers, warnings) -> dict:
    trailer: dict = {}
    for t in xref_trailers:  # newest first; first occurrence of a key wins
        for key, value in t.items():
            trailer.setdefault(key, value)
    if trailer.get("Root") is not None:
        return trailer
    # Reconstruct: parse every `trailer` keyword occurrence (later wins),
    # then fall back to xref-stream dictionaries found in the object table.
    reconstructed: dict = {}
    for hit in scan_bytes(data, b"trailer"):
        parser = ObjectParser(data, hit + len(b"trailer"))
        try:
            value = parser.parse_value()
        except _DepthExceeded:
            continue
        if isinstance(value, dict):
            reconstructed.update(value)
    if reconstructed.get("Root") is None:
        for key in sorted(table):
            value = table[key]
            if isinstance(value, PdfStream):
                t = value.dictionary.get("Type")
                if isinstance(t, PdfName) and t.value == "XRef":
                    reconstructed.update(value.dictionary)
    if reconstructed:
        warnings.append("trailer reconstructed from raw scan")
        for key, value in trailer.items():
            reconstructed.setdefault(key, value)
        return reconstructed
    if trailer:
        return trailer
    warnings.append("no trailer found")
    return {}


def _has_encrypt(trailer: dict) -> bool:
    value = trailer.get("Encrypt")
    return value is not None and value is not PdfNull


def _expand_object_streams(doc: Document) -> None:
    objstm_keys = [
        key
        for key in sorted(doc.objects)
        if isinstance(doc.objects[key], PdfStream)
        and isinstance(doc.objects[key].dictionary.get("Type"), PdfName)
        and doc.objects[key].dictionary.get("Type").value == "ObjStm"
    ]
    for key in objstm_keys:
        stream = doc.objects[key]
        decoded = decode_stream(doc, stream)
        if not decoded.decoded:
            doc.warn(f"object stream {key[0]} {key[1]} undecodable: {decoded.error}")
            continue
        payload = decoded.data
        count = _as_int(resolve(doc, stream.dictionary.get("N"))) or 0
        first = _as_int(resolve(doc, stream.dictionary.get("First"))) or 0
        count = min(count, MAX_OBJSTM_OBJECTS)
        header = ObjectParser(payload, 0)
        pairs: list[tuple[int, int]] = []
        ok = True
        for _ in range(count):
            t_num = header.lexer.next_token()
            t_off = header.lexer.next_token()
            if not (
                t_num.kind == NUMBER
                and isinstance(t_num.value, int)
                and t_off.kind == NUMBER
                and isinstance(t_off.value, int)
            ):
                ok = False
                break
            pairs.append((t_num.value, t_off.value))
        if not ok:
            doc.warn(f"object stream {key[0]} {key[1]}: malformed pair table")
        for num, rel in pairs:
            at = first + rel
            if at < 0 or at >= len(payload):
                doc.warn(f"object stream {key[0]} {key[1]}: offset out of range for object {num}")
                continue
            parser = ObjectParser(payload, at)
            try:
                value = parser.parse_value()
            except _DepthExceeded:
                doc.warn(f"object stream {key[0]} {key[1]}: object {num} nesting too deep")
                continue
            doc.objects.setdefault((num, 0), value)


def _locate_root(doc: Document) -> dict:
    root = resolve(doc, doc.trailer.get("Root"))
    if isinstance(root, dict):
        return root
    for key in sorted(doc.objects):
        value = doc.objects[key]
        if isinstance(value, dict):
            t = value.get("Type")
            if isinstance(t, PdfName) and t.value == "Catalog":
                doc.warn(f"root reconstructed from object {key[0]} {key[1]}")
                return value
    doc.warn("no document catalog found")
    return {}


def _locate_info(doc: Document) -> dict | None:
    info = resolve(doc, doc.trailer.get("Info"))
    if isinstance(info, dict):
        return info
    return None


def _collect_pages(doc: Document) -> list[dict]:
    pages: list[dict] = []
    root_pages = resolve(doc, doc.root.get("Pages")) if doc.root else PdfNull
    if isinstance(root_pages, dict):
        declared = _as_int(resolve(doc, root_pages.get("Count")))
        visited: set[int] = set()
        stack: list[object] = [root_pages]
        while stack and len(pages) < MAX_PAGE_LEAVES:
            node = stack.pop()
            node = resolve(doc, node)
            if not isinstance(node, dict):
                continue
            marker = id(node)
            if marker in visited:
                doc.warn("page tree cycle detected")
                continue
            visited.add(marker)
            node_type = node.get("Type")
            type_name = node_type.value if isinstance(node_type, PdfName) else None
            kids = resolve(doc, node.get("Kids"))
            if type_name == "Page":
                pages.append(node)
            elif isinstance(kids, list):
                for kid in reversed(kids):
                    stack.append(kid)
            elif type_name != "Pages":
                # Leaf without /Type; accept if it looks like a page.
                if "Contents" in node or "MediaBox" in node:
                    pages.append(node)
        if declared is not None and declared != len(pages):
            doc.warn(f"page tree count mismatch: declared {declared}, found {len(pages)}")
        if pages:
            return pages
    # Fallback: any object typed /Page, in object-number order.
    for key in sorted(doc.objects):
        value = doc.objects[key]
        if isinstance(value, dict):
            t = value.get("Type")
            if isinstance(t, PdfName) and t.value == "Page":
                pages.append(value)
    if pages:
        doc.warn("page tree broken; pages recovered from object scan")
    elif doc.root:
        doc.warn("no pages found")
    return pages


def _check_dangling(doc: Document) -> None:
    missing: set[tuple[int, int]] = set()

    def visit(value, depth: int = 0):
        if depth > MAX_PARSE_DEPTH:
            return
        if isinstance(value, PdfReference):
            if _lookup(doc, value) is None:
                missing.add((value.obj_num, value.gen))
        elif isinstance(value, dict):
            for v in value.values():
                visit(v, depth + 1)
        elif isinstance(value, list):
            for v in value:
                visit(v, depth + 1)
        elif isinstance(value, PdfStream):
            visit(value.dictionary, depth + 1)

    for key in sorted(doc.objects):
        visit(doc.objects[key])
    visit(doc.trailer)
    for num, gen in sorted(missing):
        doc.warn(f"dangling reference {num} {gen}")


def _lookup(doc: Document, ref: PdfReference):
    value = doc.objects.get((ref.obj_num, ref.gen))
    if value is not None:
        return value
    value = doc.objects.get((ref.obj_num, 0))
    if value is not None:
        return value
    candidates = [key for key in doc.objects if key[0] == ref.obj_num]
    if candidates:
        return doc.objects[min(candidates)]
    return None


# -- Public operations ----------------------------------------------------------


def resolve(doc: Document, value):
    """Follow reference chains to a direct value; dangling goes to PdfNull."""
    hops = 0
    while isinstance(value, PdfReference):
        if hops >= MAX_REF_HOPS:
            return PdfNull
        found = _lookup(doc, value)
        if found is None:
            return PdfNull
        value = found
        hops += 1
    return value


def decode_stream(doc: Document, stream: PdfStream) -> DecodedStream:
    """Decode a stream's filter chain with document-bound reference resolution."""
    return _decode_filters(stream, resolver=lambda v: resolve(doc, v))


def scan_bytes(data: bytes, keyword: bytes) -> list[int]:
    """Non-overlapping ascending offsets of *keyword* in *data*."""
    if not keyword:
        raise ValueError("keyword must be nonempty")
    hits: list[int] = []
    pos = data.find(keyword)
    while pos != -1:
        hits.append(pos)
        pos = data.find(keyword, pos + len(keyword))
    return hits


def scan_keyword_positions(doc: Document, keyword: bytes | str) -> list[KeywordHit]:
    """Every non-overlapping occurrence of *keyword* in the raw file bytes."""
    if isinstance(keyword, str):
        raw = keyword.encode("latin-1")
        text = keyword
    else:
        raw = bytes(keyword)
        text = raw.decode("latin-1")
    return [KeywordHit(text, off) for off in scan_bytes(doc.data, raw)]
