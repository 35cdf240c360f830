"""Page content-stream interpretation: text extraction and tokenization.

Only the text-positioning subset needed for line segmentation is modeled:
shown strings accumulate into a line, and any of Td/TD/T*/'/" (or a fresh
BT) starts the next one. Font encodings are not resolved; string bytes are
decoded by the shared UTF-16BE/Latin-1 rule.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator

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
    is_regular,
)
from .objects import Document, PdfStream, PdfString
from .parser import decode_stream, resolve

_TOKEN_RE = re.compile(r"[^\W_]+")

_LINE_ADVANCE_OPS = {b"Td", b"TD", b"T*"}
_SHOW_OPS = {b"Tj", b"TJ", b"'", b'"'}


@dataclass(slots=True)
class PageText:
    """Extracted text of one page: raw lines plus normalized tokens."""

    page_index: int
    lines: list[str]
    tokens: list[str]


def tokenize(text: str) -> list[str]:
    """Split on non-alphanumerics, lowercase, keep order and duplicates."""
    return _TOKEN_RE.findall(text.lower())


_MAX_NESTING = 50


def iter_content_operators(data: bytes) -> Iterator[tuple[list, bytes]]:
    """Yield (operands, operator) pairs from a decoded content stream.

    Inline images are yielded as ([image_dict], b"BI") with the binary data
    skipped. Malformed constructs are dropped rather than raised.
    """
    lexer = Lexer(data, 0)
    operands: list = []
    while True:
        tok = lexer.next_token()
        kind = tok.kind
        if kind == EOF:
            return
        if kind in (NUMBER, STRING, NAME):
            operands.append(tok.value)
        elif kind == ARRAY_OPEN:
            operands.append(_collect_array(lexer, 0))
        elif kind == DICT_OPEN:
            operands.append(_collect_dict(lexer, 0))
        elif kind == KEYWORD:
            if tok.value == b"BI":
                img = _collect_inline_image(lexer)
                yield [img], b"BI"
                operands = []
            else:
                yield operands, tok.value
                operands = []
        # stray closers are ignored


def _collect_array(lexer: Lexer, depth: int) -> list:
    out: list = []
    while True:
        tok = lexer.next_token()
        if tok.kind in (ARRAY_CLOSE, EOF):
            return out
        if tok.kind in (NUMBER, STRING, NAME):
            out.append(tok.value)
        elif tok.kind == ARRAY_OPEN and depth < _MAX_NESTING:
            out.append(_collect_array(lexer, depth + 1))
        elif tok.kind == DICT_OPEN and depth < _MAX_NESTING:
            out.append(_collect_dict(lexer, depth + 1))
        # keywords inside arrays (true/false/null) are irrelevant for text


def _collect_dict(lexer: Lexer, depth: int) -> dict:
    out: dict = {}
    while True:
        tok = lexer.next_token()
        if tok.kind in (DICT_CLOSE, EOF):
            return out
        if tok.kind != NAME:
            continue
        key = tok.value.value
        vtok = lexer.next_token()
        if vtok.kind in (DICT_CLOSE, EOF):
            out[key] = None
            return out
        if vtok.kind in (NUMBER, STRING, NAME):
            out[key] = vtok.value
        elif vtok.kind == ARRAY_OPEN and depth < _MAX_NESTING:
            out[key] = _collect_array(lexer, depth + 1)
        elif vtok.kind == DICT_OPEN and depth < _MAX_NESTING:
            out[key] = _collect_dict(lexer, depth + 1)
        else:
            out[key] = None


def _collect_inline_image(lexer: Lexer) -> dict:
    """Read BI key/value pairs, then skip the binary payload through EI."""
    params: dict = {}
    while True:
        tok = lexer.next_token()
        if tok.kind == EOF:
            return params
        if tok.kind == KEYWORD and tok.value == b"ID":
            break
        if tok.kind == NAME:
            vtok = lexer.next_token()
            if vtok.kind in (NUMBER, STRING, NAME):
                params[tok.value.value] = vtok.value
            elif vtok.kind == ARRAY_OPEN:
                params[tok.value.value] = _collect_array(lexer, 0)
            elif vtok.kind == DICT_OPEN:
                params[tok.value.value] = _collect_dict(lexer, 0)
    data = lexer.data
    pos = lexer.pos
    if pos < len(data) and data[pos] in b"\x00\t\n\x0c\r ":
        pos += 1  # single whitespace separates ID from the payload
    end = _find_inline_end(data, pos)
    lexer.pos = end
    return params


def _find_inline_end(data: bytes, start: int) -> int:
    pos = start
    n = len(data)
    while True:
        idx = data.find(b"EI", pos)
        if idx == -1:
            return n
        before_ok = idx == 0 or not is_regular(data[idx - 1])
        after = idx + 2
        after_ok = after >= n or not is_regular(data[after])
        if before_ok and after_ok:
            return after
        pos = idx + 1


def _shown_text(operands: list, operator: bytes) -> str | None:
    if not operands:
        return None
    if operator in (b"Tj", b"'", b'"'):
        value = operands[-1]
        if isinstance(value, PdfString):
            return value.text()
        return None
    if operator == b"TJ":
        value = operands[-1]
        if isinstance(value, list):
            parts = [item.text() for item in value if isinstance(item, PdfString)]
            return "".join(parts)
    return None


def extract_text_lines(content: bytes) -> list[str]:
    """Interpret text operators in a decoded content stream into lines."""
    lines: list[str] = []
    current = ""
    pending_break = False
    bt_depth = 0
    for operands, operator in iter_content_operators(content):
        if operator == b"BT":
            bt_depth += 1
            pending_break = True
            continue
        if operator == b"ET":
            bt_depth = max(0, bt_depth - 1)
            continue
        if bt_depth <= 0:
            continue
        if operator in _LINE_ADVANCE_OPS:
            pending_break = True
            continue
        if operator in _SHOW_OPS:
            if operator in (b"'", b'"'):
                pending_break = True
            text = _shown_text(operands, operator)
            if text is None:
                continue
            if pending_break and current:
                lines.append(current)
                current = ""
            pending_break = False
            current += text
    if current:
        lines.append(current)
    return lines


def page_content_streams(doc: Document, page: dict) -> list[PdfStream]:
    """The page's content stream objects, /Contents order preserved."""
    contents = resolve(doc, page.get("Contents"))
    streams: list[PdfStream] = []
    if isinstance(contents, PdfStream):
        streams.append(contents)
    elif isinstance(contents, list):
        for item in contents:
            item = resolve(doc, item)
            if isinstance(item, PdfStream):
                streams.append(item)
    return streams


def page_content_bytes(doc: Document, page: dict, warnings: list[str] | None = None) -> bytes:
    """Decode and concatenate a page's content stream(s)."""
    chunks: list[bytes] = []
    for stream in page_content_streams(doc, page):
        decoded = decode_stream(doc, stream)
        if decoded.decoded:
            chunks.append(decoded.data)
        elif warnings is not None:
            warnings.append(f"content stream undecodable: {decoded.error}")
    return b"\n".join(chunks)


def extract_page_text(doc: Document, page_index: int, warnings: list[str] | None = None) -> PageText:
    """Extract text of one page; undecodable content yields an empty result."""
    if not 0 <= page_index < len(doc.pages):
        raise IndexError(f"page index {page_index} out of range")
    content = page_content_bytes(doc, doc.pages[page_index], warnings)
    lines = extract_text_lines(content)
    tokens = [token for line in lines for token in tokenize(line)]
    return PageText(page_index=page_index, lines=lines, tokens=tokens)


def extract_all_pages(doc: Document) -> tuple[list[PageText], list[str]]:
    """Per-page text for the whole document plus accumulated warnings."""
    warnings: list[str] = []
    pages = [extract_page_text(doc, i, warnings) for i in range(len(doc.pages))]
    return pages, warnings


def document_text(pages: list[PageText]) -> str:
    """Concatenated text body used for character statistics and entropy."""
    return "\n".join("\n".join(page.lines) for page in pages)
