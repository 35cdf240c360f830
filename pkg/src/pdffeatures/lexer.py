"""Byte-level tokenizer for PDF syntax.

Used both for body objects (dictionaries, arrays, ...) and for page content
streams (whose operators are plain keyword tokens). The lexer is lenient:
malformed input never raises, it degrades to keyword tokens or skips bytes,
and every call advances the cursor so scanning always terminates.
"""

from __future__ import annotations

from dataclasses import dataclass

from .objects import PdfName, PdfString

WHITESPACE = b"\x00\t\n\x0c\r "
DELIMITERS = b"()<>[]{}/%"

_HEX_DIGITS = b"0123456789abcdefABCDEF"
_NUMBER_CHARS = b"+-.0123456789"

# Token kinds
NUMBER = "number"
NAME = "name"
STRING = "string"
DICT_OPEN = "dict_open"
DICT_CLOSE = "dict_close"
ARRAY_OPEN = "array_open"
ARRAY_CLOSE = "array_close"
KEYWORD = "keyword"
EOF = "eof"


def is_whitespace(byte: int) -> bool:
    return byte in WHITESPACE


def is_delimiter(byte: int) -> bool:
    return byte in DELIMITERS


def is_regular(byte: int) -> bool:
    return byte not in WHITESPACE and byte not in DELIMITERS


@dataclass(slots=True)
class Token:
    kind: str
    value: object
    pos: int


class Lexer:
    __slots__ = ("data", "pos")

    def __init__(self, data: bytes, pos: int = 0):
        self.data = data
        self.pos = pos

    def at_eof(self) -> bool:
        return self.pos >= len(self.data)

    def skip_whitespace(self) -> None:
        """Advance past whitespace and %-comments."""
        data = self.data
        n = len(data)
        while self.pos < n:
            b = data[self.pos]
            if b in WHITESPACE:
                self.pos += 1
            elif b == 0x25:  # '%'
                end = data.find(b"\n", self.pos)
                cr = data.find(b"\r", self.pos)
                if cr != -1 and (end == -1 or cr < end):
                    end = cr
                self.pos = n if end == -1 else end + 1
            else:
                return

    def next_token(self) -> Token:
        self.skip_whitespace()
        data = self.data
        start = self.pos
        if start >= len(data):
            return Token(EOF, None, start)
        b = data[start]
        if b == 0x2F:  # '/'
            return self._read_name()
        if b == 0x28:  # '('
            return self._read_literal_string()
        if b == 0x3C:  # '<'
            if data.startswith(b"<<", start):
                self.pos = start + 2
                return Token(DICT_OPEN, None, start)
            return self._read_hex_string()
        if b == 0x3E:  # '>'
            if data.startswith(b">>", start):
                self.pos = start + 2
                return Token(DICT_CLOSE, None, start)
            self.pos = start + 1  # stray '>' -- skip leniently
            return Token(KEYWORD, b">", start)
        if b == 0x5B:  # '['
            self.pos = start + 1
            return Token(ARRAY_OPEN, None, start)
        if b == 0x5D:  # ']'
            self.pos = start + 1
            return Token(ARRAY_CLOSE, None, start)
        if b in b"+-." or 0x30 <= b <= 0x39:
            return self._read_number()
        if b in b"(){}":
            self.pos = start + 1
            return Token(KEYWORD, data[start : start + 1], start)
        return self._read_keyword()

    def _read_number(self) -> Token:
        data = self.data
        start = self.pos
        pos = start
        n = len(data)
        while pos < n and data[pos] in _NUMBER_CHARS:
            pos += 1
        self.pos = max(pos, start + 1)
        text = data[start:pos]
        try:
            value: object = int(text)
        except ValueError:
            try:
                value = float(text)
            except ValueError:
                value = 0  # degenerate like "-" or "."; lenient zero
        return Token(NUMBER, value, start)

    def _read_name(self) -> Token:
        data = self.data
        start = self.pos
        pos = start + 1  # past '/'
        n = len(data)
        out = bytearray()
        while pos < n and is_regular(data[pos]):
            b = data[pos]
            if b == 0x23 and pos + 2 < n and data[pos + 1] in _HEX_DIGITS and data[pos + 2] in _HEX_DIGITS:
                out.append(int(data[pos + 1 : pos + 3], 16))
                pos += 3
            else:
                out.append(b)
                pos += 1
        self.pos = pos
        return Token(NAME, PdfName(out.decode("latin-1")), start)

    def _read_literal_string(self) -> Token:
        data = self.data
        start = self.pos
        pos = start + 1  # past '('
        n = len(data)
        depth = 1
        out = bytearray()
        while pos < n:
            b = data[pos]
            if b == 0x5C:  # backslash escape
                pos += 1
                if pos >= n:
                    break
                e = data[pos]
                if e == 0x6E:
                    out.append(0x0A)
                elif e == 0x72:
                    out.append(0x0D)
                elif e == 0x74:
                    out.append(0x09)
                elif e == 0x62:
                    out.append(0x08)
                elif e == 0x66:
                    out.append(0x0C)
                elif e in b"()\\":
                    out.append(e)
                elif 0x30 <= e <= 0x37:  # up to three octal digits
                    val = e - 0x30
                    for _ in range(2):
                        if pos + 1 < n and 0x30 <= data[pos + 1] <= 0x37:
                            pos += 1
                            val = val * 8 + (data[pos] - 0x30)
                        else:
                            break
                    out.append(val & 0xFF)
                elif e in b"\r\n":  # line continuation
                    if e == 0x0D and pos + 1 < n and data[pos + 1] == 0x0A:
                        pos += 1
                else:
                    out.append(e)
                pos += 1
            elif b == 0x28:
                depth += 1
                out.append(b)
                pos += 1
            elif b == 0x29:
                depth -= 1
                if depth == 0:
                    pos += 1
                    break
                out.append(b)
                pos += 1
            else:
                out.append(b)
                pos += 1
        self.pos = pos
        return Token(STRING, PdfString(bytes(out), hex_origin=False), start)

    def _read_hex_string(self) -> Token:
        data = self.data
        start = self.pos
        pos = start + 1  # past '<'
        n = len(data)
        digits = bytearray()
        while pos < n:
            b = data[pos]
            if b == 0x3E:  # '>'
                pos += 1
                break
            if b in _HEX_DIGITS:
                digits.append(b)
            pos += 1  # non-hex bytes skipped leniently
        if len(digits) % 2:
            digits.append(0x30)
        try:
            raw = bytes.fromhex(digits.decode("ascii"))
        except ValueError:
            raw = b""
        self.pos = pos
        return Token(STRING, PdfString(raw, hex_origin=True), start)

    def _read_keyword(self) -> Token:
        data = self.data
        start = self.pos
        pos = start
        n = len(data)
        while pos < n and is_regular(data[pos]):
            pos += 1
        self.pos = max(pos, start + 1)
        return Token(KEYWORD, data[start : self.pos], start)
