"""Metadata, character-composition, entropy, text-summary and temporal features."""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass
from datetime import datetime, timezone

from .content import PageText
from .objects import Document, PdfName, PdfString
from .parser import resolve

STRING_FIELDS = ("author", "title", "creator", "producer", "subject", "keywords")

_INFO_KEYS = {
    "Author": "author",
    "Title": "title",
    "Creator": "creator",
    "Producer": "producer",
    "Subject": "subject",
    "Keywords": "keywords",
    "CreationDate": "creation_date_raw",
    "ModDate": "mod_date_raw",
}

_DATE_RE = re.compile(
    r"^(?:D:)?(\d{4})(\d{2})?(\d{2})?(\d{2})?(\d{2})?(\d{2})?"
    r"(?:(Z)(?:00'00'?)?|([+\-])(\d{2})(?:'?(\d{2}))?'?)?$"
)


@dataclass(frozen=True, slots=True)
class MetadataFields:
    """Info-dictionary fields; None marks absence (distinct from empty)."""

    author: str | None = None
    title: str | None = None
    creator: str | None = None
    producer: str | None = None
    subject: str | None = None
    keywords: str | None = None
    creation_date_raw: str | None = None
    mod_date_raw: str | None = None

    def string_values(self) -> list[str | None]:
        return [getattr(self, name) for name in STRING_FIELDS]


@dataclass(frozen=True, slots=True)
class FieldComposition:
    """Character composition of one metadata field (5 counts)."""

    dot_count: int
    length: int
    digit_count: int
    other_count: int
    uppercase_count: int

    def values(self) -> list[int]:
        return [self.dot_count, self.length, self.digit_count, self.other_count, self.uppercase_count]


@dataclass(frozen=True, slots=True)
class TemporalBlock:
    delta_seconds: float
    creation_has_z: int
    mod_has_z: int

    def values(self) -> list[float]:
        return [self.delta_seconds, self.creation_has_z, self.mod_has_z]


@dataclass(frozen=True, slots=True)
class TextSummary:
    avg_word_length: float = 0.0
    max_token_length: int = 0
    token_diversity: float = 0.0
    digit_count: int = 0
    uppercase_count: int = 0
    lowercase_count: int = 0
    whitespace_count: int = 0
    special_count: int = 0
    non_ascii_count: int = 0
    body_entropy: float = 0.0

    def values(self) -> list[float]:
        return [
            self.avg_word_length,
            self.max_token_length,
            self.token_diversity,
            self.digit_count,
            self.uppercase_count,
            self.lowercase_count,
            self.whitespace_count,
            self.special_count,
            self.non_ascii_count,
            self.body_entropy,
        ]


def extract_metadata(doc: Document) -> MetadataFields:
    """Read the Info dictionary via the trailer; absent pieces stay None."""
    info = doc.info
    if not isinstance(info, dict):
        return MetadataFields()
    values: dict[str, str] = {}
    for info_key, field_name in _INFO_KEYS.items():
        value = resolve(doc, info.get(info_key))
        if isinstance(value, PdfString):
            values[field_name] = value.text()
        elif isinstance(value, PdfName):
            values[field_name] = value.value
    return MetadataFields(**values)


def char_composition(field: str) -> FieldComposition:
    """Count dots, total length, digits, non-alphanumerics and uppercase."""
    dots = digits = other = upper = 0
    for c in field:
        if c == ".":
            dots += 1
        if "0" <= c <= "9":
            digits += 1
        elif "A" <= c <= "Z":
            upper += 1
        elif not ("a" <= c <= "z"):
            other += 1
    return FieldComposition(dots, len(field), digits, other, upper)


def metadata_block(fields: MetadataFields) -> list[FieldComposition]:
    """Composition of the 6 string fields in fixed order; absent -> zeros."""
    return [char_composition(value or "") for value in fields.string_values()]


def shannon_entropy(data: str | bytes) -> float:
    """Bits per symbol over character (str) or byte (bytes) frequencies."""
    if not data:
        return 0.0
    counts = Counter(data)
    total = len(data)
    return -sum((c / total) * math.log2(c / total) for c in counts.values())


def parse_pdf_date(raw: str) -> tuple[float, int] | None:
    """Parse D:YYYYMMDDHHmmSS with optional Z / +HH'mm' offset.

    Returns (seconds since epoch UTC, has_z) or None when unparseable.
    has_z reflects literal 'Z' membership in the raw string.
    """
    has_z = 1 if "Z" in raw else 0
    match = _DATE_RE.match(raw.strip())
    if not match:
        return None
    year = int(match.group(1))
    month = int(match.group(2) or 1)
    day = int(match.group(3) or 1)
    hour = int(match.group(4) or 0)
    minute = int(match.group(5) or 0)
    second = int(match.group(6) or 0)
    try:
        moment = datetime(year, month, day, hour, minute, second, tzinfo=timezone.utc)
    except ValueError:
        return None
    timestamp = moment.timestamp()
    if match.group(8):  # explicit +/- offset
        offset = int(match.group(9) or 0) * 3600 + int(match.group(10) or 0) * 60
        if match.group(8) == "-":
            offset = -offset
        timestamp -= offset
    return timestamp, has_z


def temporal_block(creation_raw: str | None, mod_raw: str | None) -> TemporalBlock:
    """Absolute timestamp delta plus literal Z-flags on the raw strings."""
    creation_has_z = 1 if creation_raw is not None and "Z" in creation_raw else 0
    mod_has_z = 1 if mod_raw is not None and "Z" in mod_raw else 0
    delta = 0.0
    if creation_raw is not None and mod_raw is not None:
        parsed_c = parse_pdf_date(creation_raw)
        parsed_m = parse_pdf_date(mod_raw)
        if parsed_c is not None and parsed_m is not None:
            delta = abs(parsed_m[0] - parsed_c[0])
    return TemporalBlock(delta, creation_has_z, mod_has_z)


def text_summary(pages: list[PageText], raw_text: str) -> TextSummary:
    """Whole-document token statistics and character-class counts."""
    tokens = [token for page in pages for token in page.tokens]
    digit = upper = lower = white = special = non_ascii = 0
    for c in raw_text:
        code = ord(c)
        if code > 127:
            non_ascii += 1
        elif "0" <= c <= "9":
            digit += 1
        elif "A" <= c <= "Z":
            upper += 1
        elif "a" <= c <= "z":
            lower += 1
        elif c in " \t\n\r\x0b\x0c":
            white += 1
        elif 0x21 <= code <= 0x7E:
            special += 1
    if tokens:
        avg_len = sum(len(t) for t in tokens) / len(tokens)
        max_len = max(len(t) for t in tokens)
        diversity = len(set(tokens)) / len(tokens)
    else:
        avg_len, max_len, diversity = 0.0, 0, 0.0
    return TextSummary(
        avg_word_length=avg_len,
        max_token_length=max_len,
        token_diversity=diversity,
        digit_count=digit,
        uppercase_count=upper,
        lowercase_count=lower,
        whitespace_count=white,
        special_count=special,
        non_ascii_count=non_ascii,
        body_entropy=shannon_entropy(raw_text),
    )
