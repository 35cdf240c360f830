"""Structural keyword statistics, suspicious-name flags, file-level scalars
and the miscellaneous block.

Keyword counting is token-aware: a word keyword matches only when delimited
on both sides (so ``obj`` never counts inside ``endobj``) and a name keyword
only when the following byte ends the name (so ``/Page`` never counts inside
``/Pages``)."""

from __future__ import annotations

from dataclasses import dataclass

from .lexer import is_regular
from .metafeatures import shannon_entropy
from .objects import Document, PdfName, PdfReference, PdfStream
from .parser import decode_stream, resolve, scan_bytes

MAX_TREE_DEPTH = 64
HIGH_ENTROPY_THRESHOLD = 7.0

# (column slug, raw bytes, needs left boundary)
STRUCT_KEYWORDS: tuple[tuple[str, bytes, bool], ...] = (
    ("obj", b"obj", True),
    ("endobj", b"endobj", True),
    ("stream", b"stream", True),
    ("endstream", b"endstream", True),
    ("xref", b"xref", True),
    ("trailer", b"trailer", True),
    ("startxref", b"startxref", True),
    ("name_font", b"/Font", False),
    ("name_page", b"/Page", False),
    ("name_image", b"/Image", False),
    ("name_objstm", b"/ObjStm", False),
    ("name_xref", b"/XRef", False),
)

FLAG_NAMES: tuple[str, ...] = (
    "JS",
    "JavaScript",
    "OpenAction",
    "AA",
    "Launch",
    "URI",
    "RichMedia",
    "AcroForm",
    "EmbeddedFile",
    "XFA",
    "Encrypt",
)


@dataclass(frozen=True, slots=True)
class StructStat:
    """Count and byte-position statistics for one structural keyword."""

    keyword: str
    count: int
    pos_min: int
    pos_max: int
    pos_avg: float

    def values(self) -> list[float]:
        return [self.count, self.pos_min, self.pos_max, self.pos_avg]


@dataclass(frozen=True, slots=True)
class PdfFlagVector:
    """Presence booleans for the 11 suspicious names, schema order."""

    js: int = 0
    javascript: int = 0
    openaction: int = 0
    aa: int = 0
    launch: int = 0
    uri: int = 0
    richmedia: int = 0
    acroform: int = 0
    embeddedfile: int = 0
    xfa: int = 0
    encrypt: int = 0

    def values(self) -> list[int]:
        return [
            self.js,
            self.javascript,
            self.openaction,
            self.aa,
            self.launch,
            self.uri,
            self.richmedia,
            self.acroform,
            self.embeddedfile,
            self.xfa,
            self.encrypt,
        ]


@dataclass(frozen=True, slots=True)
class FileLevelBlock:
    file_size: int
    pdf_version: float
    count_page: int

    def values(self) -> list[float]:
        return [self.file_size, self.pdf_version, self.count_page]


@dataclass(frozen=True, slots=True)
class MiscBlock:
    whole_file_entropy: float
    compression_ratio: float
    embedded_file_count: int
    object_tree_depth: int
    is_encrypted: int
    object_count: int
    stream_count: int

    def values(self) -> list[float]:
        return [
            self.whole_file_entropy,
            self.compression_ratio,
            self.embedded_file_count,
            self.object_tree_depth,
            self.is_encrypted,
            self.object_count,
            self.stream_count,
        ]


@dataclass(frozen=True, slots=True)
class StreamProfile:
    """Per-stream decode outcome used by ratio and entropy features."""

    length: int
    entropy: float
    decoded: bool


def token_positions(data: bytes, keyword: bytes, left_boundary: bool) -> list[int]:
    """Occurrences of *keyword* that stand alone as a token."""
    n = len(data)
    k = len(keyword)
    hits = []
    for pos in scan_bytes(data, keyword):
        if left_boundary and pos > 0 and is_regular(data[pos - 1]):
            continue
        end = pos + k
        if end < n and is_regular(data[end]):
            continue
        hits.append(pos)
    return hits


def _stat_from_positions(slug: str, positions: list[int]) -> StructStat:
    if not positions:
        return StructStat(slug, 0, 0, 0, 0.0)
    return StructStat(
        slug,
        len(positions),
        positions[0],
        positions[-1],
        sum(positions) / len(positions),
    )


def structural_counts(doc: Document) -> list[StructStat]:
    """StructStat for each of the 12 fixed keywords (48 values total)."""
    return [
        _stat_from_positions(slug, token_positions(doc.data, raw, left))
        for slug, raw, left in STRUCT_KEYWORDS
    ]


def collect_names(doc: Document) -> set[str]:
    """Every name appearing as a dictionary key or Name value anywhere in
    the object table (object-stream contents included) or trailer."""
    names: set[str] = set()

    def visit(value, depth: int = 0):
        if depth > MAX_TREE_DEPTH:
            return
        if isinstance(value, PdfName):
            names.add(value.value)
        elif isinstance(value, dict):
            for key, item in value.items():
                names.add(key)
                visit(item, depth + 1)
        elif isinstance(value, list):
            for item in value:
                visit(item, depth + 1)
        elif isinstance(value, PdfStream):
            visit(value.dictionary, depth + 1)

    visit(doc.trailer)
    for key in sorted(doc.objects):
        visit(doc.objects[key])
    return names


def flag_name_raw_counts(doc: Document) -> dict[str, int]:
    """Token-boundary raw occurrence count for each suspicious name."""
    return {
        name: len(token_positions(doc.data, b"/" + name.encode("ascii"), False))
        for name in FLAG_NAMES
    }


def keyword_flags(doc: Document) -> PdfFlagVector:
    """Flag = present in parsed objects OR as a raw byte occurrence.

    The raw-scan side catches names hidden by a broken xref; the parsed
    side catches names hidden inside compressed object streams.
    """
    parsed = collect_names(doc)
    raw = flag_name_raw_counts(doc)
    bits = {name.lower(): int(name in parsed or raw[name] > 0) for name in FLAG_NAMES}
    return PdfFlagVector(**bits)


def file_level(doc: Document) -> FileLevelBlock:
    try:
        version = float(doc.version)
    except ValueError:
        version = 0.0
    if not 1.0 <= version <= 2.0:
        version = 0.0
    return FileLevelBlock(doc.file_size, version, doc.page_count)


def stream_profiles(doc: Document) -> list[StreamProfile]:
    """Decode every stream in the object table once, in table order."""
    profiles = []
    for key in sorted(doc.objects):
        value = doc.objects[key]
        if not isinstance(value, PdfStream):
            continue
        decoded = decode_stream(doc, value)
        payload = decoded.data if decoded.decoded else value.raw
        profiles.append(StreamProfile(len(payload), shannon_entropy(payload), decoded.decoded))
    return profiles


def _count_embedded_files(doc: Document) -> int:
    count = 0
    for key in sorted(doc.objects):
        value = doc.objects[key]
        if isinstance(value, PdfStream):
            t = value.dictionary.get("Type")
            if isinstance(t, PdfName) and t.value == "EmbeddedFile":
                count += 1
        elif isinstance(value, dict):
            t = value.get("Type")
            if isinstance(t, PdfName) and t.value == "Filespec":
                count += 1
    return count


def object_tree_depth(doc: Document) -> int:
    """Maximum container nesting reachable from the Root dictionary."""
    if not doc.root:
        return 0
    deepest = 0
    visited: set[int] = set()
    stack: list[tuple[object, int]] = [(doc.root, 1)]
    while stack:
        value, depth = stack.pop()
        if isinstance(value, PdfReference):
            value = resolve(doc, value)
        if isinstance(value, PdfStream):
            value = value.dictionary
        if not isinstance(value, (dict, list)):
            continue
        if id(value) in visited:
            continue
        visited.add(id(value))
        deepest = max(deepest, depth)
        if depth >= MAX_TREE_DEPTH:
            continue
        children = value.values() if isinstance(value, dict) else value
        for child in children:
            stack.append((child, depth + 1))
    return deepest


def misc_block(doc: Document, profiles: list[StreamProfile] | None = None) -> MiscBlock:
    if profiles is None:
        profiles = stream_profiles(doc)
    total_stream_bytes = sum(p.length for p in profiles)
    ratio = total_stream_bytes / doc.file_size if doc.file_size else 0.0
    return MiscBlock(
        whole_file_entropy=shannon_entropy(doc.data),
        compression_ratio=ratio,
        embedded_file_count=_count_embedded_files(doc),
        object_tree_depth=object_tree_depth(doc),
        is_encrypted=int(doc.encrypted),
        object_count=len(doc.objects),
        stream_count=sum(1 for v in doc.objects.values() if isinstance(v, PdfStream)),
    )
