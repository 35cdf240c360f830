"""PDF object model.

The parser produces plain Python values for the scalar PDF kinds and small
dataclasses for the kinds that need extra bookkeeping:

* Null      -> ``PdfNull`` (singleton sentinel, distinct from Python ``None``)
* Boolean   -> ``bool``
* Integer   -> ``int``
* Real      -> ``float``
* String    -> :class:`PdfString` (raw bytes plus literal/hex origin)
* Name      -> :class:`PdfName`
* Array     -> ``list``
* Dictionary-> ``dict`` keyed by name text (insertion ordered)
* Stream    -> :class:`PdfStream`
* Reference -> :class:`PdfReference`
"""

from __future__ import annotations

from dataclasses import dataclass, field


class PdfError(Exception):
    """Base class for parse-level failures."""


class HeaderMissing(PdfError):
    """No %PDF- marker within the first 1024 bytes."""


class Unrecoverable(PdfError):
    """No indirect objects could be located at all."""


class _PdfNullType:
    """Singleton for the PDF null object."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "PdfNull"

    def __bool__(self) -> bool:
        return False


PdfNull = _PdfNullType()


@dataclass(frozen=True, slots=True)
class PdfName:
    """A PDF name object; ``value`` excludes the leading slash."""

    value: str

    def __str__(self) -> str:
        return "/" + self.value


@dataclass(frozen=True, slots=True)
class PdfString:
    """String object as raw bytes.

    ``hex_origin`` records whether the source syntax was <...> rather than
    (...); some features care about the distinction, the text decoding does
    not.
    """

    raw: bytes
    hex_origin: bool = False

    def text(self) -> str:
        return decode_pdf_text(self.raw)

    def __len__(self) -> int:
        return len(self.raw)


@dataclass(frozen=True, slots=True)
class PdfReference:
    """Indirect reference ``obj_num gen R``."""

    obj_num: int
    gen: int


@dataclass(slots=True)
class PdfStream:
    """Stream object: its dictionary, the still-encoded payload and the byte
    offset of the ``stream`` keyword in the original file (-1 when the stream
    was reconstructed and no offset is known)."""

    dictionary: dict
    raw: bytes
    offset: int = -1


def decode_pdf_text(raw: bytes) -> str:
    """Decode string bytes: UTF-16BE when BOM-prefixed, Latin-1 otherwise."""
    if raw.startswith(b"\xfe\xff"):
        return raw[2:].decode("utf-16-be", errors="replace")
    return raw.decode("latin-1")


@dataclass(frozen=True, slots=True)
class KeywordHit:
    """One occurrence of a byte keyword in the raw file."""

    keyword: str
    byte_offset: int


@dataclass(slots=True)
class Document:
    """Parsed PDF file.

    Immutable after construction by convention: the parser is the only
    writer, every downstream consumer treats the instance as read-only, so
    it is safe to share across worker threads.
    """

    objects: dict[tuple[int, int], object]
    trailer: dict
    root: dict
    info: dict | None
    pages: list[dict]
    version: str
    data: bytes
    parse_warnings: list[str] = field(default_factory=list)
    encrypted: bool = False

    @property
    def file_size(self) -> int:
        return len(self.data)

    @property
    def page_count(self) -> int:
        return len(self.pages)

    def warn(self, message: str) -> None:
        # Parser-internal; not part of the read-only consumer surface.
        self.parse_warnings.append(message)
