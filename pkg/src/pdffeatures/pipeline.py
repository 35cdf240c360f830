"""End-to-end extraction: raw PDF bytes in, one feature vector out."""

from __future__ import annotations

from pathlib import Path

from .content import document_text, extract_all_pages
from .imagefeatures import enumerate_images, image_block
from .metafeatures import (
    MetadataFields,
    extract_metadata,
    metadata_block,
    shannon_entropy,
    temporal_block,
    text_summary,
)
from .objects import Document
from .parser import parse_document, scan_bytes
from .structfeatures import (
    FLAG_NAMES,
    HIGH_ENTROPY_THRESHOLD,
    file_level,
    flag_name_raw_counts,
    keyword_flags,
    misc_block,
    stream_profiles,
    structural_counts,
)
from .vector import FeatureVector, MiscExtras, assemble
from .wordgraph import aggregate_page_graphs, build_word_graph, page_metrics

DEFAULT_WINDOW = 2


def extract_document(doc: Document, window: int = DEFAULT_WINDOW, source_path: str = "") -> FeatureVector:
    """Compute every feature block for an already-parsed document."""
    warnings = list(doc.parse_warnings)

    pages, page_warnings = extract_all_pages(doc)
    warnings.extend(page_warnings)

    per_page = [page_metrics(build_word_graph(page.tokens, window)) for page in pages]
    graph = aggregate_page_graphs(per_page)

    metadata = extract_metadata(doc)
    meta = metadata_block(metadata)
    time = temporal_block(metadata.creation_date_raw, metadata.mod_date_raw)

    body = document_text(pages)
    text = text_summary(pages, body)

    struct = structural_counts(doc)
    flags = keyword_flags(doc)
    file_blk = file_level(doc)

    profiles = stream_profiles(doc)
    misc = misc_block(doc, profiles)

    images = enumerate_images(doc)
    image = image_block(images, doc.file_size)

    extras = _misc_extras(doc, metadata, pages, body, text.body_entropy, profiles)

    return assemble(
        graph=graph,
        meta=meta,
        time=time,
        text=text,
        struct=struct,
        image=image,
        flags=flags,
        file_block=file_blk,
        misc=misc,
        extras=extras,
        source_path=source_path,
        warnings_count=len(warnings),
    )


def _misc_extras(doc, metadata: MetadataFields, pages, body: str, body_entropy: float, profiles) -> MiscExtras:
    field_entropies = tuple(shannon_entropy(value or "") for value in metadata.string_values())
    presence = tuple(
        int(value is not None)
        for value in (*metadata.string_values(), metadata.creation_date_raw, metadata.mod_date_raw)
    )
    raw_counts = flag_name_raw_counts(doc)
    entropies = [p.entropy for p in profiles]
    return MiscExtras(
        field_entropies=field_entropies,
        body_entropy=body_entropy,
        presence=presence,
        name_counts=tuple(raw_counts[name] for name in FLAG_NAMES),
        stream_entropy_mean=sum(entropies) / len(entropies) if entropies else 0.0,
        stream_entropy_max=max(entropies) if entropies else 0.0,
        high_entropy_stream_count=sum(1 for e in entropies if e > HIGH_ENTROPY_THRESHOLD),
        max_stream_length=max((p.length for p in profiles), default=0),
        eof_count=len(scan_bytes(doc.data, b"%%EOF")),
        total_token_count=sum(len(page.tokens) for page in pages),
        total_line_count=sum(len(page.lines) for page in pages),
        pages_with_text=sum(1 for page in pages if page.lines),
        text_char_count=len(body),
    )


def extract_bytes(data: bytes, window: int = DEFAULT_WINDOW, source_path: str = "") -> FeatureVector:
    """Parse raw bytes and extract; parse errors propagate as PdfError."""
    doc = parse_document(data)
    return extract_document(doc, window=window, source_path=source_path)


def extract_path(path: str | Path, window: int = DEFAULT_WINDOW) -> FeatureVector:
    path = Path(path)
    return extract_bytes(path.read_bytes(), window=window, source_path=str(path))
