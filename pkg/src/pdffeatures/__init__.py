"""Static PDF feature extraction for malicious-document classification.

Parses PDFs leniently from raw bytes and emits a fixed 170-column feature
vector per document: word-graph topology, metadata composition, temporal
deltas, text statistics, structural keyword positions, image geometry,
suspicious-name flags and file-level scalars.
"""

from .content import PageText, extract_page_text, tokenize
from .filters import DecodedStream
from .imagefeatures import ImageBlock, ImageInfo, enumerate_images, image_block
from .metafeatures import (
    FieldComposition,
    MetadataFields,
    TemporalBlock,
    TextSummary,
    char_composition,
    extract_metadata,
    metadata_block,
    parse_pdf_date,
    shannon_entropy,
    temporal_block,
    text_summary,
)
from .objects import (
    Document,
    HeaderMissing,
    KeywordHit,
    PdfError,
    PdfName,
    PdfNull,
    PdfReference,
    PdfStream,
    PdfString,
    Unrecoverable,
)
from .parser import decode_stream, parse_document, resolve, scan_keyword_positions
from .pipeline import extract_bytes, extract_document, extract_path
from .schema import Column, FeatureSchema, SCHEMA_VERSION, schema
from .structfeatures import (
    FileLevelBlock,
    MiscBlock,
    PdfFlagVector,
    StructStat,
    file_level,
    keyword_flags,
    misc_block,
    structural_counts,
)
from .vector import BlockLengthMismatch, FeatureVector, assemble, write_csv, write_jsonl
from .wordgraph import (
    GraphFeatureBlock,
    WordGraph,
    aggregate_page_graphs,
    average_degree,
    build_word_graph,
    clustering_coefficient,
    degree_centrality_stats,
    density,
)

__version__ = "0.1.0"

__all__ = [
    "BlockLengthMismatch",
    "Column",
    "DecodedStream",
    "Document",
    "FeatureSchema",
    "FeatureVector",
    "FieldComposition",
    "FileLevelBlock",
    "GraphFeatureBlock",
    "HeaderMissing",
    "ImageBlock",
    "ImageInfo",
    "KeywordHit",
    "MetadataFields",
    "MiscBlock",
    "PageText",
    "PdfError",
    "PdfFlagVector",
    "PdfName",
    "PdfNull",
    "PdfReference",
    "PdfStream",
    "PdfString",
    "SCHEMA_VERSION",
    "StructStat",
    "TemporalBlock",
    "TextSummary",
    "Unrecoverable",
    "WordGraph",
    "aggregate_page_graphs",
    "assemble",
    "average_degree",
    "build_word_graph",
    "char_composition",
    "clustering_coefficient",
    "decode_stream",
    "degree_centrality_stats",
    "density",
    "enumerate_images",
    "extract_bytes",
    "extract_document",
    "extract_metadata",
    "extract_page_text",
    "extract_path",
    "file_level",
    "image_block",
    "keyword_flags",
    "metadata_block",
    "misc_block",
    "parse_document",
    "parse_pdf_date",
    "resolve",
    "scan_keyword_positions",
    "schema",
    "shannon_entropy",
    "structural_counts",
    "temporal_block",
    "text_summary",
    "tokenize",
    "write_csv",
    "write_jsonl",
]
