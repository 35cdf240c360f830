"""Feature schema v1: the authoritative ordered 170-column layout.

Group order (graph, meta, time, text, struct, image, flags, file, misc) and
every column name are frozen for version "1"; any change here must bump
``SCHEMA_VERSION`` and the golden hash in the test suite. The same layout
ships as ``schema_v1.tsv`` next to this module.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

from .metafeatures import STRING_FIELDS
from .structfeatures import FLAG_NAMES, STRUCT_KEYWORDS

SCHEMA_VERSION = "1"

INT = "int"
REAL = "real"
BOOL = "bool"

GROUPS = ("graph", "meta", "time", "text", "struct", "image", "flags", "file", "misc")


@dataclass(frozen=True, slots=True)
class Column:
    name: str
    group: str
    kind: str


@dataclass(frozen=True, slots=True)
class FeatureSchema:
    version: str
    columns: tuple[Column, ...]

    def names(self) -> list[str]:
        return [column.name for column in self.columns]

    def fingerprint(self) -> str:
        """SHA-256 over the column layout; the stability golden value."""
        payload = "\n".join(f"{c.name}\t{c.group}\t{c.kind}" for c in self.columns)
        return hashlib.sha256(payload.encode("ascii")).hexdigest()

    def __len__(self) -> int:
        return len(self.columns)


def _graph_columns() -> list[Column]:
    cols = [
        Column("graph_node_count_total", "graph", INT),
        Column("graph_edge_count_total", "graph", INT),
    ]
    for metric in ("density", "avg_degree", "clustering", "degree_centrality"):
        cols.append(Column(f"graph_{metric}_mean", "graph", REAL))
        cols.append(Column(f"graph_{metric}_max", "graph", REAL))
    cols.append(Column("graph_degree_centrality_peak", "graph", REAL))
    return cols


def _meta_columns() -> list[Column]:
    cols = []
    for field in STRING_FIELDS:
        for part in ("dot_count", "length", "digit_count", "other_count", "uppercase_count"):
            cols.append(Column(f"meta_{field}_{part}", "meta", INT))
    return cols


def _time_columns() -> list[Column]:
    return [
        Column("time_delta_seconds", "time", REAL),
        Column("time_creation_has_z", "time", BOOL),
        Column("time_mod_has_z", "time", BOOL),
    ]


def _text_columns() -> list[Column]:
    return [
        Column("text_avg_word_length", "text", REAL),
        Column("text_max_token_length", "text", INT),
        Column("text_token_diversity", "text", REAL),
        Column("text_digit_count", "text", INT),
        Column("text_uppercase_count", "text", INT),
        Column("text_lowercase_count", "text", INT),
        Column("text_whitespace_count", "text", INT),
        Column("text_special_count", "text", INT),
        Column("text_non_ascii_count", "text", INT),
        Column("text_body_entropy", "text", REAL),
    ]


def _struct_columns() -> list[Column]:
    cols = []
    for slug, _raw, _left in STRUCT_KEYWORDS:
        cols.append(Column(f"struct_{slug}_count", "struct", INT))
        cols.append(Column(f"struct_{slug}_pos_min", "struct", INT))
        cols.append(Column(f"struct_{slug}_pos_max", "struct", INT))
        cols.append(Column(f"struct_{slug}_pos_avg", "struct", REAL))
    return cols


def _image_columns() -> list[Column]:
    return [
        Column("count_image_xsmall", "image", INT),
        Column("count_image_small", "image", INT),
        Column("count_image_med", "image", INT),
        Column("count_image_large", "image", INT),
        Column("count_image_xlarge", "image", INT),
        Column("count_image_total", "image", INT),
        Column("image_totalpx", "image", INT),
        Column("ratio_imagepx_size", "image", REAL),
        Column("pos_image_min", "image", INT),
        Column("pos_image_avg", "image", REAL),
        Column("pos_image_max", "image", INT),
        Column("image_mismatch", "image", BOOL),
    ]


def _flag_columns() -> list[Column]:
    return [Column(f"flag_{name.lower()}", "flags", BOOL) for name in FLAG_NAMES]


def _file_columns() -> list[Column]:
    return [
        Column("file_size", "file", INT),
        Column("pdf_version", "file", REAL),
        Column("count_page", "file", INT),
    ]


def _misc_columns() -> list[Column]:
    cols = [
        Column("whole_file_entropy", "misc", REAL),
        Column("compression_ratio", "misc", REAL),
        Column("embedded_file_count", "misc", INT),
        Column("object_tree_depth", "misc", INT),
        Column("is_encrypted", "misc", BOOL),
        Column("object_count", "misc", INT),
        Column("stream_count", "misc", INT),
    ]
    for field in STRING_FIELDS:
        cols.append(Column(f"entropy_{field}", "misc", REAL))
    cols.append(Column("entropy_body", "misc", REAL))
    for field in STRING_FIELDS:
        cols.append(Column(f"has_{field}", "misc", BOOL))
    cols.append(Column("has_creation_date", "misc", BOOL))
    cols.append(Column("has_mod_date", "misc", BOOL))
    for name in FLAG_NAMES:
        cols.append(Column(f"name_count_{name.lower()}", "misc", INT))
    cols += [
        Column("stream_entropy_mean", "misc", REAL),
        Column("stream_entropy_max", "misc", REAL),
        Column("high_entropy_stream_count", "misc", INT),
        Column("max_stream_length", "misc", INT),
        Column("eof_count", "misc", INT),
        Column("total_token_count", "misc", INT),
        Column("total_line_count", "misc", INT),
        Column("pages_with_text", "misc", INT),
        Column("text_char_count", "misc", INT),
    ]
    return cols


def _build_columns() -> tuple[Column, ...]:
    cols = (
        _graph_columns()
        + _meta_columns()
        + _time_columns()
        + _text_columns()
        + _struct_columns()
        + _image_columns()
        + _flag_columns()
        + _file_columns()
        + _misc_columns()
    )
    names = [c.name for c in cols]
    if len(names) != len(set(names)):
        raise AssertionError("duplicate column names in schema")
    if len(cols) != 170:
        raise AssertionError(f"schema v1 must have 170 columns, got {len(cols)}")
    return tuple(cols)


_SCHEMA_V1 = FeatureSchema(version=SCHEMA_VERSION, columns=_build_columns())


def schema() -> FeatureSchema:
    """The fixed v1 schema."""
    return _SCHEMA_V1


def group_slice(name: str) -> slice:
    """Index range a group occupies inside the column list."""
    indices = [i for i, c in enumerate(_SCHEMA_V1.columns) if c.group == name]
    if not indices:
        raise KeyError(name)
    return slice(indices[0], indices[-1] + 1)


def schema_lines() -> list[str]:
    """Machine-readable rows: name, group, kind (tab separated)."""
    return [f"{c.name}\t{c.group}\t{c.kind}" for c in _SCHEMA_V1.columns]
