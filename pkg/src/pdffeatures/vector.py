"""Final feature-vector assembly and CSV / JSON-Lines serialization."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

from .imagefeatures import ImageBlock
from .metafeatures import FieldComposition, TemporalBlock, TextSummary
from .schema import BOOL, INT, SCHEMA_VERSION, schema
from .structfeatures import FileLevelBlock, MiscBlock, PdfFlagVector, StructStat
from .wordgraph import GraphFeatureBlock


class BlockLengthMismatch(ValueError):
    """A block's value count disagrees with the schema (programming error)."""


@dataclass(frozen=True, slots=True)
class MiscExtras:
    """Tail of the misc group: per-field entropy, presence flags, raw name
    counts and stream/text scalars (35 values)."""

    field_entropies: tuple[float, ...] = (0.0,) * 6
    body_entropy: float = 0.0
    presence: tuple[int, ...] = (0,) * 8
    name_counts: tuple[int, ...] = (0,) * 11
    stream_entropy_mean: float = 0.0
    stream_entropy_max: float = 0.0
    high_entropy_stream_count: int = 0
    max_stream_length: int = 0
    eof_count: int = 0
    total_token_count: int = 0
    total_line_count: int = 0
    pages_with_text: int = 0
    text_char_count: int = 0

    def values(self) -> list[float]:
        return [
            *self.field_entropies,
            self.body_entropy,
            *self.presence,
            *self.name_counts,
            self.stream_entropy_mean,
            self.stream_entropy_max,
            self.high_entropy_stream_count,
            self.max_stream_length,
            self.eof_count,
            self.total_token_count,
            self.total_line_count,
            self.pages_with_text,
            self.text_char_count,
        ]


@dataclass(slots=True)
class FeatureVector:
    """One extracted row: 170 finite numerics aligned to the schema."""

    schema_version: str
    values: list[float]
    source_path: str = ""
    warnings_count: int = 0


def _check(name: str, got: int, expected: int) -> None:
    if got != expected:
        raise BlockLengthMismatch(f"{name} block produced {got} values, schema expects {expected}")


def assemble(
    graph: GraphFeatureBlock,
    meta: list[FieldComposition],
    time: TemporalBlock,
    text: TextSummary,
    struct: list[StructStat],
    image: ImageBlock,
    flags: PdfFlagVector,
    file_block: FileLevelBlock,
    misc: MiscBlock,
    extras: MiscExtras,
    source_path: str = "",
    warnings_count: int = 0,
) -> FeatureVector:
    """Concatenate all blocks in schema order into one finite vector.

    Booleans become 0/1; any non-finite intermediate is replaced by 0 and
    counted as a warning.
    """
    cols = schema().columns
    meta_values = [v for comp in meta for v in comp.values()]
    struct_values = [v for stat in struct for v in stat.values()]
    misc_values = misc.values() + extras.values()
    parts = [
        ("graph", graph.values(), 11),
        ("meta", meta_values, 30),
        ("time", time.values(), 3),
        ("text", text.values(), 10),
        ("struct", struct_values, 48),
        ("image", image.values(), 12),
        ("flags", flags.values(), 11),
        ("file", file_block.values(), 3),
        ("misc", misc_values, 42),
    ]
    raw: list[float] = []
    for name, values, expected in parts:
        _check(name, len(values), expected)
        raw.extend(values)
    _check("total", len(raw), len(cols))

    out: list[float] = []
    replaced = 0
    for column, value in zip(cols, raw):
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, float) and not math.isfinite(value):
            value = 0
            replaced += 1
        if column.kind in (INT, BOOL):
            out.append(int(value))
        else:
            out.append(float(value))
    return FeatureVector(
        schema_version=SCHEMA_VERSION,
        values=out,
        source_path=source_path,
        warnings_count=warnings_count + replaced,
    )


def zero_vector(source_path: str, warnings_count: int = 1) -> FeatureVector:
    """All-zero row for files whose extraction failed outright."""
    values = [0 if c.kind in (INT, BOOL) else 0.0 for c in schema().columns]
    return FeatureVector(SCHEMA_VERSION, values, source_path, warnings_count)


def format_value(value: float, kind: str) -> str:
    if kind in (INT, BOOL):
        return str(int(value))
    return format(float(value), ".12g")


def _quote_csv(text: str) -> str:
    return '"' + text.replace('"', '""') + '"'


def csv_header() -> str:
    return ",".join(["source_path", "label"] + schema().names())


def csv_row(vector: FeatureVector, label: int | None = None) -> str:
    cols = schema().columns
    rendered = [format_value(v, c.kind) for v, c in zip(vector.values, cols)]
    label_text = "" if label is None else str(int(label))
    return ",".join([_quote_csv(vector.source_path), label_text] + rendered)


def write_csv(vectors: list[FeatureVector], destination: str | Path, label: int | None = None) -> None:
    """CSV with header ``source_path,label,<170 column names>``.

    Reals render with up to 12 significant digits, integers without a
    decimal point; paths are always quoted.
    """
    _check_versions(vectors)
    lines = [csv_header()]
    lines += [csv_row(v, label) for v in vectors]
    Path(destination).write_text("\n".join(lines) + "\n", encoding="utf-8")


def write_jsonl(vectors: list[FeatureVector], destination: str | Path, label: int | None = None) -> None:
    """One JSON object per line; column names as keys plus source_path/label."""
    _check_versions(vectors)
    cols = schema().columns
    out = []
    for vector in vectors:
        record: dict = {"source_path": vector.source_path, "label": label}
        for column, value in zip(cols, vector.values):
            record[column.name] = int(value) if column.kind in (INT, BOOL) else float(value)
        out.append(json.dumps(record, separators=(",", ":")))
    Path(destination).write_text("\n".join(out) + ("\n" if out else ""), encoding="utf-8")


def _check_versions(vectors: list[FeatureVector]) -> None:
    for vector in vectors:
        if vector.schema_version != SCHEMA_VERSION:
            raise ValueError(f"schema version mismatch: {vector.schema_version} != {SCHEMA_VERSION}")
        if len(vector.values) != len(schema()):
            raise BlockLengthMismatch(f"vector has {len(vector.values)} values, schema has {len(schema())}")
