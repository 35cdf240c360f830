"""Batch command-line front end.

Subcommands: ``extract`` (directory walk -> CSV/JSONL), ``gen-corpus``
(seeded synthetic PDFs) and ``schema`` (column reference dump). Extraction
parallelizes across files; rows are written sorted by path so the output is
identical for any worker count.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .corpus import generate_corpus
from .metafeatures import extract_metadata
from .parser import parse_document
from .pipeline import extract_document
from .schema import SCHEMA_VERSION, schema, schema_lines
from .vector import FeatureVector, write_csv, write_jsonl, zero_vector


@dataclass(slots=True)
class RunConfig:
    inputs: list[str]
    output: str
    recursive: bool = False
    format: str = "csv"
    window: int = 2
    worker_count: int = 1
    label: int | None = None
    fail_fast: bool = False
    dump_meta: str | None = None


@dataclass(slots=True)
class RunReport:
    files_seen: int = 0
    files_extracted: int = 0
    files_failed: int = 0
    total_seconds: float = 0.0
    mean_seconds_per_file: float = 0.0


class UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):  # exit 1 on usage problems, not argparse's 2
        self.print_usage(sys.stderr)
        raise SystemExit(_fail(message))


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 1


def collect_pdf_paths(inputs: list[str], recursive: bool) -> list[Path]:
    """Every *.pdf (case-insensitive) under the inputs, sorted and unique."""
    found: set[Path] = set()
    for raw in inputs:
        path = Path(raw)
        if not path.exists():
            raise UsageError(f"input path does not exist: {path}")
        if path.is_file():
            found.add(path)
        else:
            pattern = "**/*" if recursive else "*"
            for candidate in path.glob(pattern):
                if candidate.is_file() and candidate.suffix.lower() == ".pdf":
                    found.add(candidate)
    return sorted(found)


def _extract_worker(task: tuple[str, int, bool]) -> tuple[str, FeatureVector | None, dict | None, str | None]:
    """Per-file unit of work; never raises, returns an error message instead."""
    path, window, want_meta = task
    try:
        data = Path(path).read_bytes()
        doc = parse_document(data)
        vector = extract_document(doc, window=window, source_path=path)
        meta = None
        if want_meta:
            meta = dataclasses.asdict(extract_metadata(doc))
        return path, vector, meta, None
    except Exception as exc:  # any per-file failure becomes a zero row
        return path, None, None, f"{type(exc).__name__}: {exc}"


def run_extract(config: RunConfig) -> tuple[RunReport, int]:
    started = time.perf_counter()
    paths = collect_pdf_paths(config.inputs, config.recursive)
    report = RunReport(files_seen=len(paths))
    if not paths:
        print("error: no PDF files found under the given inputs", file=sys.stderr)
        return report, 2

    want_meta = config.dump_meta is not None
    tasks = [(str(p), config.window, want_meta) for p in paths]
    results = []
    if config.worker_count <= 1:
        for task in tasks:
            result = _extract_worker(task)
            results.append(result)
            if config.fail_fast and result[3] is not None:
                print(f"error: {result[0]}: {result[3]}", file=sys.stderr)
                return report, 2
    else:
        with ProcessPoolExecutor(max_workers=config.worker_count) as pool:
            results = list(pool.map(_extract_worker, tasks))
        if config.fail_fast:
            for path, _vector, _meta, error in results:
                if error is not None:
                    print(f"error: {path}: {error}", file=sys.stderr)
                    return report, 2

    results.sort(key=lambda item: item[0])
    vectors: list[FeatureVector] = []
    meta_rows: list[dict] = []
    for path, vector, meta, error in results:
        if error is None and vector is not None:
            report.files_extracted += 1
            vectors.append(vector)
            if want_meta:
                meta_rows.append({"source_path": path, **(meta or {})})
        else:
            report.files_failed += 1
            vectors.append(zero_vector(path))
            if want_meta:
                meta_rows.append({"source_path": path})
            print(f"warning: {path}: {error}", file=sys.stderr)

    try:
        if config.format == "csv":
            write_csv(vectors, config.output, label=config.label)
        else:
            write_jsonl(vectors, config.output, label=config.label)
        if want_meta:
            lines = [json.dumps(row, separators=(",", ":")) for row in meta_rows]
            Path(config.dump_meta).write_text("\n".join(lines) + "\n", encoding="utf-8")
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return report, 2

    report.total_seconds = time.perf_counter() - started
    report.mean_seconds_per_file = report.total_seconds / report.files_seen
    print(
        f"extracted {report.files_extracted}/{report.files_seen} files "
        f"({report.files_failed} failed) in {report.total_seconds:.2f}s "
        f"({report.mean_seconds_per_file:.4f}s/file)",
        file=sys.stderr,
    )
    return report, 0 if report.files_extracted >= 1 else 2


def build_arg_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="pdffeatures", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    extract = sub.add_parser("extract", help="extract feature vectors from PDFs")
    extract.add_argument("--in", dest="inputs", nargs="+", required=True, metavar="PATH")
    extract.add_argument("--recursive", action="store_true")
    extract.add_argument("--out", required=True)
    extract.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    extract.add_argument("--window", type=int, choices=(2, 3), default=2)
    extract.add_argument("--workers", type=int, default=1)
    extract.add_argument("--label", type=int, choices=(0, 1), default=None)
    extract.add_argument("--fail-fast", action="store_true")
    extract.add_argument("--dump-meta", default=None, metavar="FILE")

    gen = sub.add_parser("gen-corpus", help="generate a seeded synthetic corpus")
    gen.add_argument("--kind", choices=("benign", "malicious-like"), required=True)
    gen.add_argument("--count", type=int, required=True)
    gen.add_argument("--seed", type=int, required=True)
    gen.add_argument("--out", required=True, metavar="DIR")

    schema_cmd = sub.add_parser("schema", help="print the feature schema")
    schema_cmd.add_argument("--print", dest="do_print", action="store_true")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_arg_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1

    if args.command == "extract":
        if args.workers < 1:
            return _fail("--workers must be >= 1")
        config = RunConfig(
            inputs=args.inputs,
            output=args.out,
            recursive=args.recursive,
            format=args.format,
            window=args.window,
            worker_count=args.workers,
            label=args.label,
            fail_fast=args.fail_fast,
            dump_meta=args.dump_meta,
        )
        try:
            _report, code = run_extract(config)
        except UsageError as exc:
            return _fail(str(exc))
        return code

    if args.command == "gen-corpus":
        if args.count < 1:
            return _fail("--count must be >= 1")
        try:
            paths = generate_corpus(args.kind, args.count, args.seed, args.out)
        except OSError as exc:
            print(f"error: cannot write corpus: {exc}", file=sys.stderr)
            return 2
        print(f"wrote {len(paths)} files to {args.out}", file=sys.stderr)
        return 0

    if args.command == "schema":
        if args.do_print:
            for line in schema_lines():
                print(line)
        else:
            print(f"schema v{SCHEMA_VERSION}: {len(schema())} columns")
        return 0

    return _fail(f"unknown command {args.command}")


if __name__ == "__main__":
    sys.exit(main())
