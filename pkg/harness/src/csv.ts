/**
 * Reader for the extractor's feature CSV.
 *
 * Layout contract: header `source_path,label,<feature columns...>`, one row
 * per file, paths double-quoted with `""` escapes, numeric cells unquoted.
 */
import { readFileSync } from "node:fs";

export interface Dataset {
  paths: string[];
  labels: number[];
  features: number[][];
  columns: string[];
}

/** Split one CSV line honoring double-quoted fields. */
export function splitCsvLine(line: string): string[] {
  const fields: string[] = [];
  let current = "";
  let inQuotes = false;
  for (let i = 0; i < line.length; i++) {
    const ch = line[i];
    if (inQuotes) {
      if (ch === '"') {
        if (line[i + 1] === '"') {
          current += '"';
          i++;
        } else {
          inQuotes = false;
        }
      } else {
        current += ch;
      }
    } else if (ch === '"') {
      inQuotes = true;
    } else if (ch === ",") {
      fields.push(current);
      current = "";
    } else {
      current += ch;
    }
  }
  fields.push(current);
  return fields;
}

export function parseFeatureCsv(text: string): Dataset {
  const lines = text.split(/\r?\n/).filter((line) => line.length > 0);
  if (lines.length < 1) {
    throw new Error("empty CSV");
  }
  const header = splitCsvLine(lines[0]);
  if (header[0] !== "source_path" || header[1] !== "label") {
    throw new Error(`unexpected header: ${header.slice(0, 2).join(",")}`);
  }
  const columns = header.slice(2);
  const paths: string[] = [];
  const labels: number[] = [];
  const features: number[][] = [];
  for (let r = 1; r < lines.length; r++) {
    const fields = splitCsvLine(lines[r]);
    if (fields.length !== header.length) {
      throw new Error(`row ${r}: ${fields.length} fields, expected ${header.length}`);
    }
    paths.push(fields[0]);
    const label = fields[1] === "" ? NaN : Number(fields[1]);
    labels.push(label);
    const row = new Array<number>(columns.length);
    for (let c = 0; c < columns.length; c++) {
      const value = Number(fields[c + 2]);
      if (!Number.isFinite(value)) {
        throw new Error(`row ${r}, column ${columns[c]}: non-numeric value ${fields[c + 2]}`);
      }
      row[c] = value;
    }
    features.push(row);
  }
  return { paths, labels, features, columns };
}

export function loadFeatureCsv(path: string): Dataset {
  return parseFeatureCsv(readFileSync(path, "utf-8"));
}

/** Ensure every row is labeled 0/1 and both classes occur. */
export function assertBinaryLabels(dataset: Dataset): void {
  const seen = new Set<number>();
  for (const label of dataset.labels) {
    if (label !== 0 && label !== 1) {
      throw new Error("dataset has unlabeled or non-binary rows; extract with --label 0|1");
    }
    seen.add(label);
  }
  if (seen.size < 2) {
    throw new Error("dataset contains a single class; need both labels 0 and 1");
  }
}
