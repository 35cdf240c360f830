/**
 * evaluate --csv <file> --models rf,gb,svm,mlp --folds 5 --seed 42
 *
 * Reads a feature CSV produced by the extractor, cross-validates the
 * requested baseline models and prints a metrics table.
 */
import { parseArgs } from "node:util";

import { loadFeatureCsv } from "./csv.js";
import { ModelName, evaluate, formatReportTable, normalizeModelName } from "./evaluate.js";

export function main(argv: string[]): number {
  let parsed;
  try {
    parsed = parseArgs({
      args: argv,
      options: {
        csv: { type: "string" },
        models: { type: "string", default: "rf,gb,svm,mlp" },
        folds: { type: "string", default: "5" },
        seed: { type: "string", default: "42" },
      },
      allowPositionals: true,
    });
  } catch (error) {
    console.error(`error: ${(error as Error).message}`);
    return 1;
  }
  const { values, positionals } = parsed;
  if (positionals.length > 0 && positionals[0] !== "evaluate") {
    console.error(`error: unknown command ${positionals[0]}`);
    return 1;
  }
  if (!values.csv) {
    console.error("usage: evaluate --csv <file> [--models rf,gb,svm,mlp] [--folds 5] [--seed 42]");
    return 1;
  }
  const folds = Number(values.folds);
  const seed = Number(values.seed);
  if (!Number.isInteger(folds) || folds < 2) {
    console.error("error: --folds must be an integer >= 2");
    return 1;
  }
  let models: ModelName[];
  try {
    models = values.models!.split(",").map((m) => normalizeModelName(m.trim()));
  } catch (error) {
    console.error(`error: ${(error as Error).message}`);
    return 1;
  }
  try {
    const dataset = loadFeatureCsv(values.csv);
    const reports = evaluate(dataset, models, folds, seed);
    console.log(formatReportTable(reports));
    return 0;
  } catch (error) {
    console.error(`error: ${(error as Error).message}`);
    return 1;
  }
}

if (import.meta.url === `file://${process.argv[1]}`) {
  process.exit(main(process.argv.slice(2)));
}
