/**
 * Stratified cross-validation of baseline classifiers over a feature CSV,
 * reported as a metrics table.
 */
import { Dataset, assertBinaryLabels } from "./csv.js";
import { stratifiedKFold } from "./kfold.js";
import { accuracy, cohenKappa, f1Score, precision, recall, rocAuc } from "./metrics.js";
import { GradientBoosting } from "./models/boosting.js";
import { RandomForest } from "./models/forest.js";
import { Mlp } from "./models/mlp.js";
import { SvmRbf } from "./models/svm.js";
import { Classifier, predictLabels } from "./models/types.js";
import { Rng } from "./rng.js";

export const MODEL_NAMES = ["random-forest", "gradient-boosting", "svm-rbf", "mlp"] as const;
export type ModelName = (typeof MODEL_NAMES)[number];

const SHORTHAND: Record<string, ModelName> = {
  rf: "random-forest",
  gb: "gradient-boosting",
  svm: "svm-rbf",
  mlp: "mlp",
};

export function normalizeModelName(raw: string): ModelName {
  const name = SHORTHAND[raw] ?? raw;
  if (!MODEL_NAMES.includes(name as ModelName)) {
    throw new Error(`unknown model: ${raw} (expected one of rf, gb, svm, mlp)`);
  }
  return name as ModelName;
}

export function createModel(name: ModelName, rng: Rng): Classifier {
  switch (name) {
    case "random-forest":
      return new RandomForest(rng);
    case "gradient-boosting":
      return new GradientBoosting();
    case "svm-rbf":
      return new SvmRbf(rng);
    case "mlp":
      return new Mlp(rng);
  }
}

export interface EvalReport {
  model: ModelName;
  accuracy: number;
  precision: number;
  recall: number;
  f1: number;
  aucRoc: number;
  cohenKappa: number;
  foldCount: number;
}

function rows(X: number[][], idx: number[]): number[][] {
  return idx.map((i) => X[i]);
}

function picks(y: number[], idx: number[]): number[] {
  return idx.map((i) => y[i]);
}

export function evaluate(dataset: Dataset, models: ModelName[], folds: number, seed: number): EvalReport[] {
  assertBinaryLabels(dataset);
  if (folds < 2) {
    throw new Error("folds must be >= 2");
  }
  const reports: EvalReport[] = [];
  for (const name of models) {
    // Same split for every model; model randomness forked separately.
    const splits = stratifiedKFold(dataset.labels, folds, new Rng(seed));
    const modelRng = new Rng(seed ^ 0x9e3779b9);
    const metrics = { accuracy: 0, precision: 0, recall: 0, f1: 0, aucRoc: 0, cohenKappa: 0 };
    for (const fold of splits) {
      const model = createModel(name, modelRng.fork());
      model.fit(rows(dataset.features, fold.trainIdx), picks(dataset.labels, fold.trainIdx));
      const testX = rows(dataset.features, fold.testIdx);
      const testY = picks(dataset.labels, fold.testIdx);
      const scores = model.scores(testX);
      const preds = predictLabels(model, testX);
      metrics.accuracy += accuracy(testY, preds);
      metrics.precision += precision(testY, preds);
      metrics.recall += recall(testY, preds);
      metrics.f1 += f1Score(testY, preds);
      metrics.aucRoc += rocAuc(testY, scores);
      metrics.cohenKappa += cohenKappa(testY, preds);
    }
    reports.push({
      model: name,
      accuracy: metrics.accuracy / folds,
      precision: metrics.precision / folds,
      recall: metrics.recall / folds,
      f1: metrics.f1 / folds,
      aucRoc: metrics.aucRoc / folds,
      cohenKappa: metrics.cohenKappa / folds,
      foldCount: folds,
    });
  }
  return reports;
}

export function formatReportTable(reports: EvalReport[]): string {
  const header = ["Model", "Accuracy(%)", "Precision", "Recall", "F1-Score", "AUC-ROC", "CK Score"];
  const rows = reports.map((r) => [
    r.model,
    (r.accuracy * 100).toFixed(2),
    r.precision.toFixed(3),
    r.recall.toFixed(3),
    r.f1.toFixed(3),
    r.aucRoc.toFixed(3),
    r.cohenKappa.toFixed(3),
  ]);
  const table = [header, ...rows];
  const widths = header.map((_, c) => Math.max(...table.map((row) => row[c].length)));
  return table
    .map((row) => row.map((cell, c) => cell.padEnd(widths[c])).join("  "))
    .join("\n");
}
