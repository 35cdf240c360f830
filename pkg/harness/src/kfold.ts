/** Stratified k-fold splitting with a seeded shuffle. */
import { Rng } from "./rng.js";

export interface Fold {
  trainIdx: number[];
  testIdx: number[];
}

export function stratifiedKFold(labels: number[], k: number, rng: Rng): Fold[] {
  if (k < 2) {
    throw new Error("folds must be >= 2");
  }
  const byClass = new Map<number, number[]>();
  labels.forEach((label, i) => {
    const bucket = byClass.get(label) ?? [];
    bucket.push(i);
    byClass.set(label, bucket);
  });
  for (const [label, indices] of byClass) {
    if (indices.length < k) {
      throw new Error(`class ${label} has ${indices.length} samples, fewer than ${k} folds`);
    }
  }
  const assignments = new Array<number>(labels.length);
  for (const label of [...byClass.keys()].sort((a, b) => a - b)) {
    const indices = rng.shuffle([...byClass.get(label)!]);
    indices.forEach((sample, position) => {
      assignments[sample] = position % k;
    });
  }
  const folds: Fold[] = [];
  for (let f = 0; f < k; f++) {
    const trainIdx: number[] = [];
    const testIdx: number[] = [];
    assignments.forEach((fold, i) => (fold === f ? testIdx : trainIdx).push(i));
    folds.push({ trainIdx, testIdx });
  }
  return folds;
}
