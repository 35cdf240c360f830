/** Common classifier surface: fit once, then score rows in [0, 1]. */

export interface Classifier {
  fit(X: number[][], y: number[]): void;
  /** Class-1 scores in [0, 1]; larger means more likely malicious. */
  scores(X: number[][]): number[];
}

export function predictLabels(model: Classifier, X: number[][]): number[] {
  return model.scores(X).map((s) => (s >= 0.5 ? 1 : 0));
}

/** Column-wise standardization fitted on training data. */
export class Scaler {
  private means: number[] = [];
  private stds: number[] = [];

  fit(X: number[][]): void {
    const n = X.length;
    const d = X[0]?.length ?? 0;
    this.means = new Array(d).fill(0);
    this.stds = new Array(d).fill(0);
    for (const row of X) {
      for (let j = 0; j < d; j++) this.means[j] += row[j];
    }
    for (let j = 0; j < d; j++) this.means[j] /= n;
    for (const row of X) {
      for (let j = 0; j < d; j++) {
        const delta = row[j] - this.means[j];
        this.stds[j] += delta * delta;
      }
    }
    for (let j = 0; j < d; j++) {
      this.stds[j] = Math.sqrt(this.stds[j] / n) || 1;
    }
  }

  transform(X: number[][]): number[][] {
    return X.map((row) => row.map((v, j) => (v - this.means[j]) / this.stds[j]));
  }
}

export function sigmoid(z: number): number {
  return z >= 0 ? 1 / (1 + Math.exp(-z)) : Math.exp(z) / (1 + Math.exp(z));
}
