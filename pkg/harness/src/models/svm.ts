/**
 * RBF-kernel SVM trained with kernelized Pegasos (stochastic subgradient
 * on the hinge loss). The full train-train kernel matrix is precomputed,
 * which is comfortable at desk scale.
 */
import { Rng } from "../rng.js";
import { Classifier, Scaler, sigmoid } from "./types.js";

export interface SvmOptions {
  c: number;
  epochs: number; // iterations = epochs * n
}

export const DEFAULT_SVM: SvmOptions = { c: 10, epochs: 30 };

export class SvmRbf implements Classifier {
  private scaler = new Scaler();
  private support: number[][] = [];
  private coeffs: number[] = [];
  private gamma = 0;
  private scale = 1;

  constructor(
    private readonly rng: Rng,
    private readonly options: SvmOptions = DEFAULT_SVM,
  ) {}

  fit(X: number[][], y: number[]): void {
    this.scaler.fit(X);
    const Z = this.scaler.transform(X);
    const n = Z.length;
    const d = Z[0].length;
    const signs = y.map((v) => (v === 1 ? 1 : -1));
    this.gamma = 1 / d;

    const kernel = new Float64Array(n * n);
    for (let i = 0; i < n; i++) {
      kernel[i * n + i] = 1;
      for (let j = i + 1; j < n; j++) {
        const k = this.rbf(Z[i], Z[j]);
        kernel[i * n + j] = k;
        kernel[j * n + i] = k;
      }
    }

    const lambda = 1 / (this.options.c * n);
    const alpha = new Array<number>(n).fill(0);
    const iterations = this.options.epochs * n;
    for (let t = 1; t <= iterations; t++) {
      const i = this.rng.int(n);
      let margin = 0;
      for (let j = 0; j < n; j++) {
        if (alpha[j] !== 0) margin += alpha[j] * signs[j] * kernel[i * n + j];
      }
      margin *= signs[i] / (lambda * t);
      if (margin < 1) alpha[i] += 1;
    }
    this.scale = 1 / (lambda * iterations);
    this.support = [];
    this.coeffs = [];
    for (let j = 0; j < n; j++) {
      if (alpha[j] !== 0) {
        this.support.push(Z[j]);
        this.coeffs.push(alpha[j] * signs[j]);
      }
    }
  }

  private rbf(a: number[], b: number[]): number {
    let dist = 0;
    for (let j = 0; j < a.length; j++) {
      const delta = a[j] - b[j];
      dist += delta * delta;
    }
    return Math.exp(-this.gamma * dist);
  }

  decision(row: number[]): number {
    let total = 0;
    for (let j = 0; j < this.support.length; j++) {
      total += this.coeffs[j] * this.rbf(this.support[j], row);
    }
    return this.scale * total;
  }

  scores(X: number[][]): number[] {
    return this.scaler.transform(X).map((row) => sigmoid(2 * this.decision(row)));
  }
}
