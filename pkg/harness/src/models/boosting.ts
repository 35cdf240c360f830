/** Gradient-boosted trees on logistic loss with Newton leaf values. */
import { GradientTree } from "./tree.js";
import { Classifier, sigmoid } from "./types.js";

export interface BoostingOptions {
  stages: number;
  learningRate: number;
  maxDepth: number;
  minLeaf: number;
}

export const DEFAULT_BOOSTING: BoostingOptions = {
  stages: 100,
  learningRate: 0.1,
  maxDepth: 3,
  minLeaf: 2,
};

export class GradientBoosting implements Classifier {
  private stages: GradientTree[] = [];
  private baseScore = 0;

  constructor(private readonly options: BoostingOptions = DEFAULT_BOOSTING) {}

  fit(X: number[][], y: number[]): void {
    const n = X.length;
    const positives = y.reduce((acc, v) => acc + v, 0);
    const prior = Math.min(Math.max(positives / n, 1e-6), 1 - 1e-6);
    this.baseScore = Math.log(prior / (1 - prior));
    const raw = new Array<number>(n).fill(this.baseScore);
    this.stages = [];
    for (let m = 0; m < this.options.stages; m++) {
      const gradient = new Array<number>(n);
      const hessian = new Array<number>(n);
      for (let i = 0; i < n; i++) {
        const p = sigmoid(raw[i]);
        gradient[i] = y[i] - p;
        hessian[i] = p * (1 - p);
      }
      const tree = new GradientTree(this.options.maxDepth, this.options.minLeaf);
      tree.fit(X, gradient, hessian);
      for (let i = 0; i < n; i++) {
        raw[i] += this.options.learningRate * tree.predictOne(X[i]);
      }
      this.stages.push(tree);
    }
  }

  scores(X: number[][]): number[] {
    return X.map((row) => {
      let raw = this.baseScore;
      for (const tree of this.stages) raw += this.options.learningRate * tree.predictOne(row);
      return sigmoid(raw);
    });
  }
}
