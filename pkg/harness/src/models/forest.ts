/** Random forest: bagged gini trees with per-split feature sampling. */
import { Rng } from "../rng.js";
import { ClassificationTree } from "./tree.js";
import { Classifier } from "./types.js";

export interface ForestOptions {
  trees: number;
  maxDepth: number;
  minLeaf: number;
}

export const DEFAULT_FOREST: ForestOptions = { trees: 100, maxDepth: 16, minLeaf: 1 };

export class RandomForest implements Classifier {
  private members: ClassificationTree[] = [];

  constructor(
    private readonly rng: Rng,
    private readonly options: ForestOptions = DEFAULT_FOREST,
  ) {}

  fit(X: number[][], y: number[]): void {
    const n = X.length;
    const mtry = Math.max(1, Math.round(Math.sqrt(X[0].length)));
    this.members = [];
    for (let b = 0; b < this.options.trees; b++) {
      const sample = Array.from({ length: n }, () => this.rng.int(n));
      const tree = new ClassificationTree(
        { maxDepth: this.options.maxDepth, minLeaf: this.options.minLeaf, mtry },
        this.rng.fork(),
      );
      tree.fit(X, y, sample);
      this.members.push(tree);
    }
  }

  scores(X: number[][]): number[] {
    return X.map((row) => {
      let total = 0;
      for (const tree of this.members) total += tree.predictOne(row);
      return total / this.members.length;
    });
  }
}
