/**
 * CART trees: a gini classification tree (random forests) and a
 * variance-splitting regression tree with Newton leaf values (boosting).
 */
import { Rng } from "../rng.js";

interface TreeNode {
  feature: number;
  threshold: number;
  left: TreeNode | null;
  right: TreeNode | null;
  value: number; // leaf payload: P(class 1) or regression output
}

function leaf(value: number): TreeNode {
  return { feature: -1, threshold: 0, left: null, right: null, value };
}

function traverse(node: TreeNode, row: number[]): number {
  while (node.left !== null && node.right !== null) {
    node = row[node.feature] <= node.threshold ? node.left : node.right;
  }
  return node.value;
}

interface Split {
  feature: number;
  threshold: number;
  leftIdx: number[];
  rightIdx: number[];
}

function candidateFeatures(d: number, mtry: number, rng: Rng | null): number[] {
  if (rng === null || mtry >= d) {
    return Array.from({ length: d }, (_, j) => j);
  }
  const all = Array.from({ length: d }, (_, j) => j);
  rng.shuffle(all);
  return all.slice(0, mtry).sort((a, b) => a - b);
}

/** Best gini split over the candidate features, or null if pure/unsplittable. */
function bestGiniSplit(
  X: number[][],
  y: number[],
  indices: number[],
  features: number[],
  minLeaf: number,
): Split | null {
  const n = indices.length;
  let totalPos = 0;
  for (const i of indices) totalPos += y[i];
  if (totalPos === 0 || totalPos === n) return null;

  let best: Split | null = null;
  let bestImpurity = Infinity;
  for (const feature of features) {
    const order = [...indices].sort((a, b) => X[a][feature] - X[b][feature]);
    let leftPos = 0;
    for (let k = 0; k < n - 1; k++) {
      leftPos += y[order[k]];
      const leftCount = k + 1;
      if (X[order[k]][feature] === X[order[k + 1]][feature]) continue;
      const rightCount = n - leftCount;
      if (leftCount < minLeaf || rightCount < minLeaf) continue;
      const rightPos = totalPos - leftPos;
      const giniL = 1 - (leftPos / leftCount) ** 2 - ((leftCount - leftPos) / leftCount) ** 2;
      const giniR = 1 - (rightPos / rightCount) ** 2 - ((rightCount - rightPos) / rightCount) ** 2;
      const impurity = (leftCount * giniL + rightCount * giniR) / n;
      if (impurity < bestImpurity - 1e-12) {
        bestImpurity = impurity;
        const threshold = (X[order[k]][feature] + X[order[k + 1]][feature]) / 2;
        best = {
          feature,
          threshold,
          leftIdx: order.slice(0, leftCount),
          rightIdx: order.slice(leftCount),
        };
      }
    }
  }
  return best;
}

export interface ClassificationTreeOptions {
  maxDepth: number;
  minLeaf: number;
  mtry: number; // features sampled per split; 0 = all
}

export class ClassificationTree {
  private root: TreeNode = leaf(0.5);

  constructor(
    private readonly options: ClassificationTreeOptions,
    private readonly rng: Rng | null = null,
  ) {}

  fit(X: number[][], y: number[], indices?: number[]): void {
    const idx = indices ?? Array.from({ length: X.length }, (_, i) => i);
    this.root = this.grow(X, y, idx, 0);
  }

  private grow(X: number[][], y: number[], indices: number[], depth: number): TreeNode {
    const n = indices.length;
    let positives = 0;
    for (const i of indices) positives += y[i];
    if (depth >= this.options.maxDepth || n < 2 * this.options.minLeaf || positives === 0 || positives === n) {
      return leaf(positives / n);
    }
    const d = X[0].length;
    const mtry = this.options.mtry > 0 ? this.options.mtry : d;
    const features = candidateFeatures(d, mtry, this.rng);
    const split = bestGiniSplit(X, y, indices, features, this.options.minLeaf);
    if (split === null) {
      return leaf(positives / n);
    }
    const node = leaf(positives / n);
    node.feature = split.feature;
    node.threshold = split.threshold;
    node.left = this.grow(X, y, split.leftIdx, depth + 1);
    node.right = this.grow(X, y, split.rightIdx, depth + 1);
    return node;
  }

  predictOne(row: number[]): number {
    return traverse(this.root, row);
  }
}

/** Regression tree on gradient/hessian pairs (one boosting stage). */
export class GradientTree {
  private root: TreeNode = leaf(0);

  constructor(
    private readonly maxDepth: number,
    private readonly minLeaf: number,
  ) {}

  fit(X: number[][], gradient: number[], hessian: number[]): void {
    const idx = Array.from({ length: X.length }, (_, i) => i);
    this.root = this.grow(X, gradient, hessian, idx, 0);
  }

  private leafValue(gradient: number[], hessian: number[], indices: number[]): number {
    let g = 0,
      h = 0;
    for (const i of indices) {
      g += gradient[i];
      h += hessian[i];
    }
    return g / (h + 1e-9);
  }

  private grow(
    X: number[][],
    gradient: number[],
    hessian: number[],
    indices: number[],
    depth: number,
  ): TreeNode {
    if (depth >= this.maxDepth || indices.length < 2 * this.minLeaf) {
      return leaf(this.leafValue(gradient, hessian, indices));
    }
    const split = this.bestVarianceSplit(X, gradient, indices);
    if (split === null) {
      return leaf(this.leafValue(gradient, hessian, indices));
    }
    const node = leaf(0);
    node.feature = split.feature;
    node.threshold = split.threshold;
    node.left = this.grow(X, gradient, hessian, split.leftIdx, depth + 1);
    node.right = this.grow(X, gradient, hessian, split.rightIdx, depth + 1);
    return node;
  }

  private bestVarianceSplit(X: number[][], target: number[], indices: number[]): Split | null {
    const n = indices.length;
    let total = 0;
    for (const i of indices) total += target[i];
    let best: Split | null = null;
    let bestScore = -Infinity;
    const d = X[0].length;
    for (let feature = 0; feature < d; feature++) {
      const order = [...indices].sort((a, b) => X[a][feature] - X[b][feature]);
      let leftSum = 0;
      for (let k = 0; k < n - 1; k++) {
        leftSum += target[order[k]];
        if (X[order[k]][feature] === X[order[k + 1]][feature]) continue;
        const leftCount = k + 1;
        const rightCount = n - leftCount;
        if (leftCount < this.minLeaf || rightCount < this.minLeaf) continue;
        const rightSum = total - leftSum;
        // SSE reduction is maximized by this proxy score.
        const score = (leftSum * leftSum) / leftCount + (rightSum * rightSum) / rightCount;
        if (score > bestScore + 1e-12) {
          bestScore = score;
          best = {
            feature,
            threshold: (X[order[k]][feature] + X[order[k + 1]][feature]) / 2,
            leftIdx: order.slice(0, leftCount),
            rightIdx: order.slice(leftCount),
          };
        }
      }
    }
    return best;
  }

  predictOne(row: number[]): number {
    return traverse(this.root, row);
  }
}
