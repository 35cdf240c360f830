/**
 * Binary classification metrics. Positive class is 1 throughout;
 * zero-division cases return 0 so reports stay finite.
 */

export interface ConfusionCounts {
  tp: number;
  fp: number;
  tn: number;
  fn: number;
}

export function confusion(yTrue: number[], yPred: number[]): ConfusionCounts {
  if (yTrue.length !== yPred.length) {
    throw new Error("label/prediction length mismatch");
  }
  let tp = 0,
    fp = 0,
    tn = 0,
    fn = 0;
  for (let i = 0; i < yTrue.length; i++) {
    if (yTrue[i] === 1) {
      if (yPred[i] === 1) tp++;
      else fn++;
    } else {
      if (yPred[i] === 1) fp++;
      else tn++;
    }
  }
  return { tp, fp, tn, fn };
}

export function accuracy(yTrue: number[], yPred: number[]): number {
  const { tp, tn } = confusion(yTrue, yPred);
  return yTrue.length === 0 ? 0 : (tp + tn) / yTrue.length;
}

export function precision(yTrue: number[], yPred: number[]): number {
  const { tp, fp } = confusion(yTrue, yPred);
  return tp + fp === 0 ? 0 : tp / (tp + fp);
}

export function recall(yTrue: number[], yPred: number[]): number {
  const { tp, fn } = confusion(yTrue, yPred);
  return tp + fn === 0 ? 0 : tp / (tp + fn);
}

export function f1Score(yTrue: number[], yPred: number[]): number {
  const p = precision(yTrue, yPred);
  const r = recall(yTrue, yPred);
  return p + r === 0 ? 0 : (2 * p * r) / (p + r);
}

/**
 * Rank-based ROC AUC (Mann-Whitney), with midranks for tied scores.
 * Requires both classes present.
 */
export function rocAuc(yTrue: number[], scores: number[]): number {
  const n = yTrue.length;
  const order = Array.from({ length: n }, (_, i) => i).sort((a, b) => scores[a] - scores[b]);
  const ranks = new Array<number>(n);
  let i = 0;
  while (i < n) {
    let j = i;
    while (j + 1 < n && scores[order[j + 1]] === scores[order[i]]) j++;
    const midrank = (i + j) / 2 + 1;
    for (let k = i; k <= j; k++) ranks[order[k]] = midrank;
    i = j + 1;
  }
  let nPos = 0,
    nNeg = 0,
    rankSum = 0;
  for (let k = 0; k < n; k++) {
    if (yTrue[k] === 1) {
      nPos++;
      rankSum += ranks[k];
    } else {
      nNeg++;
    }
  }
  if (nPos === 0 || nNeg === 0) {
    throw new Error("ROC AUC undefined with a single class");
  }
  return (rankSum - (nPos * (nPos + 1)) / 2) / (nPos * nNeg);
}

/** Cohen's kappa: agreement with chance correction, in [-1, 1]. */
export function cohenKappa(yTrue: number[], yPred: number[]): number {
  const n = yTrue.length;
  if (n === 0) return 0;
  const { tp, fp, tn, fn } = confusion(yTrue, yPred);
  const po = (tp + tn) / n;
  const pYes = ((tp + fn) / n) * ((tp + fp) / n);
  const pNo = ((fp + tn) / n) * ((fn + tn) / n);
  const pe = pYes + pNo;
  if (pe === 1) return 0;
  return (po - pe) / (1 - pe);
}
