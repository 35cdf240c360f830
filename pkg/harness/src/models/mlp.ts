/** Feedforward net: one tanh hidden layer, sigmoid output, Adam, full batch. */
import { Rng } from "../rng.js";
import { Classifier, Scaler, sigmoid } from "./types.js";

export interface MlpOptions {
  hidden: number;
  epochs: number;
  learningRate: number;
}

export const DEFAULT_MLP: MlpOptions = { hidden: 24, epochs: 120, learningRate: 0.01 };

class Adam {
  private m: Float64Array;
  private v: Float64Array;
  private t = 0;

  constructor(size: number, private readonly lr: number) {
    this.m = new Float64Array(size);
    this.v = new Float64Array(size);
  }

  step(params: Float64Array, grads: Float64Array): void {
    this.t++;
    const b1 = 0.9,
      b2 = 0.999,
      eps = 1e-8;
    const correction1 = 1 - Math.pow(b1, this.t);
    const correction2 = 1 - Math.pow(b2, this.t);
    for (let i = 0; i < params.length; i++) {
      this.m[i] = b1 * this.m[i] + (1 - b1) * grads[i];
      this.v[i] = b2 * this.v[i] + (1 - b2) * grads[i] * grads[i];
      const mHat = this.m[i] / correction1;
      const vHat = this.v[i] / correction2;
      params[i] -= (this.lr * mHat) / (Math.sqrt(vHat) + eps);
    }
  }
}

export class Mlp implements Classifier {
  private scaler = new Scaler();
  private w1 = new Float64Array(0); // hidden x d
  private b1 = new Float64Array(0);
  private w2 = new Float64Array(0); // hidden
  private b2 = 0;
  private d = 0;

  constructor(
    private readonly rng: Rng,
    private readonly options: MlpOptions = DEFAULT_MLP,
  ) {}

  fit(X: number[][], y: number[]): void {
    this.scaler.fit(X);
    const Z = this.scaler.transform(X);
    const n = Z.length;
    this.d = Z[0].length;
    const h = this.options.hidden;

    this.w1 = new Float64Array(h * this.d);
    this.b1 = new Float64Array(h);
    this.w2 = new Float64Array(h);
    const scale1 = 1 / Math.sqrt(this.d);
    for (let i = 0; i < this.w1.length; i++) this.w1[i] = this.rng.gauss() * scale1;
    const scale2 = 1 / Math.sqrt(h);
    for (let i = 0; i < h; i++) this.w2[i] = this.rng.gauss() * scale2;
    this.b2 = 0;

    const size = this.w1.length + h + h + 1;
    const params = new Float64Array(size);
    const grads = new Float64Array(size);
    const optimizer = new Adam(size, this.options.learningRate);
    this.pack(params);

    const hiddenOut = new Float64Array(n * h);
    for (let epoch = 0; epoch < this.options.epochs; epoch++) {
      this.unpack(params);
      grads.fill(0);
      for (let i = 0; i < n; i++) {
        const row = Z[i];
        // forward
        for (let u = 0; u < h; u++) {
          let acc = this.b1[u];
          const base = u * this.d;
          for (let j = 0; j < this.d; j++) acc += this.w1[base + j] * row[j];
          hiddenOut[i * h + u] = Math.tanh(acc);
        }
        let out = this.b2;
        for (let u = 0; u < h; u++) out += this.w2[u] * hiddenOut[i * h + u];
        const p = sigmoid(out);
        // backward (cross-entropy): dL/dout = p - y
        const dOut = (p - y[i]) / n;
        const w2Off = this.w1.length;
        const b1Off = w2Off + h;
        for (let u = 0; u < h; u++) {
          const a = hiddenOut[i * h + u];
          grads[w2Off + u] += dOut * a;
          const dHidden = dOut * this.w2[u] * (1 - a * a);
          grads[b1Off + u] += dHidden;
          const base = u * this.d;
          for (let j = 0; j < this.d; j++) grads[base + j] += dHidden * row[j];
        }
        grads[size - 1] += dOut;
      }
      optimizer.step(params, grads);
    }
    this.unpack(params);
  }

  private pack(params: Float64Array): void {
    params.set(this.w1, 0);
    params.set(this.w2, this.w1.length);
    params.set(this.b1, this.w1.length + this.w2.length);
    params[params.length - 1] = this.b2;
  }

  private unpack(params: Float64Array): void {
    this.w1 = params.slice(0, this.w1.length);
    this.w2 = params.slice(this.w1.length, this.w1.length + this.w2.length);
    this.b1 = params.slice(this.w1.length + this.w2.length, params.length - 1);
    this.b2 = params[params.length - 1];
  }

  scores(X: number[][]): number[] {
    const h = this.options.hidden;
    return this.scaler.transform(X).map((row) => {
      let out = this.b2;
      for (let u = 0; u < h; u++) {
        let acc = this.b1[u];
        const base = u * this.d;
        for (let j = 0; j < this.d; j++) acc += this.w1[base + j] * row[j];
        out += this.w2[u] * Math.tanh(acc);
      }
      return sigmoid(out);
    });
  }
}
