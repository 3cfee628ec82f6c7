/**
 * A deterministic three-layer contextual encoder.
 *
 * Stands in for a pretrained bidirectional language model when no such
 * checkpoint is available: layer 0 is a non-contextual token representation
 * (a concatenation of a whole-word hash embedding and averaged character
 * trigram hash embeddings), and each higher layer blends the previous layer
 * with a bidirectional exponential-moving-average context summary plus a
 * per-occurrence state vector. Everything is a pure function of the model
 * seed and the input sentence, so identical runs produce identical bytes.
 */

import { readFileSync } from "node:fs";
import { hashedVector } from "./hash";
import { normalizeToken } from "./conllu";

export interface ModelSpec {
  name: string;
  dim: number;
  layers: number;
  seed: number;
  max_sentence_length: number;
  /** per-layer blend weight of the context summary (layer 0 must be 0) */
  context_mix: number[];
  /** per-layer scale of the occurrence-specific state vector */
  state_noise: number[];
  /** decay of the forward/backward context averages */
  ema_decay: number;
}

export function loadModel(path: string): ModelSpec {
  let raw: string;
  try {
    raw = readFileSync(path, "utf-8");
  } catch (err) {
    throw new Error(`cannot read model file ${path}: ${(err as Error).message}`);
  }
  const spec = JSON.parse(raw) as ModelSpec;
  for (const field of ["name", "dim", "layers", "seed", "max_sentence_length",
                       "context_mix", "state_noise", "ema_decay"] as const) {
    if (spec[field] === undefined) {
      throw new Error(`model file ${path} is missing field ${field}`);
    }
  }
  if (spec.dim % 2 !== 0 || spec.dim <= 0) {
    throw new Error("model dim must be a positive even number");
  }
  if (spec.context_mix.length !== spec.layers
      || spec.state_noise.length !== spec.layers) {
    throw new Error("context_mix and state_noise must have one entry per layer");
  }
  if (spec.context_mix[0] !== 0) {
    throw new Error("layer 0 is the non-contextual representation; its mix must be 0");
  }
  return spec;
}

function charTrigrams(token: string): string[] {
  const wrapped = `<${token}>`;
  if (wrapped.length < 3) {
    return [wrapped];
  }
  const grams: string[] = [];
  for (let i = 0; i + 3 <= wrapped.length; i++) {
    grams.push(wrapped.slice(i, i + 3));
  }
  return grams;
}

export class ContextualEncoder {
  private tokenCache = new Map<string, Float64Array>();

  constructor(readonly spec: ModelSpec) {}

  /** Layer-0 representation: word-hash half plus char-trigram half. */
  tokenRepresentation(token: string): Float64Array {
    const key = normalizeToken(token);
    const cached = this.tokenCache.get(key);
    if (cached !== undefined) {
      return cached;
    }
    const half = this.spec.dim / 2;
    const out = new Float64Array(this.spec.dim);
    const word = hashedVector(this.spec.seed, `tok:${key}`, half);
    out.set(word, 0);
    const grams = charTrigrams(key);
    for (const gram of grams) {
      const gramVector = hashedVector(this.spec.seed, `gram:${gram}`, half);
      for (let k = 0; k < half; k++) {
        out[half + k] += gramVector[k] / grams.length;
      }
    }
    this.tokenCache.set(key, out);
    return out;
  }

  /**
   * Encode one sentence; returns [layer][tokenIndex] -> vector.
   * The sentence is processed once and all layers are produced together.
   */
  encode(tokens: string[], sentenceId: number): Float64Array[][] {
    const { dim, layers, context_mix, state_noise, ema_decay, seed } = this.spec;
    const n = tokens.length;
    const layer0 = tokens.map((t) => this.tokenRepresentation(t));
    const output: Float64Array[][] = [layer0];

    let previous = layer0;
    for (let layer = 1; layer < layers; layer++) {
      const forward: Float64Array[] = [];
      const backward: Float64Array[] = new Array(n);
      let fState = new Float64Array(dim);
      for (let i = 0; i < n; i++) {
        forward.push(fState);
        const next = new Float64Array(dim);
        for (let k = 0; k < dim; k++) {
          next[k] = ema_decay * fState[k] + (1 - ema_decay) * previous[i][k];
        }
        fState = next;
      }
      let bState = new Float64Array(dim);
      for (let i = n - 1; i >= 0; i--) {
        backward[i] = bState;
        const next = new Float64Array(dim);
        for (let k = 0; k < dim; k++) {
          next[k] = ema_decay * bState[k] + (1 - ema_decay) * previous[i][k];
        }
        bState = next;
      }

      const mix = context_mix[layer];
      const noiseScale = state_noise[layer];
      const current: Float64Array[] = [];
      for (let i = 0; i < n; i++) {
        const state = hashedVector(seed, `state:${sentenceId}:${i}:${layer}`, dim);
        const vector = new Float64Array(dim);
        for (let k = 0; k < dim; k++) {
          const context = 0.5 * (forward[i][k] + backward[i][k]);
          vector[k] = (1 - mix) * previous[i][k]
            + mix * (context + noiseScale * state[k]);
        }
        current.push(vector);
      }
      output.push(current);
      previous = current;
    }
    return output;
  }
}
