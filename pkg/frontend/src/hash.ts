/**
 * Deterministic hashing to pseudo-random vectors.
 *
 * All model randomness is a pure function of (seed, label strings, index),
 * computed with 64-bit integer arithmetic (BigInt) and mapped to uniform
 * floats in [-1, 1). No engine-dependent transcendentals are involved, so
 * re-runs are byte-identical.
 */

const MASK64 = (1n << 64n) - 1n;

function splitmix64(state: bigint): bigint {
  state = (state + 0x9e3779b97f4a7c15n) & MASK64;
  let z = state;
  z = ((z ^ (z >> 30n)) * 0xbf58476d1ce4e5b9n) & MASK64;
  z = ((z ^ (z >> 27n)) * 0x94d049bb133111ebn) & MASK64;
  return z ^ (z >> 31n);
}

/** FNV-1a over UTF-8 bytes, widened to 64 bits. */
export function hashString(text: string): bigint {
  let value = 0xcbf29ce484222325n;
  const bytes = Buffer.from(text, "utf-8");
  for (const byte of bytes) {
    value ^= BigInt(byte);
    value = (value * 0x100000001b3n) & MASK64;
  }
  return value;
}

/** Base state for a labeled stream under a seed. */
export function streamBase(seed: number, label: string): bigint {
  return splitmix64((BigInt(seed) & MASK64) ^ hashString(label));
}

/** Draw i of a stream, as a uniform float in [-1, 1). */
export function uniformAt(base: bigint, index: number): number {
  const bits = splitmix64((base + BigInt(index)) & MASK64);
  return Number(bits >> 11n) / 2 ** 52 - 1.0;
}

/** A whole hashed vector for (seed, label): components uniform in [-1, 1). */
export function hashedVector(seed: number, label: string, dim: number): Float64Array {
  const base = streamBase(seed, label);
  const out = new Float64Array(dim);
  for (let k = 0; k < dim; k++) {
    out[k] = uniformAt(base, k);
  }
  return out;
}
