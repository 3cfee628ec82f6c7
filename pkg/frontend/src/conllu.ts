/**
 * Minimal CoNLL-U reader: enough structure for noun-occurrence export.
 *
 * Comment lines are skipped, a blank line ends a sentence, token rows have
 * 10 tab-separated columns, and multiword ranges ("3-4") / empty nodes
 * ("5.1") are excluded from the token stream.
 */

export interface Token {
  id: number;
  form: string;
  lemma: string;
  upos: string;
  feats: Map<string, string>;
}

export type Sentence = Token[];

export function parseFeats(column: string): Map<string, string> {
  const feats = new Map<string, string>();
  if (column === "_") {
    return feats;
  }
  for (const pair of column.split("|")) {
    const eq = pair.indexOf("=");
    if (eq > 0) {
      feats.set(pair.slice(0, eq), pair.slice(eq + 1));
    }
  }
  return feats;
}

export class ConlluError extends Error {
  constructor(message: string, readonly lineNo: number) {
    super(`line ${lineNo}: ${message}`);
  }
}

export function parseConllu(text: string): Sentence[] {
  const sentences: Sentence[] = [];
  let current: Sentence = [];
  const lines = text.split("\n");
  for (let i = 0; i < lines.length; i++) {
    const line = lines[i];
    if (line.startsWith("#")) {
      continue;
    }
    if (line.trim() === "") {
      if (current.length > 0) {
        sentences.push(current);
        current = [];
      }
      continue;
    }
    const columns = line.split("\t");
    if (columns.length !== 10) {
      throw new ConlluError(
        `expected 10 tab-separated columns, got ${columns.length}`,
        i + 1,
      );
    }
    if (!/^\d+$/.test(columns[0])) {
      continue; // multiword range or empty node
    }
    current.push({
      id: Number(columns[0]),
      form: columns[1],
      lemma: columns[2],
      upos: columns[3],
      feats: parseFeats(columns[5]),
    });
  }
  if (current.length > 0) {
    sentences.push(current);
  }
  return sentences;
}

/** Lowercase + NFC, matching the normalization used across the toolkit. */
export function normalizeToken(token: string): string {
  return token.toLowerCase().normalize("NFC");
}

/** Treebank Gender feature values folded into the binary scheme. */
export const GENDER_FEATURE_MAP = new Map<string, "uter" | "neuter">([
  ["Com", "uter"],
  ["Ut", "uter"],
  ["Masc", "uter"],
  ["Fem", "uter"],
  ["Neut", "neuter"],
]);
