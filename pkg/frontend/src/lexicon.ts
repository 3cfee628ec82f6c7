/**
 * Reader for the primary toolkit's lexicon TSV
 * (header `lemma<TAB>gender<TAB>count`, gender spelled uter/neuter).
 *
 * When a lexicon is supplied, dump labels come from it, so occurrences of
 * lemmas whose annotations tied (and were therefore dropped from the
 * lexicon) are skipped, keeping labels identical to the extraction stage.
 */

import { readFileSync } from "node:fs";

export type GenderLabel = "uter" | "neuter";

export function readLexicon(path: string): Map<string, GenderLabel> {
  const text = readFileSync(path, "utf-8");
  const lines = text.split("\n");
  if (lines[0] !== "lemma\tgender\tcount") {
    throw new Error(`not a lexicon file: bad header ${JSON.stringify(lines[0])}`);
  }
  const entries = new Map<string, GenderLabel>();
  for (let i = 1; i < lines.length; i++) {
    const line = lines[i];
    if (line === "") {
      continue;
    }
    const columns = line.split("\t");
    if (columns.length !== 3 || (columns[1] !== "uter" && columns[1] !== "neuter")) {
      throw new Error(`lexicon line ${i + 1}: bad row ${JSON.stringify(line)}`);
    }
    entries.set(columns[0], columns[1]);
  }
  return entries;
}
