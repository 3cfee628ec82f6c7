/**
 * gpdump v1 writer.
 *
 * Line 1: `#gpdump v1 dim=<d> layers=<comma list>`, then one TSV row per
 * record: sentence_id, token_index, token, lemma, gold_gender, layer,
 * comma-separated vector. Floats carry 9 significant digits, which
 * round-trips 32-bit values exactly.
 */

export interface DumpRecord {
  sentenceId: number;
  tokenIndex: number;
  token: string;
  lemma: string;
  goldGender: "uter" | "neuter" | "none";
  layer: number;
  vector: Float64Array;
}

/** 9-significant-digit text; shortest spelling of the rounded value. */
export function formatFloat9(value: number): string {
  return Number(value.toPrecision(9)).toString();
}

export function renderDump(
  records: DumpRecord[],
  dim: number,
  layers: number[],
): string {
  const layerSet = new Set(layers);
  const lines = [`#gpdump v1 dim=${dim} layers=${layers.join(",")}`];
  for (const record of records) {
    if (!layerSet.has(record.layer)) {
      throw new Error(
        `record layer ${record.layer} not in declared layers ${layers.join(",")}`,
      );
    }
    if (record.vector.length !== dim) {
      throw new Error(
        `record vector has length ${record.vector.length}, file declares ${dim}`,
      );
    }
    for (const text of [record.token, record.lemma]) {
      if (text.includes("\t") || text.includes("\n")) {
        throw new Error(`field ${JSON.stringify(text)} cannot be a TSV cell`);
      }
    }
    const vector = Array.from(record.vector, formatFloat9).join(",");
    lines.push(
      `${record.sentenceId}\t${record.tokenIndex}\t${record.token}\t` +
      `${record.lemma}\t${record.goldGender}\t${record.layer}\t${vector}`,
    );
  }
  return lines.join("\n") + "\n";
}
