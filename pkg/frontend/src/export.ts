/**
 * The dump job: run the encoder over a treebank and collect one record per
 * (noun occurrence, requested layer).
 *
 * Labeling: with a lexicon supplied, gold genders come from it (so lemmas
 * the extraction stage dropped as ties are skipped here too); without one,
 * the token's own Gender feature decides. Sentences longer than the model
 * limit are skipped and counted, never truncated.
 */

import { GENDER_FEATURE_MAP, normalizeToken, Sentence } from "./conllu";
import { DumpRecord } from "./dump";
import { GenderLabel } from "./lexicon";
import { ContextualEncoder, ModelSpec } from "./model";

export interface ExportStats {
  sentencesSeen: number;
  sentencesSkippedTooLong: number;
  occurrencesLabeled: number;
  recordsWritten: number;
}

export function exportRecords(
  sentences: Sentence[],
  spec: ModelSpec,
  layers: number[],
  lexicon: Map<string, GenderLabel> | null,
): { records: DumpRecord[]; stats: ExportStats } {
  for (const layer of layers) {
    if (layer < 0 || layer >= spec.layers) {
      throw new Error(
        `requested layer ${layer} does not exist in the ${spec.layers}-layer model`,
      );
    }
  }
  const encoder = new ContextualEncoder(spec);
  const records: DumpRecord[] = [];
  const stats: ExportStats = {
    sentencesSeen: 0,
    sentencesSkippedTooLong: 0,
    occurrencesLabeled: 0,
    recordsWritten: 0,
  };

  sentences.forEach((sentence, sentenceId) => {
    stats.sentencesSeen += 1;
    if (sentence.length > spec.max_sentence_length) {
      stats.sentencesSkippedTooLong += 1;
      return;
    }

    // find the labeled noun occurrences first; skip encoding if none
    const labeled: { index: number; gender: GenderLabel }[] = [];
    sentence.forEach((token, index) => {
      if (token.upos !== "NOUN") {
        return;
      }
      const featureValue = token.feats.get("Gender");
      const featureGender =
        featureValue === undefined ? undefined : GENDER_FEATURE_MAP.get(featureValue);
      if (featureGender === undefined) {
        return; // no mapped Gender feature: not an exportable occurrence
      }
      const gender = lexicon === null
        ? featureGender
        : lexicon.get(normalizeToken(token.lemma));
      if (gender === undefined) {
        return; // tie-dropped or out-of-lexicon lemma
      }
      labeled.push({ index, gender });
    });
    if (labeled.length === 0) {
      return;
    }

    const encoded = encoder.encode(sentence.map((t) => t.form), sentenceId);
    for (const occurrence of labeled) {
      stats.occurrencesLabeled += 1;
      for (const layer of layers) {
        records.push({
          sentenceId,
          tokenIndex: occurrence.index,
          token: sentence[occurrence.index].form,
          lemma: normalizeToken(sentence[occurrence.index].lemma),
          goldGender: occurrence.gender,
          layer,
          vector: encoded[layer][occurrence.index],
        });
        stats.recordsWritten += 1;
      }
    }
  });
  return { records, stats };
}
