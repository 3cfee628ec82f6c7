export { parseConllu, parseFeats, normalizeToken, GENDER_FEATURE_MAP } from "./conllu";
export type { Token, Sentence } from "./conllu";
export { ContextualEncoder, loadModel } from "./model";
export type { ModelSpec } from "./model";
export { renderDump, formatFloat9 } from "./dump";
export type { DumpRecord } from "./dump";
export { exportRecords } from "./export";
export type { ExportStats } from "./export";
export { readLexicon } from "./lexicon";
export { hashedVector, hashString, streamBase, uniformAt } from "./hash";
