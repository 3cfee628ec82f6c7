#!/usr/bin/env node
/**
 * context-dump: export per-layer contextual embeddings for treebank noun
 * occurrences into a gpdump v1 file.
 *
 * Usage:
 *   context-dump --model <spec.json> --treebank <file.conllu> \
 *       --layers 0,1,2 --out <file.gpdump> [--lexicon <lexicon.tsv>]
 *
 * Exit codes: 0 success, 1 bad arguments or unreadable inputs.
 */

import { mkdirSync, readFileSync, writeFileSync } from "node:fs";
import { dirname } from "node:path";
import { parseConllu } from "./conllu";
import { renderDump } from "./dump";
import { exportRecords } from "./export";
import { readLexicon } from "./lexicon";
import { loadModel } from "./model";

function parseArgs(argv: string[]): Map<string, string> {
  const args = new Map<string, string>();
  for (let i = 0; i < argv.length; i += 2) {
    const flag = argv[i];
    const value = argv[i + 1];
    if (!flag.startsWith("--") || value === undefined) {
      throw new Error(`bad argument ${flag}; flags take one value each`);
    }
    args.set(flag.slice(2), value);
  }
  return args;
}

export function main(argv: string[]): number {
  let args: Map<string, string>;
  try {
    args = parseArgs(argv);
    for (const required of ["model", "treebank", "layers", "out"]) {
      if (!args.has(required)) {
        throw new Error(`missing required flag --${required}`);
      }
    }
  } catch (err) {
    process.stderr.write(`error: ${(err as Error).message}\n`);
    process.stderr.write(
      "usage: context-dump --model <spec.json> --treebank <file.conllu> " +
      "--layers 0,1,2 --out <file.gpdump> [--lexicon <lexicon.tsv>]\n",
    );
    return 1;
  }

  try {
    const spec = loadModel(args.get("model")!);
    const layers = args.get("layers")!.split(",").map((piece) => {
      const layer = Number(piece);
      if (!Number.isInteger(layer)) {
        throw new Error(`bad layer id ${JSON.stringify(piece)}`);
      }
      return layer;
    });
    const treebankText = readFileSync(args.get("treebank")!, "utf-8");
    const sentences = parseConllu(treebankText);
    const lexicon = args.has("lexicon") ? readLexicon(args.get("lexicon")!) : null;

    const { records, stats } = exportRecords(sentences, spec, layers, lexicon);
    const dump = renderDump(records, spec.dim, layers);
    mkdirSync(dirname(args.get("out")!), { recursive: true });
    writeFileSync(args.get("out")!, dump, "utf-8");

    process.stderr.write(
      `sentences=${stats.sentencesSeen} ` +
      `skipped_too_long=${stats.sentencesSkippedTooLong} ` +
      `occurrences=${stats.occurrencesLabeled} ` +
      `records=${stats.recordsWritten} layers=${layers.join(",")}\n`,
    );
    return 0;
  } catch (err) {
    process.stderr.write(`error: ${(err as Error).message}\n`);
    return 1;
  }
}

if (require.main === module) {
  process.exit(main(process.argv.slice(2)));
}
