import assert from "node:assert/strict";
import { test } from "node:test";
import { existsSync, mkdtempSync, readFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";

import { main } from "../src/cli";

const ROOT = join(__dirname, "..", "..");
const GOLDEN = join(ROOT, "out", "sv_fixture.gpdump");

test("regenerating the committed dump reproduces it byte for byte", (t) => {
  if (!existsSync(GOLDEN)) {
    t.skip("golden dump not committed yet");
    return;
  }
  const out = join(mkdtempSync(join(tmpdir(), "ctxdump-golden-")), "fresh.gpdump");
  const code = main([
    "--model", join(ROOT, "models", "sv-micro.json"),
    "--treebank", join(ROOT, "fixtures", "sv_fixture.conllu"),
    "--layers", "0,1,2",
    "--out", out,
    "--lexicon", join(ROOT, "fixtures", "sv_fixture.lexicon.tsv"),
  ]);
  assert.equal(code, 0);
  assert.deepEqual(readFileSync(out), readFileSync(GOLDEN));
});
