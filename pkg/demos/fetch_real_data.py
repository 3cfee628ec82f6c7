#!/usr/bin/env python3
"""Download the external datasets used by the data-dependent acceptance tests.

Needs network access. Fetches into data/ (gitignored):

  data/muse/wiki.multi.{sv,da,nl}.vec   aligned multilingual vectors
  data/ud/{sv,da,nl}.conllu             Universal Dependencies treebanks
  data/sv_text.txt                      a >=50MB Swedish plain-text sample

With these present, `pytest tests/test_acceptance.py` additionally runs the
desk-scale transfer reproduction and the real-text ablation ordering check.
The text sample must be plain text (e.g. extracted from a Swedish Wikipedia
dump with any wikitext extractor); this script only fetches the first two.
"""

import sys
import urllib.request
from pathlib import Path

DATA = Path(__file__).resolve().parent.parent / "data"

MUSE_URLS = {
    lang: f"https://dl.fbaipublicfiles.com/arrival/vectors/wiki.multi.{lang}.vec"
    for lang in ("sv", "da", "nl")
}

UD_URLS = {
    "sv": "https://raw.githubusercontent.com/UniversalDependencies/"
          "UD_Swedish-Talbanken/master/sv_talbanken-ud-train.conllu",
    "da": "https://raw.githubusercontent.com/UniversalDependencies/"
          "UD_Danish-DDT/master/da_ddt-ud-train.conllu",
    "nl": "https://raw.githubusercontent.com/UniversalDependencies/"
          "UD_Dutch-Alpino/master/nl_alpino-ud-train.conllu",
}


def fetch(url: str, destination: Path) -> None:
    if destination.exists():
        print(f"have {destination}")
        return
    destination.parent.mkdir(parents=True, exist_ok=True)
    print(f"fetching {url} -> {destination}")
    with urllib.request.urlopen(url) as response, open(destination, "wb") as out:
        while True:
            chunk = response.read(1 << 20)
            if not chunk:
                break
            out.write(chunk)


def main() -> int:
    for lang, url in UD_URLS.items():
        fetch(url, DATA / "ud" / f"{lang}.conllu")
    for lang, url in MUSE_URLS.items():
        fetch(url, DATA / "muse" / f"wiki.multi.{lang}.vec")
    print("done; supply data/sv_text.txt separately for the real-text ablation")
    return 0


if __name__ == "__main__":
    sys.exit(main())
