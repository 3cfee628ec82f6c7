"""Command-line orchestration for the gender-probing experiments.

Subcommands: extract-nouns, train-probe, evaluate, transfer-matrix,
strip-corpus, train-embeddings, layer-compare, report. Exit codes: 0 on
success, 1 for user or data errors, 2 for strict-parse failures and
internal errors. Every artifact is paired with a `.meta` sidecar carrying
the effective configuration and seeds, and all randomness derives from one
root seed expanded with fixed per-stage labels.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import conllu, corpus, layers, probe, sgns, transfer, vectors
from .util import expand_seed

EXIT_OK = 0
EXIT_USER = 1
EXIT_INTERNAL = 2


class UserError(Exception):
    """Bad input from the operator: reported on stderr, exit code 1."""


def _require(args: argparse.Namespace, *names: str) -> None:
    """Presence check deferred past argparse so a --config file can supply
    any flag; explicit flags still win over config values."""
    missing = [n for n in names if getattr(args, n) in (None, [])]
    if missing:
        flags = ", ".join("--" + n.replace("_", "-") for n in missing)
        raise UserError(f"missing required arguments: {flags}")


def _read_text(path: str) -> str:
    p = Path(path)
    if not p.exists():
        raise UserError(f"input file not found: {path}")
    return p.read_text(encoding="utf-8")


def _write_meta(path: Path, mapping: dict) -> None:
    lines = [f"{key}={mapping[key]}" for key in sorted(mapping)]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def _effective(args: argparse.Namespace, keys: list[str]) -> dict:
    return {key: getattr(args, key) for key in keys}


def _parse_gender_map(spec: str) -> dict[str, conllu.Gender]:
    mapping = {}
    for item in spec.split(","):
        item = item.strip()
        if not item:
            continue
        try:
            value, gender = item.split("=")
            mapping[value.strip()] = conllu.Gender(gender.strip().lower())
        except ValueError:
            raise UserError(
                f"bad gender map entry {item!r}; expected Value=uter|neuter"
            ) from None
    if not mapping:
        raise UserError("gender map is empty")
    return mapping


DEFAULT_MAP_SPEC = "Com=uter,Ut=uter,Masc=uter,Fem=uter,Neut=neuter"


def _load_lexicon(path: str, language: str) -> conllu.GenderLexicon:
    with open(path, encoding="utf-8") as stream:
        return conllu.read_lexicon(stream, language)


def _probe_dataset(records, table):
    """(vector, label) pairs for records found in the table; misses counted."""
    pairs = []
    kept_records = []
    skipped = 0
    for record in records:
        vector = table.lookup(record.lemma)
        if vector is None:
            skipped += 1
            continue
        pairs.append((np.asarray(vector, dtype=float), record.gender.code))
        kept_records.append(record)
    return pairs, kept_records, skipped


def _distribution(records) -> transfer.ClassDistribution:
    n_uter = sum(1 for r in records if r.gender is conllu.Gender.UTER)
    total = len(records)
    if total == 0:
        raise UserError("no records left after OOV skipping")
    return transfer.ClassDistribution(n_uter / total, (total - n_uter) / total)


def _probe_config(args, input_dim: int, seed: int) -> probe.ProbeConfig:
    return probe.ProbeConfig(
        input_dim=input_dim,
        hidden_dim=args.hidden_dim,
        learning_rate=args.learning_rate,
        batch_size=args.batch_size,
        patience=args.patience,
        max_epochs=args.max_epochs,
        validation_fraction=args.validation_fraction,
        seed=seed,
    )


def _add_probe_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--hidden-dim", type=int, default=None,
                        help="hidden layer size (default: 2 x input dim)")
    parser.add_argument("--learning-rate", type=float, default=1e-3)
    parser.add_argument("--batch-size", type=int, default=32)
    parser.add_argument("--patience", type=int, default=10)
    parser.add_argument("--max-epochs", type=int, default=500)
    parser.add_argument("--validation-fraction", type=float, default=0.1)
    parser.add_argument("--test-fraction", type=float, default=0.1)


PROBE_KEYS = ["hidden_dim", "learning_rate", "batch_size", "patience",
              "max_epochs", "validation_fraction", "test_fraction"]


def cmd_extract_nouns(args) -> int:
    _require(args, "treebank", "language", "out")
    gender_map = _parse_gender_map(args.gender_map)
    sentences = []
    skipped_rows = 0
    for path in args.treebank:
        text = _read_text(path)
        try:
            parsed, skipped = conllu.parse_conllu(text, strict=args.strict)
        except conllu.ConlluError as exc:
            print(f"strict parse failed in {path}: {exc}", file=sys.stderr)
            return EXIT_INTERNAL
        sentences.extend(parsed)
        skipped_rows += skipped

    lexicon = conllu.extract_nouns(sentences, gender_map, args.language)
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    with open(out, "w", encoding="utf-8") as stream:
        conllu.write_lexicon(lexicon, stream)
    dist = lexicon.distribution
    _write_meta(out.with_suffix(out.suffix + ".meta"), {
        "command": "extract-nouns",
        "language": args.language,
        "treebanks": ";".join(args.treebank),
        "gender_map": args.gender_map,
        "strict": args.strict,
        "lemmas": len(lexicon),
        "p_uter": f"{dist.p_uter:.6f}",
        "conflicts_dropped": lexicon.conflicts_dropped,
        "skipped_rows": skipped_rows,
    })
    print(
        f"lemmas={len(lexicon)} uter={dist.p_uter:.3f} neuter={dist.p_neuter:.3f} "
        f"conflicts={lexicon.conflicts_dropped} skipped_rows={skipped_rows}"
    )
    return EXIT_OK


def cmd_train_probe(args) -> int:
    _require(args, "lexicon", "vectors", "language", "out_dir")
    lexicon = _load_lexicon(args.lexicon, args.language)
    with open(args.vectors, encoding="utf-8") as stream:
        table = vectors.load_vec_text(stream, vocabulary_filter=set(lexicon.entries))

    split_seed = expand_seed(args.seed, f"split:{args.language}")
    train_records, test_records = conllu.split_dataset(
        lexicon, args.test_fraction, split_seed
    )
    train_pairs, train_kept, train_skipped = _probe_dataset(train_records, table)
    test_pairs, test_kept, test_skipped = _probe_dataset(test_records, table)
    if not train_pairs:
        raise UserError("no training nouns found in the vector table")

    config = _probe_config(args, table.dim, expand_seed(args.seed, f"probe:{args.language}"))
    try:
        model, history = probe.train(train_pairs, config)
    except probe.TrainingError as exc:
        raise UserError(str(exc)) from exc

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    with open(out_dir / "model.gpmodel", "w", encoding="utf-8") as stream:
        probe.save_model(model, stream)
    with open(out_dir / "history.tsv", "w", encoding="utf-8") as stream:
        stream.write("epoch\ttrain_loss\tval_loss\tval_accuracy\n")
        for i, record in enumerate(history.epochs):
            stream.write(
                f"{i}\t{record.train_loss:.6f}\t{record.val_loss:.6f}"
                f"\t{record.val_accuracy:.6f}\n"
            )
    test_lexicon = conllu.GenderLexicon(
        args.language,
        {r.lemma: r.gender for r in test_kept},
        {r.lemma: r.occurrence_count for r in test_kept},
    )
    with open(out_dir / "test_split.tsv", "w", encoding="utf-8") as stream:
        conllu.write_lexicon(test_lexicon, stream)

    accuracy, loss = (float("nan"), float("nan"))
    if test_pairs:
        accuracy, loss = probe.evaluate(model, test_pairs)
    train_dist = _distribution(train_kept)
    _write_meta(out_dir / "model.gpmodel.meta", {
        "command": "train-probe",
        "language": args.language,
        "lexicon": args.lexicon,
        "vectors": args.vectors,
        "seed": args.seed,
        "split_seed": split_seed,
        "probe_seed": config.seed,
        **{k: getattr(args, k) for k in PROBE_KEYS},
        "input_dim": table.dim,
        "train_size": len(train_pairs),
        "test_size": len(test_pairs),
        "train_oov_skipped": train_skipped,
        "test_oov_skipped": test_skipped,
        "train_p_uter": f"{train_dist.p_uter:.6f}",
        "best_epoch": history.best_epoch,
        "stop_reason": history.stop_reason,
        "test_accuracy": f"{accuracy:.6f}",
        "test_loss": f"{loss:.6f}",
    })
    print(
        f"trained {args.language}: epochs={len(history.epochs)} "
        f"best={history.best_epoch} stop={history.stop_reason} "
        f"test_acc={100 * accuracy:.2f} oov_skipped={train_skipped + test_skipped}"
    )
    return EXIT_OK


def cmd_evaluate(args) -> int:
    _require(args, "model", "lexicon", "vectors", "language")
    with open(args.model, encoding="utf-8") as stream:
        model = probe.load_model(stream)
    lexicon = _load_lexicon(args.lexicon, args.language)
    with open(args.vectors, encoding="utf-8") as stream:
        table = vectors.load_vec_text(stream, vocabulary_filter=set(lexicon.entries))
    if table.dim != model.input_dim:
        raise UserError(
            f"vector dim {table.dim} does not match model input {model.input_dim}"
        )

    records = lexicon.records()
    if args.test_fraction is not None:
        split_seed = expand_seed(args.seed, f"split:{args.language}")
        _, records = conllu.split_dataset(lexicon, args.test_fraction, split_seed)
    pairs, kept, skipped = _probe_dataset(records, table)
    if not pairs:
        raise UserError("no evaluable nouns found in the vector table")
    accuracy, loss = probe.evaluate(model, pairs)
    print(
        f"evaluate {args.language}: n={len(pairs)} accuracy={100 * accuracy:.2f} "
        f"loss={loss:.4f} oov_skipped={skipped}"
    )
    return EXIT_OK


def cmd_transfer_matrix(args) -> int:
    _require(args, "pair", "out_dir")
    specs = []
    for item in args.pair:
        parts = item.split(":")
        if len(parts) != 3:
            raise UserError(
                f"bad --pair {item!r}; expected language:lexicon.tsv:vectors.vec"
            )
        specs.append(tuple(parts))

    models = {}
    test_sets = {}
    train_dists = {}
    test_dists = {}
    oov = {}
    sizes = {}
    for language, lexicon_path, vector_path in specs:
        lexicon = _load_lexicon(lexicon_path, language)
        with open(vector_path, encoding="utf-8") as stream:
            table = vectors.load_vec_text(
                stream, vocabulary_filter=set(lexicon.entries)
            )
        split_seed = expand_seed(args.seed, f"split:{language}")
        train_records, test_records = conllu.split_dataset(
            lexicon, args.test_fraction, split_seed
        )
        train_pairs, train_kept, train_skipped = _probe_dataset(train_records, table)
        test_pairs, test_kept, test_skipped = _probe_dataset(test_records, table)
        if not train_pairs or not test_pairs:
            raise UserError(f"language {language}: empty train or test after OOV")
        config = _probe_config(
            args, table.dim, expand_seed(args.seed, f"probe:{language}")
        )
        try:
            model, _ = probe.train(train_pairs, config)
        except probe.TrainingError as exc:
            raise UserError(f"language {language}: {exc}") from exc
        models[language] = model
        test_sets[language] = test_pairs
        train_dists[language] = _distribution(train_kept)
        test_dists[language] = _distribution(test_kept)
        oov[language] = train_skipped + test_skipped
        sizes[language] = (len(train_pairs), len(test_pairs))

    metadata = {
        "seed": args.seed,
        "test_fraction": args.test_fraction,
        "oov_skipped": ";".join(f"{l}={oov[l]}" for l in models),
        "sizes": ";".join(f"{l}={sizes[l][0]}/{sizes[l][1]}" for l in models),
        "train_p_uter": ";".join(
            f"{l}={train_dists[l].p_uter:.4f}" for l in models
        ),
        "test_p_uter": ";".join(f"{l}={test_dists[l].p_uter:.4f}" for l in models),
    }
    try:
        report = transfer.transfer_matrix(
            models, test_sets, train_dists, test_dists, metadata
        )
    except ValueError as exc:
        raise UserError(str(exc)) from exc

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / "transfer_report.tsv").write_text(report.render_tsv(), encoding="utf-8")
    (out_dir / "transfer_report.txt").write_text(report.render_text(), encoding="utf-8")
    _write_meta(out_dir / "transfer_report.tsv.meta", {
        "command": "transfer-matrix", **metadata,
        **{k: getattr(args, k) for k in PROBE_KEYS},
    })
    for i, language in enumerate(report.languages):
        print(
            f"{language}: self_raw={report.raw[i, i]:.2f} "
            f"self_corrected={report.corrected[i, i]:.2f}"
        )
    return EXIT_OK


def cmd_strip_corpus(args) -> int:
    _require(args, "corpus", "mode", "out")
    text = _read_text(args.corpus)
    mode = corpus.StripMode(args.mode)
    article_set = corpus.ArticleSet(
        args.language, frozenset(t.strip() for t in args.articles.split(",") if t.strip())
    )
    variant = corpus.strip_corpus(text, mode, article_set)
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    with open(out, "w", encoding="utf-8") as stream:
        corpus.write_tokens(variant, stream)
    (out.with_suffix(out.suffix + ".stats")).write_text(
        variant.stats.as_lines(), encoding="utf-8"
    )
    _write_meta(out.with_suffix(out.suffix + ".meta"), {
        "command": "strip-corpus",
        "corpus": args.corpus,
        "mode": mode.value,
        "articles": ",".join(sorted(article_set.tokens)),
        "token_count": variant.stats.token_count,
        "removed_articles": variant.stats.removed_articles,
        "type_count": variant.stats.type_count,
    })
    print(
        f"mode={mode.value} tokens={variant.stats.token_count} "
        f"removed_articles={variant.stats.removed_articles} "
        f"types={variant.stats.type_count}"
    )
    return EXIT_OK


def cmd_train_embeddings(args) -> int:
    _require(args, "tokens", "out")
    with open(args.tokens, encoding="utf-8") as stream:
        sentences = corpus.read_tokens(stream)
    if not sentences:
        raise UserError(f"no sentences in {args.tokens}")
    config = sgns.SgnsConfig(
        dim=args.dim,
        window=args.window,
        negatives=args.negatives,
        epochs=args.epochs,
        min_count=args.min_count,
        subsample_t=args.subsample_t,
        learning_rate=args.sgns_learning_rate,
        ngram_min=args.ngram_min,
        ngram_max=args.ngram_max,
        buckets=args.buckets,
        seed=expand_seed(args.seed, "sgns"),
        workers=args.workers,
    )
    try:
        table = sgns.train_embeddings(sentences, config)
    except sgns.VocabError as exc:
        raise UserError(str(exc)) from exc
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    with open(out, "w", encoding="utf-8") as stream:
        vectors.save_vec_text(table, stream)
    _write_meta(out.with_suffix(out.suffix + ".meta"), {
        "command": "train-embeddings",
        "tokens": args.tokens,
        "seed": args.seed,
        "sgns_seed": config.seed,
        "dim": config.dim, "window": config.window,
        "negatives": config.negatives, "epochs": config.epochs,
        "min_count": config.min_count, "subsample_t": config.subsample_t,
        "learning_rate": config.learning_rate,
        "ngram_range": f"{config.ngram_min}-{config.ngram_max}",
        "buckets": config.buckets, "workers": config.workers,
        "vocab_size": len(table.vectors),
    })
    print(f"trained embeddings: vocab={len(table.vectors)} dim={table.dim}")
    return EXIT_OK


def cmd_layer_compare(args) -> int:
    _require(args, "dump", "out_dir")
    with open(args.dump, encoding="utf-8") as stream:
        try:
            records = vectors.read_dump(stream)
        except vectors.VectorFormatError as exc:
            raise UserError(f"{args.dump}: {exc}") from exc
    try:
        datasets = layers.build_layer_datasets(records)
        results = layers.layer_compare(
            datasets,
            split_seed=expand_seed(args.seed, "layer-split"),
            probe_seed=expand_seed(args.seed, "layer-probe"),
            test_fraction=args.test_fraction,
            lemma_disjoint=args.lemma_disjoint,
            probe_overrides={
                "hidden_dim": args.hidden_dim,
                "learning_rate": args.learning_rate,
                "batch_size": args.batch_size,
                "patience": args.patience,
                "max_epochs": args.max_epochs,
                "validation_fraction": args.validation_fraction,
            },
        )
    except layers.DumpConsistencyError as exc:
        raise UserError(str(exc)) from exc

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / "layer_table.tsv").write_text(
        layers.render_results_tsv(results), encoding="utf-8"
    )
    (out_dir / "layer_table.txt").write_text(
        layers.render_results_text(results), encoding="utf-8"
    )
    _write_meta(out_dir / "layer_table.tsv.meta", {
        "command": "layer-compare",
        "dump": args.dump,
        "seed": args.seed,
        "lemma_disjoint": args.lemma_disjoint,
        **{k: getattr(args, k) for k in PROBE_KEYS},
        "instances_per_layer": len(datasets[sorted(datasets)[0]]),
    })
    for result in results:
        print(
            f"layer={result.layer} loss={result.loss:.3f} "
            f"accuracy={100 * result.accuracy:.2f}"
        )
    return EXIT_OK


REPORT_SECTIONS = [
    ("Lexicons", "*.lexicon.tsv.meta"),
    ("Corpus variants", "*.stats"),
    ("Embedding tables", "*.vec.meta"),
    ("Probes", "model.gpmodel.meta"),
    ("Transfer", "transfer_report.txt"),
    ("Layer comparison", "layer_table.txt"),
]


def cmd_report(args) -> int:
    _require(args, "in_dir")
    in_dir = Path(args.in_dir)
    if not in_dir.is_dir():
        raise UserError(f"not a directory: {args.in_dir}")
    sections = []
    for title, pattern in REPORT_SECTIONS:
        matches = sorted(in_dir.rglob(pattern))
        if not matches:
            continue
        body = []
        for match in matches:
            body.append(f"### {match.relative_to(in_dir)}\n")
            body.append("```")
            body.append(match.read_text(encoding="utf-8").rstrip("\n"))
            body.append("```\n")
        sections.append(f"## {title}\n\n" + "\n".join(body))
    if not sections:
        raise UserError(f"no known artifacts under {args.in_dir}")
    report = "# Gender probing report\n\n" + "\n".join(sections)
    out = in_dir / "report.md"
    out.write_text(report, encoding="utf-8")
    print(f"wrote {out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="genderprobe",
        description="Probe word embeddings for grammatical gender.",
    )
    parser.add_argument("--config", default=None,
                        help="key=value file of flag defaults (flags win)")
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("extract-nouns", help="treebank -> gender lexicon TSV")
    p.add_argument("--treebank", action="append")
    p.add_argument("--language")
    p.add_argument("--gender-map", default=DEFAULT_MAP_SPEC)
    p.add_argument("--out")
    p.add_argument("--strict", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_extract_nouns)

    p = sub.add_parser("train-probe", help="train a probe on lexicon + vectors")
    p.add_argument("--lexicon")
    p.add_argument("--vectors")
    p.add_argument("--language")
    p.add_argument("--out-dir")
    p.add_argument("--seed", type=int, default=0)
    _add_probe_flags(p)
    p.set_defaults(func=cmd_train_probe)

    p = sub.add_parser("evaluate", help="evaluate a checkpoint on lexicon + vectors")
    p.add_argument("--model")
    p.add_argument("--lexicon")
    p.add_argument("--vectors")
    p.add_argument("--language")
    p.add_argument("--test-fraction", type=float, default=None,
                   help="evaluate only the held-out split carved with --seed")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("transfer-matrix",
                       help="train per-language probes and cross-evaluate")
    p.add_argument("--pair", action="append", metavar="LANG:LEXICON:VECTORS")
    p.add_argument("--out-dir")
    p.add_argument("--seed", type=int, default=0)
    _add_probe_flags(p)
    p.set_defaults(func=cmd_transfer_matrix)

    p = sub.add_parser("strip-corpus", help="tokenize and ablate a text corpus")
    p.add_argument("--corpus")
    p.add_argument("--mode", choices=[m.value for m in corpus.StripMode])
    p.add_argument("--articles", default="en,ett,den,det,de")
    p.add_argument("--language", default="sv")
    p.add_argument("--out")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_strip_corpus)

    p = sub.add_parser("train-embeddings", help="SGNS + subwords on a token file")
    p.add_argument("--tokens")
    p.add_argument("--out")
    p.add_argument("--dim", type=int, default=300)
    p.add_argument("--window", type=int, default=5)
    p.add_argument("--negatives", type=int, default=5)
    p.add_argument("--epochs", type=int, default=5)
    p.add_argument("--min-count", type=int, default=5)
    p.add_argument("--subsample-t", type=float, default=1e-4)
    p.add_argument("--sgns-learning-rate", type=float, default=0.025)
    p.add_argument("--ngram-min", type=int, default=3)
    p.add_argument("--ngram-max", type=int, default=6)
    p.add_argument("--buckets", type=int, default=1 << 21)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_train_embeddings)

    p = sub.add_parser("layer-compare", help="per-layer probing of a gpdump file")
    p.add_argument("--dump")
    p.add_argument("--out-dir")
    p.add_argument("--lemma-disjoint", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    _add_probe_flags(p)
    p.set_defaults(func=cmd_layer_compare)

    p = sub.add_parser("report", help="merge run artifacts into one markdown file")
    p.add_argument("--in-dir")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_report)

    parser._command_parsers = dict(sub.choices)
    return parser


def _coerce(value: str):
    """Config-file values arrive as text; recover numbers and booleans."""
    lowered = value.lower()
    if lowered in ("true", "yes", "on"):
        return True
    if lowered in ("false", "no", "off"):
        return False
    try:
        return int(value)
    except ValueError:
        pass
    try:
        return float(value)
    except ValueError:
        return value


def _apply_config_file(parser: argparse.ArgumentParser, argv: list[str]) -> None:
    if "--config" not in argv:
        return
    path = argv[argv.index("--config") + 1]
    defaults = {}
    for line_no, line in enumerate(_read_text(path).splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise UserError(f"{path}:{line_no}: expected key=value")
        key, value = line.split("=", 1)
        defaults[key.strip().replace("-", "_")] = _coerce(value.strip())
    parser.set_defaults(**defaults)
    for command_parser in getattr(parser, "_command_parsers", {}).values():
        command_parser.set_defaults(**defaults)


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        _apply_config_file(parser, argv)
        args = parser.parse_args(argv)
        return args.func(args)
    except UserError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USER
    except (conllu.ExtractionError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USER
    except (conllu.ConlluError, vectors.VectorFormatError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except Exception as exc:  # internal failure: report, never swallow silently
        import traceback

        traceback.print_exc()
        print(f"internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
