"""Command-line interface: ``lexsense <command> ...``."""

import argparse
import sys
from pathlib import Path

from .disambiguator import (Scorer, ScorerConfig, Status, disambiguate_document,
                            load_corpus)
from .distributional import build_ic_tables, nearest_neighbors
from .errors import LexsenseError
from .evaluation import (cell_report_filename, coverage, load_gold, sweep,
                         write_aggregate_table, write_cell_report,
                         write_coverage_report)
from .lesk import validate_relation_pairs
from .semantic_network import RelationType, load_network, senses
from .triple_store import load_pos_lexicon, load_triples, sample_triples
from .text import load_stoplist


def _parse_relations(spec: str):
    """Parse --relations: either relation names or explicit r1:r2 pairs."""
    items = [item.strip() for item in spec.split(",") if item.strip()]
    if not items:
        raise ValueError("--relations must not be empty")
    try:
        if any(":" in item for item in items):
            pairs = set()
            for item in items:
                first, _, second = item.partition(":")
                pairs.add((RelationType(first.strip()), RelationType(second.strip())))
            return validate_relation_pairs(pairs)
        names = [RelationType(item) for item in items]
        return frozenset((a, b) for a in names for b in names)
    except ValueError as exc:
        raise ValueError(f"bad --relations value: {exc}") from None


def _scorer_config(args) -> ScorerConfig:
    return ScorerConfig(
        overlap_mode=args.overlap_mode,
        relation_pairs=_parse_relations(args.relations) if args.relations else None,
        synonym_fallback=args.synonym_fallback == "on",
        weight_by_sim=args.weight_by_sim,
        backfill_neighbors=args.backfill_neighbors,
        stopwords=load_stoplist(args.stoplist) if args.stoplist else None,
    )


def _add_scorer_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--scorer", default="lesk-ext",
                        choices=[s.value for s in Scorer])
    parser.add_argument("--overlap-mode", default="multiset",
                        choices=["set", "multiset"],
                        help="token overlap counting for the base/variant scorers")
    parser.add_argument("--relations", default=None,
                        help="relation names (cross product) or r1:r2 pairs, "
                             "comma-separated; must be symmetric")
    parser.add_argument("--synonym-fallback", default="on", choices=["on", "off"],
                        help="use synonym lemmas when a synset has no gloss")
    parser.add_argument("--weight-by-sim", action="store_true",
                        help="weight neighbour contributions by Lin similarity")
    parser.add_argument("--backfill-neighbors", action="store_true",
                        help="replace neighbours without senses by the next rank")
    parser.add_argument("--stoplist", default=None,
                        help="override the shipped French stoplist file")


def _corpus_documents(corpus_path: Path) -> dict[str, list]:
    if corpus_path.is_dir():
        files = sorted(corpus_path.glob("*.tsv"))
        if not files:
            raise LexsenseError(f"no .tsv corpus files under {corpus_path}")
        return {f.stem: load_corpus(f) for f in files}
    return {corpus_path.stem: load_corpus(corpus_path)}


def cmd_sample_triples(args) -> int:
    sample_triples(args.infile, args.out, args.fraction, args.seed)
    return 0


def cmd_neighbors(args) -> int:
    lexicon = load_pos_lexicon(args.lexicon)
    index = load_triples(args.triples, lexicon)
    tables = build_ic_tables(index)
    if args.pos not in tables:
        raise LexsenseError(f"no lemmas indexed for POS {args.pos!r}")
    candidates = [c.strip() for c in args.candidates.split(",") if c.strip()]
    ranked = nearest_neighbors(index, tables[args.pos], (args.word, args.pos),
                               candidates, args.k)
    for lemma, score in ranked.neighbors:
        print(f"{lemma}\t{score:.6f}")
    return 0


def cmd_senses(args) -> int:
    network = load_network(args.network)
    for synset in senses(network, args.word, args.pos):
        first_gloss = synset.glosses[0] if synset.glosses else ""
        print(f"{synset.id}\t{synset.degree}\t{first_gloss}")
    return 0


def cmd_disambiguate(args) -> int:
    network = load_network(args.network)
    lexicon = load_pos_lexicon(args.lexicon)
    index = load_triples(args.triples, lexicon)
    tables = build_ic_tables(index)
    document = load_corpus(args.corpus)
    scorer = Scorer.from_name(args.scorer)
    config = _scorer_config(args)
    targets = None
    if args.targets:
        targets = {t.strip() for t in args.targets.split(",") if t.strip()}
    results = disambiguate_document(network, index, tables, document, scorer,
                                    args.k, target_filter=targets, config=config)
    for result in results:
        token = result.token
        chosen = result.chosen if result.chosen is not None else "-"
        if result.status is Status.UNKNOWN:
            score = "-"
        else:
            top = result.all_scores[0].score
            score = f"{top:.4f}" if isinstance(top, float) else str(top)
        neighbors = ",".join(f"{lemma}:{sim:.6f}"
                             for lemma, sim in result.neighbors_used.neighbors) or "-"
        print(f"{token.paragraph_index}\t{token.token_index}\t{token.lemma}"
              f"\t{token.pos}\t{result.status.value}\t{chosen}\t{score}\t{neighbors}")
    return 0


def _parse_k_list(spec: str) -> list[int]:
    try:
        values = [int(item) for item in spec.split(",") if item.strip()]
    except ValueError:
        raise ValueError(f"bad --k-list value {spec!r}") from None
    if not values or any(k < 1 for k in values):
        raise ValueError(f"bad --k-list value {spec!r}")
    return values


def _parse_subset_spec(spec: str) -> list[tuple[float, int]]:
    subsets = []
    for item in spec.split(","):
        item = item.strip()
        if not item:
            continue
        fraction_s, _, seed_s = item.partition(":")
        try:
            subsets.append((float(fraction_s), int(seed_s)))
        except ValueError:
            raise ValueError(f"bad --subset-spec entry {item!r}") from None
    if not subsets:
        raise ValueError("empty --subset-spec")
    return subsets


def cmd_evaluate(args) -> int:
    network = load_network(args.network)
    lexicon = load_pos_lexicon(args.lexicon)
    gold = load_gold(args.gold)
    corpus = _corpus_documents(Path(args.corpus))
    scorer = Scorer.from_name(args.scorer)
    config = _scorer_config(args)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    reports = sweep(network, args.triples, lexicon, corpus, gold, [scorer],
                    _parse_k_list(args.k_list), _parse_subset_spec(args.subset_spec),
                    workdir=out_dir / "subsets", config=config)
    for report in reports:
        write_cell_report(report, out_dir / cell_report_filename(report.config))
    write_aggregate_table(reports, out_dir / "aggregate.tsv")
    print(f"wrote {len(reports)} cell reports and aggregate.tsv to {out_dir}")
    return 0


def cmd_coverage(args) -> int:
    network = load_network(args.network)
    corpus = _corpus_documents(Path(args.corpus))
    tokens = [token for _, document in sorted(corpus.items()) for token in document]
    report = coverage(tokens, network)
    if args.out:
        write_coverage_report(report, args.out)
        print(f"wrote coverage report to {args.out}")
    else:
        overall = report.overall
        for pos in sorted(report.per_pos):
            row = report.per_pos[pos]
            print(f"{pos}\ttokens={row.tokens.total}\tglobal={row.tokens.global_pct:.2f}"
                  f"\tpolysemous={row.tokens.polysemous_pct:.2f}")
        print(f"total\ttokens={overall.tokens.total}\tglobal={overall.tokens.global_pct:.2f}"
              f"\tpolysemous={overall.tokens.polysemous_pct:.2f}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lexsense",
                                     description="Knowledge-based word sense disambiguation")
    commands = parser.add_subparsers(dest="command", required=True)

    sample = commands.add_parser("sample-triples",
                                 help="write a seeded random subset of a triple file")
    sample.add_argument("--in", dest="infile", required=True)
    sample.add_argument("--out", required=True)
    sample.add_argument("--fraction", type=float, required=True)
    sample.add_argument("--seed", type=int, required=True)
    sample.set_defaults(func=cmd_sample_triples)

    neighbors = commands.add_parser("neighbors",
                                    help="rank candidate lemmas by Lin similarity")
    neighbors.add_argument("--triples", required=True)
    neighbors.add_argument("--lexicon", required=True)
    neighbors.add_argument("--word", required=True)
    neighbors.add_argument("--pos", required=True, choices=["noun", "verb", "adj", "adv"])
    neighbors.add_argument("--k", type=int, required=True)
    neighbors.add_argument("--candidates", required=True,
                           help="comma-separated candidate lemmas")
    neighbors.set_defaults(func=cmd_neighbors)

    senses_cmd = commands.add_parser("senses", help="list the senses of a word")
    senses_cmd.add_argument("--network", required=True)
    senses_cmd.add_argument("--word", required=True)
    senses_cmd.add_argument("--pos", required=True, choices=["noun", "verb", "adj", "adv"])
    senses_cmd.set_defaults(func=cmd_senses)

    disamb = commands.add_parser("disambiguate",
                                 help="disambiguate the content words of a corpus file")
    disamb.add_argument("--network", required=True)
    disamb.add_argument("--triples", required=True)
    disamb.add_argument("--lexicon", required=True)
    disamb.add_argument("--corpus", required=True)
    disamb.add_argument("--k", type=int, default=3)
    disamb.add_argument("--targets", default=None,
                        help="restrict to these comma-separated lemmas")
    _add_scorer_options(disamb)
    disamb.set_defaults(func=cmd_disambiguate)

    evaluate = commands.add_parser("evaluate",
                                   help="run the evaluation grid against gold annotations")
    evaluate.add_argument("--network", required=True)
    evaluate.add_argument("--triples", required=True)
    evaluate.add_argument("--lexicon", required=True)
    evaluate.add_argument("--corpus", required=True, help="corpus file or directory")
    evaluate.add_argument("--gold", required=True)
    evaluate.add_argument("--k-list", default="3,5,7")
    evaluate.add_argument("--subset-spec", default="1.0:0",
                          help="comma-separated fraction:seed cells, e.g. 0.3:1,0.5:1,1.0:0")
    evaluate.add_argument("--out", required=True, help="report directory")
    _add_scorer_options(evaluate)
    evaluate.set_defaults(func=cmd_evaluate)

    coverage_cmd = commands.add_parser("coverage",
                                       help="sense coverage of a corpus against the network")
    coverage_cmd.add_argument("--network", required=True)
    coverage_cmd.add_argument("--corpus", required=True, help="corpus file or directory")
    coverage_cmd.add_argument("--out", default=None, help="write a TSV instead of stdout")
    coverage_cmd.set_defaults(func=cmd_coverage)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (LexsenseError, OSError, ValueError) as exc:
        print(f"lexsense: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
