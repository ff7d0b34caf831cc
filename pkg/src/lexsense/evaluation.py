"""Accuracy and coverage reporting against gold annotations.

Gold files are tab-separated, one annotation per line:

    document-id  paragraph-index  token-index  lemma  pos  synset-id

Positions must be unique.  Evaluation matches gold entries against
disambiguation results by (document, paragraph, token); result tokens that
carry no gold entry are ignored, and gold entries whose position produced no
result at all are tallied as missing (a POS-tagging miss upstream) instead of
failing the run.
"""

from collections import Counter
from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal
from pathlib import Path
from statistics import fmean, pstdev
from typing import Iterable, Mapping, Sequence

from .disambiguator import (AnnotatedToken, CONTENT_POS, DisambiguationResult,
                            Scorer, ScorerConfig, DEFAULT_CONFIG,
                            disambiguate_document)
from .distributional import build_ic_tables
from .errors import GoldConsistencyError, ParseError
from .semantic_network import SemanticNetwork, senses
from .triple_store import POS_TAGS, load_triples, sample_triples


@dataclass(frozen=True)
class GoldAnnotation:
    doc: str
    paragraph: int
    token: int
    lemma: str
    pos: str
    synset_id: str


def load_gold(path) -> list[GoldAnnotation]:
    annotations = []
    seen: set[tuple[str, int, int]] = set()
    with open(path, encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, 1):
            line = raw.rstrip("\r\n")
            if not line.strip():
                continue
            fields = [f.strip() for f in line.split("\t")]
            if len(fields) != 6 or any(not f for f in fields):
                raise ParseError(path, line_no, "expected 6 tab-separated columns")
            doc, paragraph_s, token_s, lemma, pos, synset_id = fields
            try:
                paragraph, token = int(paragraph_s), int(token_s)
            except ValueError:
                raise ParseError(path, line_no, "paragraph/token must be integers") from None
            if pos not in POS_TAGS:
                raise ParseError(path, line_no, f"unknown POS tag {pos!r}")
            key = (doc, paragraph, token)
            if key in seen:
                raise GoldConsistencyError(
                    f"{path}:{line_no}: duplicate gold position {key}")
            seen.add(key)
            annotations.append(GoldAnnotation(doc, paragraph, token, lemma, pos, synset_id))
    return annotations


@dataclass
class Tally:
    """Correct/total bookkeeping for one report row."""

    correct: int = 0
    total: int = 0
    missing: int = 0

    @property
    def pct(self) -> float | None:
        if self.total == 0:
            return None
        return 100.0 * self.correct / self.total


@dataclass(frozen=True)
class EvalConfig:
    scorer: str
    k: int
    subset: str
    fraction: float = 1.0
    seed: int = 0


@dataclass
class EvaluationReport:
    config: EvalConfig | None
    per_lemma: dict[str, Tally]
    per_pos: dict[str, Tally]
    overall: Tally
    lemma_pos: dict[str, str] = field(default_factory=dict)


def accuracy(results_by_doc: Mapping[str, Sequence[DisambiguationResult]],
             gold: Sequence[GoldAnnotation],
             config: EvalConfig | None = None) -> EvaluationReport:
    """Score results against gold annotations.

    A status without a matching chosen synset counts as incorrect; the
    NO_NEIGHBORS fallback can still be correct when it matches gold.  A gold
    entry whose position holds a result for a different lemma or POS means
    the gold file and the corpus disagree, which raises
    :class:`GoldConsistencyError`.
    """
    by_position: dict[tuple[str, int, int], DisambiguationResult] = {}
    for doc, results in results_by_doc.items():
        for result in results:
            position = (doc, result.token.paragraph_index, result.token.token_index)
            by_position[position] = result
    per_lemma: dict[str, Tally] = {}
    per_pos: dict[str, Tally] = {}
    overall = Tally()
    lemma_pos: dict[str, str] = {}
    seen: set[tuple[str, int, int]] = set()
    for entry in gold:
        position = (entry.doc, entry.paragraph, entry.token)
        if position in seen:
            raise GoldConsistencyError(f"duplicate gold position {position}")
        seen.add(position)
        lemma_row = per_lemma.setdefault(entry.lemma, Tally())
        pos_row = per_pos.setdefault(entry.pos, Tally())
        lemma_pos.setdefault(entry.lemma, entry.pos)
        result = by_position.get(position)
        if result is None:
            lemma_row.missing += 1
            pos_row.missing += 1
            overall.missing += 1
            continue
        if result.token.lemma != entry.lemma or result.token.pos != entry.pos:
            raise GoldConsistencyError(
                f"gold {position} expects ({entry.lemma!r}, {entry.pos!r}) but the "
                f"result there is ({result.token.lemma!r}, {result.token.pos!r})")
        correct = int(result.chosen == entry.synset_id)
        for row in (lemma_row, pos_row, overall):
            row.total += 1
            row.correct += correct
    return EvaluationReport(config=config, per_lemma=per_lemma, per_pos=per_pos,
                            overall=overall, lemma_pos=lemma_pos)


@dataclass
class CoverageCounts:
    polysemous: int = 0
    monosemous: int = 0
    unrecognized: int = 0

    @property
    def recognized(self) -> int:
        return self.polysemous + self.monosemous

    @property
    def total(self) -> int:
        return self.recognized + self.unrecognized

    @property
    def global_pct(self) -> float:
        return 100.0 * self.recognized / self.total if self.total else 0.0

    @property
    def polysemous_pct(self) -> float:
        return 100.0 * self.polysemous / self.recognized if self.recognized else 0.0


@dataclass
class PosCoverage:
    tokens: CoverageCounts = field(default_factory=CoverageCounts)
    types: CoverageCounts = field(default_factory=CoverageCounts)


@dataclass
class CoverageReport:
    per_pos: dict[str, PosCoverage]
    overall: PosCoverage


def coverage(corpus: Iterable[AnnotatedToken], network: SemanticNetwork) -> CoverageReport:
    """Classify content tokens/types as polysemous, monosemous or unrecognized."""
    token_counts: Counter[tuple[str, str]] = Counter()
    for token in corpus:
        if token.pos in CONTENT_POS:
            token_counts[(token.lemma, token.pos)] += 1
    per_pos: dict[str, PosCoverage] = {}
    overall = PosCoverage()
    for (lemma, pos), occurrences in sorted(token_counts.items()):
        sense_count = len(senses(network, lemma, pos))
        if sense_count >= 2:
            bucket = "polysemous"
        elif sense_count == 1:
            bucket = "monosemous"
        else:
            bucket = "unrecognized"
        row = per_pos.setdefault(pos, PosCoverage())
        for counts, step in ((row.tokens, occurrences), (row.types, 1),
                             (overall.tokens, occurrences), (overall.types, 1)):
            setattr(counts, bucket, getattr(counts, bucket) + step)
    return CoverageReport(per_pos=per_pos, overall=overall)


def aggregate(values: Sequence[float]) -> tuple[float, float]:
    """Arithmetic mean and population standard deviation (N divisor)."""
    if not values:
        raise ValueError("aggregate() needs at least one value")
    return fmean(values), pstdev(values)


def subset_label(fraction: float, seed: int) -> str:
    return f"{fraction:g}:{seed}"


def sweep(network: SemanticNetwork, triples_path, pos_lexicon: dict[str, str],
          corpus_by_doc: Mapping[str, Sequence[AnnotatedToken]],
          gold: Sequence[GoldAnnotation], scorers: Sequence[Scorer],
          k_values: Sequence[int], subsets: Sequence[tuple[float, int]], *,
          workdir, config: ScorerConfig = DEFAULT_CONFIG) -> list[EvaluationReport]:
    """Run the full evaluation grid: scorers x subsets x k.

    Each (fraction, seed) subset is sampled once into ``workdir`` and shared
    by every k; the grid order of the returned reports is deterministic.
    """
    workdir = Path(workdir)
    workdir.mkdir(parents=True, exist_ok=True)
    targets = {entry.lemma for entry in gold}
    reports = []
    for scorer in scorers:
        for fraction, seed in subsets:
            label = subset_label(fraction, seed)
            subset_path = workdir / f"triples_f{fraction:g}_s{seed}.tsv"
            sample_triples(triples_path, subset_path, fraction, seed)
            index = load_triples(subset_path, pos_lexicon)
            tables = build_ic_tables(index)
            for k in k_values:
                results = {doc: disambiguate_document(network, index, tables, tokens,
                                                      scorer, k, target_filter=targets,
                                                      config=config)
                           for doc, tokens in corpus_by_doc.items()}
                eval_config = EvalConfig(scorer=scorer.value, k=k, subset=label,
                                         fraction=fraction, seed=seed)
                reports.append(accuracy(results, gold, config=eval_config))
    return reports


def format_pct(value: float | None) -> str:
    """Two decimals, half-up; '-' for undefined values."""
    if value is None:
        return "-"
    return str(Decimal(repr(float(value))).quantize(Decimal("0.01"), ROUND_HALF_UP))


def cell_report_filename(config: EvalConfig) -> str:
    slug = config.subset.replace(":", "-s")
    return f"report_{config.scorer}_f{slug}_k{config.k}.tsv"


def write_cell_report(report: EvaluationReport, path) -> Path:
    """One TSV per grid cell: per-lemma, per-POS and overall accuracy rows."""
    path = Path(path)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("scope\tname\tpos\tcorrect\ttotal\tmissing\taccuracy\n")
        for lemma in sorted(report.per_lemma):
            row = report.per_lemma[lemma]
            pos = report.lemma_pos.get(lemma, "-")
            fh.write(f"lemma\t{lemma}\t{pos}\t{row.correct}\t{row.total}"
                     f"\t{row.missing}\t{format_pct(row.pct)}\n")
        for pos in sorted(report.per_pos):
            row = report.per_pos[pos]
            fh.write(f"pos\t{pos}\t{pos}\t{row.correct}\t{row.total}"
                     f"\t{row.missing}\t{format_pct(row.pct)}\n")
        row = report.overall
        fh.write(f"overall\t-\t-\t{row.correct}\t{row.total}"
                 f"\t{row.missing}\t{format_pct(row.pct)}\n")
    return path


def write_aggregate_table(reports: Sequence[EvaluationReport], path) -> Path:
    """Cross-cell table: one row per subset, one column per k, per POS.

    Every row carries its mean and population std across k; mean/pstd rows
    do the same across subsets, so the bottom-right block aggregates the row
    means themselves.
    """
    cells: dict[tuple[str, str, str, int], float | None] = {}
    scorers: list[str] = []
    subsets: list[str] = []
    ks: list[int] = []
    poses: list[str] = []
    for report in reports:
        if report.config is None:
            raise ValueError("aggregate table needs reports with configs")
        cfg = report.config
        if cfg.scorer not in scorers:
            scorers.append(cfg.scorer)
        if cfg.subset not in subsets:
            subsets.append(cfg.subset)
        if cfg.k not in ks:
            ks.append(cfg.k)
        for pos, row in report.per_pos.items():
            if pos not in poses:
                poses.append(pos)
            cells[(cfg.scorer, pos, cfg.subset, cfg.k)] = row.pct
    poses.sort()

    def agg(values: list[float | None]) -> tuple[float | None, float | None]:
        present = [v for v in values if v is not None]
        if not present:
            return None, None
        mean, std = aggregate(present)
        return mean, std

    path = Path(path)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        header = ["scorer", "pos", "subset"] + [f"k={k}" for k in ks] + ["mean", "pstd"]
        fh.write("\t".join(header) + "\n")
        for scorer in scorers:
            for pos in poses:
                row_means: list[float | None] = []
                for subset in subsets:
                    values = [cells.get((scorer, pos, subset, k)) for k in ks]
                    mean, std = agg(values)
                    row_means.append(mean)
                    fields = [scorer, pos, subset] + [format_pct(v) for v in values]
                    fields += [format_pct(mean), format_pct(std)]
                    fh.write("\t".join(fields) + "\n")
                mean_cells = []
                std_cells = []
                for k in ks:
                    column = [cells.get((scorer, pos, subset, k)) for subset in subsets]
                    mean, std = agg(column)
                    mean_cells.append(mean)
                    std_cells.append(std)
                mean_mean, mean_std = agg(mean_cells)
                fields = [scorer, pos, "mean"] + [format_pct(v) for v in mean_cells]
                fields += [format_pct(mean_mean), format_pct(mean_std)]
                fh.write("\t".join(fields) + "\n")
                _, means_std = agg(row_means)
                fields = [scorer, pos, "pstd"] + [format_pct(v) for v in std_cells]
                fields += [format_pct(means_std), "-"]
                fh.write("\t".join(fields) + "\n")
    return path


def write_coverage_report(report: CoverageReport, path) -> Path:
    """Coverage table: counts and percentages per POS plus a total row."""
    path = Path(path)
    columns = ["pos", "poly_tokens", "mono_tokens", "unrec_tokens", "total_tokens",
               "poly_types", "mono_types", "unrec_types", "total_types",
               "global_pct_tokens", "poly_pct_tokens",
               "global_pct_types", "poly_pct_types"]

    def row(name: str, cov: PosCoverage) -> str:
        return "\t".join([
            name,
            str(cov.tokens.polysemous), str(cov.tokens.monosemous),
            str(cov.tokens.unrecognized), str(cov.tokens.total),
            str(cov.types.polysemous), str(cov.types.monosemous),
            str(cov.types.unrecognized), str(cov.types.total),
            format_pct(cov.tokens.global_pct), format_pct(cov.tokens.polysemous_pct),
            format_pct(cov.types.global_pct), format_pct(cov.types.polysemous_pct),
        ])

    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\t".join(columns) + "\n")
        for pos in sorted(report.per_pos):
            fh.write(row(pos, report.per_pos[pos]) + "\n")
        fh.write(row("total", report.overall) + "\n")
    return path
