"""Retarget multilingual lexicon tables through a synset mapping."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, TextIO

from .errors import SchemeMismatch
from .ingest import OFFSET, LexiconTable, SynsetId
from .mapping import OneMap

__all__ = [
    "LossReport",
    "remap_lexicon",
    "merge_census",
    "LOSS_REPORT_HEADER",
    "write_loss_reports",
]

LOSS_REPORT_HEADER = (
    "lang", "synsets_before", "synsets_after", "lost", "lost_pct",
    "lemmas_before", "lemmas_after",
)


@dataclass
class LossReport:
    language: str
    synsets_before: int
    synsets_after: int
    synsets_lost: int
    lost_pct: float
    lemmas_before: int
    lemmas_after: int
    lost_ids: list[SynsetId] = field(default_factory=list)
    # rows dropped because their synset is unmapped, in input order
    dropped: LexiconTable = field(default_factory=LexiconTable)

    def tsv_row(self) -> str:
        return "\t".join((
            self.language,
            str(self.synsets_before),
            str(self.synsets_after),
            str(self.synsets_lost),
            f"{self.lost_pct:.2f}",
            str(self.lemmas_before),
            str(self.lemmas_after),
        ))


def remap_lexicon(lex: LexiconTable, one: OneMap) -> tuple[LexiconTable, LossReport]:
    """Rewrite every row's synset id through ``one.mapping``.

    All rows of a source synset move to the same target, so synsets are
    never split; several sources may share a target. A row that would repeat
    an already emitted ``(target, key, value)`` contributed by a different
    source is folded into it, and the output row's provenance lists every
    source behind it. Rows on unmapped synsets go to ``report.dropped``.
    """
    if one.scheme != OFFSET:
        raise SchemeMismatch("lexicon tables are offset-keyed; the mapping is not")
    mapping = one.mapping
    out = LexiconTable(language=lex.language, header=list(lex.header), provenance=[])
    dropped = LexiconTable(language=lex.language, header=list(lex.header))
    rows, provenance = out.rows, out.provenance
    seen: dict[tuple[SynsetId, str, str], int] = {}
    lost: dict[SynsetId, None] = {}

    for sid, key, value in lex.rows:
        target = mapping.get(sid)
        if target is None:
            lost.setdefault(sid)
            dropped.rows.append((sid, key, value))
            continue
        row = (target, key, value)
        at = seen.get(row)
        if at is not None and sid not in provenance[at]:
            provenance[at] = provenance[at] + (sid,)
            continue
        if at is None:
            seen[row] = len(rows)
        rows.append(row)
        provenance.append((sid,))

    before = len(lex.synset_ids())
    n_lost = len(lost)
    report = LossReport(
        language=lex.language,
        synsets_before=before,
        synsets_after=before - n_lost,
        synsets_lost=n_lost,
        lost_pct=100.0 * n_lost / before if before else 0.0,
        lemmas_before=len(lex.lemma_pairs()),
        lemmas_after=len(out.lemma_pairs()),
        lost_ids=list(lost),
        dropped=dropped,
    )
    return out, report


def merge_census(lex_out: LexiconTable) -> list[tuple[SynsetId, int]]:
    """Targets fed by two or more distinct source synsets, with their counts."""
    if lex_out.provenance is None:
        raise ValueError("table carries no provenance; produce it with remap_lexicon")
    sources: dict[SynsetId, set[SynsetId]] = {}
    for (target, _, _), origin in zip(lex_out.rows, lex_out.provenance):
        sources.setdefault(target, set()).update(origin)
    return sorted((t, len(s)) for t, s in sources.items() if len(s) >= 2)


def write_loss_reports(reports: Iterable[LossReport], out: TextIO) -> None:
    """TSV with one row per language, largest wordnet first."""
    out.write("\t".join(LOSS_REPORT_HEADER) + "\n")
    for report in sorted(reports, key=lambda r: (-r.synsets_before, r.language)):
        out.write(report.tsv_row() + "\n")

