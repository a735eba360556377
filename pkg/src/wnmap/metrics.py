"""Mapping quality accounting and sense-key change diagnostics."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Optional, TextIO

from .errors import ConsistencyError, SchemeMismatch
from .ingest import OFFSET, IliMap, SenseIndex, SynsetId
from .mapping import ManyMap, OneMap
from .sensekey import SenseKey, key_component_diff, parse_sense_key

__all__ = [
    "ConfusionCounts",
    "confusion",
    "SATELLITE_POS_CHANGE",
    "VOCABULARY_REMOVED",
    "UNRESOLVED",
    "LossCategory",
    "categorize_losses",
    "KeyChange",
    "detect_key_changes",
    "write_confusion",
    "write_loss_categories",
    "write_key_changes",
]


def _ratio(num: int, den: int) -> float:
    # vacuous ratios count as perfect
    return num / den if den else 1.0


@dataclass(frozen=True)
class ConfusionCounts:
    """Confusion-matrix tallies for one mapping.

    ``tp``/``fp`` count source synsets: every mapped synset is a true
    positive and every split synset a false positive. The ``*_senses``
    fields count senses instead: the chosen target's shared senses are true
    positives, the minority senses of split synsets false positives.
    ``lost`` (nomap synsets) mixes true and false negatives, so recall is
    only bracketed: all losses as false negatives for the lower bound, all
    as true negatives for the upper bound.
    """

    tp: int
    fp: int
    lost: int
    tp_senses: int
    fp_senses: int

    @property
    def precision(self) -> float:
        return _ratio(self.tp, self.tp + self.fp)

    @property
    def precision_senses(self) -> float:
        return _ratio(self.tp_senses, self.tp_senses + self.fp_senses)

    @property
    def recall_lb(self) -> float:
        return _ratio(self.tp, self.tp + self.lost)

    @property
    def recall_ub(self) -> float:
        return 1.0

    @property
    def score_lb(self) -> float:
        return self.precision * self.recall_lb

    @property
    def score_ub(self) -> float:
        return self.precision * self.recall_ub

    @property
    def f1_lb(self) -> float:
        p, r = self.precision, self.recall_lb
        return 2 * p * r / (p + r) if p + r else 0.0

    @property
    def f1_ub(self) -> float:
        p, r = self.precision, self.recall_ub
        return 2 * p * r / (p + r) if p + r else 0.0

    def lines(self) -> list[str]:
        ints = ("tp", "fp", "lost", "tp_senses", "fp_senses")
        ratios = ("precision", "recall_lb", "recall_ub", "score_lb", "score_ub",
                  "f1_lb", "f1_ub", "precision_senses")
        return [f"{n}={getattr(self, n)}" for n in ints] + [
            f"{n}={getattr(self, n):.6f}" for n in ratios
        ]


def confusion(many: ManyMap, one: OneMap) -> ConfusionCounts:
    tp = tp_senses = 0
    for source in one.genuine_sources():
        bag = many.candidates.get(source)
        target = one.mapping[source]
        if bag is None or target not in bag:
            raise ConsistencyError(f"{source} -> {target} is not backed by the many-map")
        tp += 1
        tp_senses += bag[target]
    fp_senses = 0
    for source, bag in one.splits:
        fp_senses += sum(bag.values()) - bag[one.mapping[source]]
    for source in one.nomap:
        if source not in many.candidates:
            raise ConsistencyError(f"unmapped {source} is unknown to the many-map")
    return ConfusionCounts(
        tp=tp, fp=len(one.splits), lost=len(one.nomap),
        tp_senses=tp_senses, fp_senses=fp_senses,
    )


SATELLITE_POS_CHANGE = "satellite_pos_change"
VOCABULARY_REMOVED = "vocabulary_removed"
UNRESOLVED = "unresolved"


@dataclass(frozen=True)
class LossCategory:
    synset: SynsetId
    category: str
    evidence: str


def _lemma(key: str) -> str:
    return key.partition("%")[0]


def categorize_losses(
    nomap: Iterable[SynsetId],
    src: SenseIndex,
    tgt: SenseIndex,
    src_ili: Optional[IliMap] = None,
    tgt_ili: Optional[IliMap] = None,
) -> list[LossCategory]:
    """Explain each unmapped source synset (a heuristic, not a verdict).

    * ``satellite_pos_change``: the synset's concept id also names a target
      synset, under a different POS label. Needs both ILI maps.
    * ``vocabulary_removed``: none of its lemmas occurs anywhere in the
      target index.
    * ``unresolved``: everything else.
    """
    if src.scheme != OFFSET or tgt.scheme != OFFSET:
        raise SchemeMismatch("loss categories are computed on offset-keyed indexes")
    lost = list(nomap)
    wanted = set(lost)
    keys_of: dict[SynsetId, list[str]] = defaultdict(list)
    for key, sid in src.entries.items():
        if sid in wanted:
            keys_of[sid].append(key)
    tgt_lemmas = {_lemma(k) for k in tgt.entries}

    out = []
    for sid in lost:
        if src_ili is not None and tgt_ili is not None:
            ili = src_ili.ili_for(sid)
            moved = tgt_ili.reverse.get(ili) if ili is not None else None
            if moved is not None and moved.pos != sid.pos:
                out.append(LossCategory(sid, SATELLITE_POS_CHANGE, f"{ili} -> {moved}"))
                continue
        lemmas = sorted({_lemma(k) for k in keys_of[sid]})
        surviving = [lemma for lemma in lemmas if lemma in tgt_lemmas]
        if not surviving:
            out.append(LossCategory(sid, VOCABULARY_REMOVED, "absent: " + ",".join(lemmas)))
        else:
            out.append(LossCategory(sid, UNRESOLVED, "present: " + ",".join(surviving)))
    return out


@dataclass(frozen=True)
class KeyChange:
    """A source-only key paired with a target-only key of the same lemma.

    Ambiguous lemmas carry every candidate key, comma-joined, in the key
    columns and an empty diff.
    """

    src_key: str
    tgt_key: str
    diff: tuple[tuple[str, str, str], ...]
    ambiguous: bool = False


def _changed_parts(a: SenseKey, b: SenseKey) -> list[tuple[str, str, str]]:
    diff = key_component_diff(a, b)
    names = {name for name, _, _ in diff}
    # head word and head id form one part; they also come and go with a
    # 3 <-> 5 change of adjective category, so they do not count separately
    parts = names - {"head_id"} if "head_word" in names else set(names)
    if "ss_type" in names and {a.ss_type, b.ss_type} == {3, 5}:
        parts -= {"head_word", "head_id"}
    return diff if len(parts) == 1 else []


def detect_key_changes(src: SenseIndex, tgt: SenseIndex) -> list[KeyChange]:
    """Pair keys that exist only on one side and differ in a single part.

    Pairing is per lemma. When every source-only and target-only key of a
    lemma takes part in at most one candidate pair, the pairs are reported;
    otherwise one ambiguous record lists all keys in candidate pairs.
    Without glosses, "same lemma and one changed part" stands in for "same
    word sense".
    """
    src_only: dict[str, list[str]] = defaultdict(list)
    tgt_only: dict[str, list[str]] = defaultdict(list)
    for key in src.entries.keys() - tgt.entries.keys():
        src_only[_lemma(key)].append(key)
    for key in tgt.entries.keys() - src.entries.keys():
        tgt_only[_lemma(key)].append(key)

    out = []
    for lemma in sorted(src_only.keys() & tgt_only.keys()):
        pairs = []
        for a in sorted(src_only[lemma]):
            pa = parse_sense_key(a)
            for b in sorted(tgt_only[lemma]):
                diff = _changed_parts(pa, parse_sense_key(b))
                if diff:
                    pairs.append((a, b, tuple(diff)))
        if not pairs:
            continue
        left = [p[0] for p in pairs]
        right = [p[1] for p in pairs]
        if len(set(left)) == len(left) and len(set(right)) == len(right):
            out.extend(KeyChange(a, b, diff) for a, b, diff in pairs)
        else:
            out.append(KeyChange(
                ",".join(sorted(set(left))), ",".join(sorted(set(right))), (), True,
            ))
    return out


def write_confusion(counts: ConfusionCounts, out: TextIO) -> None:
    for line in counts.lines():
        out.write(line + "\n")


def write_loss_categories(categories: Iterable[LossCategory], out: TextIO) -> None:
    for item in sorted(categories, key=lambda c: c.synset):
        out.write(f"{item.synset}\t{item.category}\t{item.evidence}\n")


def write_key_changes(changes: Iterable[KeyChange], out: TextIO) -> None:
    for change in sorted(changes, key=lambda c: (c.src_key, c.tgt_key)):
        parts = ";".join(f"{name}={a}>{b}" for name, a, b in change.diff)
        flag = "ambiguous" if change.ambiguous else "paired"
        out.write(f"{change.src_key}\t{change.tgt_key}\t{parts}\t{flag}\n")
