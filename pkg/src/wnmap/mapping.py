"""Synset mapping between two wordnet versions by joining their sense indexes.

The pipeline has three linear stages:

1. :func:`map_to_many` joins the two indexes on their common sense keys and
   counts, for every source synset, how many of its senses land in each
   target synset.
2. :func:`map_to_one` keeps one target per source synset: the candidate
   holding most of the source's senses, ties broken by synset id.
3. :func:`satellite_supplement` (offset ids only) adds an ``a``-labelled
   alias for every mapped satellite, because multilingual tables rarely
   distinguish satellites from plain adjectives.
"""

from __future__ import annotations

import gc
from contextlib import contextmanager
from dataclasses import dataclass, field, replace
from typing import Iterable, TextIO

from .errors import MalformedLine, SchemeMismatch
from .ingest import OFFSET, SenseIndex, SynsetId, parse_synset_id

__all__ = [
    "HIGHEST",
    "LOWEST",
    "TIE_POLICIES",
    "ManyMap",
    "OneMap",
    "map_to_many",
    "map_to_one",
    "satellite_supplement",
    "build_mapping",
    "sorted_bag",
    "write_mapping",
    "write_splits",
    "write_nomap",
    "read_mapping",
]

HIGHEST = "highest"
LOWEST = "lowest"
TIE_POLICIES = (HIGHEST, LOWEST)


@dataclass
class ManyMap:
    scheme: str
    # source synset -> {target synset: shared sense count}
    candidates: dict[SynsetId, dict[SynsetId, int]] = field(default_factory=dict)


@dataclass
class OneMap:
    scheme: str
    mapping: dict[SynsetId, SynsetId] = field(default_factory=dict)
    # shared sense count behind each chosen target
    counts: dict[SynsetId, int] = field(default_factory=dict)
    splits: list[tuple[SynsetId, dict[SynsetId, int]]] = field(default_factory=list)
    nomap: list[SynsetId] = field(default_factory=list)
    tie_policy: str = HIGHEST
    # adjective aliases added for satellites; also present in ``mapping``
    supplemented: set[SynsetId] = field(default_factory=set)

    def genuine_sources(self) -> list[SynsetId]:
        return [s for s in self.mapping if s not in self.supplemented]


def _check_same_scheme(src: SenseIndex, tgt: SenseIndex) -> None:
    if src.scheme != tgt.scheme:
        raise SchemeMismatch(
            f"cannot join a {src.scheme} index with a {tgt.scheme} index"
        )


def map_to_many(src: SenseIndex, tgt: SenseIndex) -> ManyMap:
    """Hash-join the two indexes on their shared sense keys.

    One pass over the source keys, each probed once in the target index.
    Every source synset gets a bag, empty when none of its keys survive.
    """
    _check_same_scheme(src, tgt)
    candidates: dict[SynsetId, dict[SynsetId, int]] = {}
    probe = tgt.entries.get
    for key, source in src.entries.items():
        bag = candidates.get(source)
        if bag is None:
            bag = candidates[source] = {}
        target = probe(key)
        if target is not None:
            bag[target] = bag.get(target, 0) + 1
    return ManyMap(scheme=src.scheme, candidates=candidates)


def _by_count_then_id(item):
    return item[1], item[0]


def _by_count_then_lowest_id(item):
    return -item[1], item[0]


def map_to_one(many: ManyMap, tie: str = HIGHEST) -> OneMap:
    """Pick the best-supported target for each source synset.

    Only a single pass (``max``/``min``) over each bag is made; sorting is
    never needed. Bags with two or more candidates are recorded as splits,
    empty bags as ``nomap``.
    """
    if tie not in TIE_POLICIES:
        raise ValueError(f"tie policy must be one of {TIE_POLICIES}, not {tie!r}")
    one = OneMap(scheme=many.scheme, tie_policy=tie)
    mapping, counts = one.mapping, one.counts
    for source, bag in many.candidates.items():
        if not bag:
            one.nomap.append(source)
            continue
        if len(bag) == 1:
            ((target, count),) = bag.items()
        else:
            if tie == HIGHEST:
                target, count = max(bag.items(), key=_by_count_then_id)
            else:
                target, count = min(bag.items(), key=_by_count_then_lowest_id)
            one.splits.append((source, dict(bag)))
        mapping[source] = target
        counts[source] = count
    return one


def satellite_supplement(one: OneMap, src: SenseIndex) -> OneMap:
    """Alias every mapped ``s`` source under the same offset with pos ``a``.

    A genuine ``(offset, a)`` source synset always keeps its own entry.
    Returns a new OneMap; ``one`` is left untouched.
    """
    if one.scheme != OFFSET or src.scheme != OFFSET:
        raise SchemeMismatch("the satellite supplement only applies to offset ids")
    out = replace(
        one,
        mapping=dict(one.mapping),
        counts=dict(one.counts),
        supplemented=set(one.supplemented),
    )
    _add_satellite_aliases(out)
    return out


def _add_satellite_aliases(one: OneMap) -> None:
    mapping, counts, added = one.mapping, one.counts, one.supplemented
    aliases = [
        (source.with_pos("a"), source)
        for source in mapping
        if source.endswith("s") and source not in added
    ]
    genuine = set(one.nomap)
    for alias, source in aliases:
        if alias in mapping or alias in genuine:
            continue
        mapping[alias] = mapping[source]
        counts[alias] = counts[source]
        added.add(alias)


@contextmanager
def gc_paused():
    """Suspend the cyclic collector while bulk-building acyclic containers.

    Its full passes scan every live object, which makes large builds
    superlinear.
    """
    enabled = gc.isenabled()
    gc.disable()
    try:
        yield
    finally:
        if enabled:
            gc.enable()


def build_mapping(
    src: SenseIndex,
    tgt: SenseIndex,
    tie: str = HIGHEST,
    supplement: bool = True,
) -> OneMap:
    """Map ``src`` synsets onto ``tgt`` synsets.

    The satellite supplement runs only for offset-keyed indexes and only
    when ``supplement`` is true; it is silently skipped for ILI ids.
    """
    with gc_paused():
        one = map_to_one(map_to_many(src, tgt), tie)
        if supplement and src.scheme == OFFSET:
            _add_satellite_aliases(one)
    return one


def sorted_bag(bag: dict[SynsetId, int], tie: str = HIGHEST) -> list[tuple[SynsetId, int]]:
    """Bag ordered by count descending, then id in tie-policy order."""
    items = sorted(bag.items(), key=lambda kv: kv[0], reverse=(tie == HIGHEST))
    items.sort(key=lambda kv: kv[1], reverse=True)
    return items


def write_mapping(one: OneMap, out: TextIO) -> None:
    for source in sorted(one.mapping):
        out.write(f"{source}\t{one.mapping[source]}\t{one.counts.get(source, 0)}\n")


def write_splits(one: OneMap, out: TextIO) -> None:
    for source, bag in sorted(one.splits, key=lambda s: s[0]):
        cells = ",".join(f"{t}:{n}" for t, n in sorted_bag(bag, one.tie_policy))
        out.write(f"{source}\t{cells}\n")


def write_nomap(one: OneMap, out: TextIO) -> None:
    for source in sorted(one.nomap):
        out.write(f"{source}\n")


def read_mapping(stream: Iterable[str] | TextIO) -> OneMap:
    """Load a mapping TSV written by :func:`write_mapping`.

    Only ``mapping`` and ``counts`` can be recovered; splits and nomap are
    not part of this file.
    """
    one = None
    for lineno, line in enumerate(stream, 1):
        line = line.rstrip("\r\n")
        if not line.strip():
            continue
        fields = line.split("\t")
        if len(fields) != 3:
            raise MalformedLine("expected src_id<TAB>tgt_id<TAB>count", lineno)
        try:
            source = parse_synset_id(fields[0])
            target = parse_synset_id(fields[1])
            count = int(fields[2])
        except ValueError as exc:
            raise MalformedLine(str(exc), lineno) from None
        if one is None:
            one = OneMap(scheme=source.scheme)
        if source.scheme != one.scheme or target.scheme != one.scheme:
            raise MalformedLine("mixed identifier schemes in mapping file", lineno)
        one.mapping[source] = target
        one.counts[source] = count
    return one if one is not None else OneMap(scheme=OFFSET)
