"""Readers for index.sense files, ILI map tables and OMW-style lexicon tabs.

All readers take any iterable of text lines (an open file, ``io.StringIO``,
a list) and consume it exactly once.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, TextIO

from .errors import (
    DuplicateIli,
    DuplicateKey,
    DuplicateOffset,
    MalformedLine,
    SchemeMismatch,
)
from .sensekey import parse_sense_key, pos_of

__all__ = [
    "OFFSET",
    "ILI",
    "POS_TAGS",
    "SynsetId",
    "parse_synset_id",
    "SenseIndex",
    "IliMap",
    "LexiconTable",
    "is_lemma_key",
    "read_index_sense",
    "read_ili_map",
    "read_lexicon_tab",
    "write_lexicon_tab",
    "index_to_ili",
]

log = logging.getLogger(__name__)

OFFSET = "offset"
ILI = "ili"
POS_TAGS = frozenset("nvars")

_OFFSET_ID = re.compile(r"([0-9]{8})-([nvars])\Z")
_ILI_ID = re.compile(r"i([0-9]+)\Z")


class SynsetId(str):
    """A version-scoped synset identifier in its serialized form.

    Offset ids read ``OOOOOOOO-p``, ILI ids ``i<digits>``. Being a string
    keeps hashing cached and equality in C, which the joins rely on.
    Ordering is numeric within a scheme: zero-padded offsets already sort
    that way as text, and concept ids compare by digit count first.
    """

    __slots__ = ()

    @classmethod
    def offset(cls, offset: int | str, pos: str) -> "SynsetId":
        return cls(f"{int(offset):08d}-{pos}")

    @classmethod
    def ili(cls, number: int | str) -> "SynsetId":
        return cls(f"i{int(number)}")

    @property
    def scheme(self) -> str:
        return ILI if self.startswith("i") else OFFSET

    @property
    def number(self) -> int:
        return int(self[1:]) if self.startswith("i") else int(self[:8])

    @property
    def pos(self) -> str:
        return "" if self.startswith("i") else self[9:]

    def with_pos(self, pos: str) -> "SynsetId":
        return SynsetId(self[:9] + pos)

    def _order(self):
        return (len(self), str(self)) if self.startswith("i") else str(self)

    def __lt__(self, other):
        return self._order() < other._order()

    def __le__(self, other):
        return self._order() <= other._order()

    def __gt__(self, other):
        return self._order() > other._order()

    def __ge__(self, other):
        return self._order() >= other._order()

    # str subclasses lose the inherited hash once comparisons are overridden
    __hash__ = str.__hash__

    def __repr__(self) -> str:
        return f"SynsetId({str.__repr__(self)})"

    def __str__(self) -> str:
        return str.__str__(self)


def parse_synset_id(text: str) -> SynsetId:
    """Parse ``OOOOOOOO-p`` or ``i<digits>``; raises ValueError otherwise."""
    if _OFFSET_ID.match(text):
        return SynsetId(text)
    m = _ILI_ID.match(text)
    if m:
        return SynsetId.ili(m.group(1))
    raise ValueError(f"not a synset id: {text!r}")


@dataclass
class SenseIndex:
    """Sense key string -> SynsetId for one wordnet version."""

    version_label: str = ""
    scheme: str = OFFSET
    entries: dict[str, SynsetId] = field(default_factory=dict)
    # (key, kept id, rejected id) for keys seen twice with different ids
    violations: list[tuple[str, SynsetId, SynsetId]] = field(default_factory=list)
    collisions: int = 0

    def __len__(self) -> int:
        return len(self.entries)

    def synsets(self) -> dict[SynsetId, list[str]]:
        """Invert the index: synset -> its sense keys, in index order."""
        out: dict[SynsetId, list[str]] = {}
        for key, sid in self.entries.items():
            out.setdefault(sid, []).append(key)
        return out


@dataclass
class IliMap:
    forward: dict[SynsetId, SynsetId] = field(default_factory=dict)
    reverse: dict[SynsetId, SynsetId] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.forward)

    def ili_for(self, sid: SynsetId) -> Optional[SynsetId]:
        """Concept id for an offset id.

        Satellites fall back to the adjective label: a and s synsets share
        one data file, so their offsets never collide.
        """
        ili = self.forward.get(sid)
        if ili is None and sid.pos == "s":
            ili = self.forward.get(sid.with_pos("a"))
        return ili


@dataclass
class LexiconTable:
    language: str = ""
    rows: list[tuple[SynsetId, str, str]] = field(default_factory=list)
    header: list[str] = field(default_factory=list)
    # source synset(s) behind each row; filled in by remapping
    provenance: Optional[list[tuple[SynsetId, ...]]] = None

    def synset_ids(self) -> set[SynsetId]:
        return {row[0] for row in self.rows}

    def lemma_pairs(self) -> set[tuple[SynsetId, str]]:
        return {(sid, value) for sid, key, value in self.rows if is_lemma_key(key)}


def is_lemma_key(key: str) -> bool:
    return key == "lemma" or key.endswith(":lemma")


def _lines(stream: Iterable[str]) -> Iterator[tuple[int, str]]:
    for lineno, line in enumerate(stream, 1):
        yield lineno, line.rstrip("\r\n")


def read_index_sense(
    stream: Iterable[str] | TextIO,
    version_label: str = "",
    strict: bool = False,
) -> SenseIndex:
    """Read ``sense_key synset_offset sense_number tag_cnt`` lines.

    The POS of each synset comes from the key's ss_type. A key seen twice
    with different offsets is a referential-integrity violation: the first
    occurrence is kept and the clash recorded, or ``DuplicateKey`` is raised
    when ``strict``.
    """
    index = SenseIndex(version_label=version_label, scheme=OFFSET)
    entries = index.entries
    # one shared SynsetId object per synset
    interned: dict[str, SynsetId] = {}
    for lineno, line in _lines(stream):
        if not line.strip():
            continue
        fields = line.split()
        if len(fields) != 4:
            raise MalformedLine(f"expected 4 fields, got {len(fields)}", lineno)
        raw_key, offset = fields[0], fields[1]
        if len(offset) != 8 or not offset.isdigit():
            raise MalformedLine(f"bad synset offset {offset!r}", lineno)
        key = parse_sense_key(raw_key, strict=strict)
        # lenient parsing lowercased the lemma and head word
        skey = raw_key if strict else raw_key.lower()
        text = f"{offset}-{pos_of(key)}"
        sid = interned.get(text)
        if sid is None:
            sid = interned[text] = SynsetId(text)
        prev = entries.get(skey)
        if prev is None:
            entries[skey] = sid
            continue
        index.collisions += 1
        if prev != sid:
            if strict:
                raise DuplicateKey(f"line {lineno}: {skey} maps to {prev} and {sid}")
            index.violations.append((skey, prev, sid))
    if index.violations:
        log.warning(
            "%s: %d sense keys point to more than one synset",
            version_label or "index",
            len(index.violations),
        )
    return index


def read_ili_map(stream: Iterable[str] | TextIO) -> IliMap:
    """Read ``ili<TAB>offset-pos`` lines into a bijection."""
    imap = IliMap()
    for lineno, line in _lines(stream):
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 2:
            raise MalformedLine(f"expected 2 tab-separated fields, got {len(fields)}", lineno)
        try:
            ili = parse_synset_id(fields[0].strip())
            sid = parse_synset_id(fields[1].strip())
        except ValueError as exc:
            raise MalformedLine(str(exc), lineno) from None
        if ili.scheme != ILI or sid.scheme != OFFSET:
            raise MalformedLine(f"expected ili id then offset id: {line!r}", lineno)
        if imap.reverse.get(ili, sid) != sid:
            raise DuplicateIli(f"line {lineno}: {ili} already mapped to {imap.reverse[ili]}")
        if imap.forward.get(sid, ili) != ili:
            raise DuplicateOffset(f"line {lineno}: {sid} already mapped to {imap.forward[sid]}")
        imap.forward[sid] = ili
        imap.reverse[ili] = sid
    return imap


def read_lexicon_tab(stream: Iterable[str] | TextIO, language: str = "") -> LexiconTable:
    """Read an OMW tab file: ``offset-pos<TAB>key<TAB>value`` per row.

    Comment lines are kept in ``header`` and re-emitted first by
    :func:`write_lexicon_tab`; blank lines are skipped. Anything after the
    second tab stays part of the value.
    """
    table = LexiconTable(language=language)
    for lineno, line in _lines(stream):
        if line.startswith("#"):
            table.header.append(line)
            continue
        if not line.strip():
            continue
        fields = line.split("\t", 2)
        if len(fields) < 3:
            raise MalformedLine("expected 3 tab-separated fields", lineno)
        if not _OFFSET_ID.match(fields[0]):
            raise MalformedLine(f"bad synset id {fields[0]!r}", lineno)
        sid = SynsetId(fields[0])
        table.rows.append((sid, fields[1], fields[2]))
    return table


def write_lexicon_tab(table: LexiconTable, out: TextIO) -> None:
    for line in table.header:
        out.write(line + "\n")
    for sid, key, value in table.rows:
        out.write(f"{sid}\t{key}\t{value}\n")


def index_to_ili(index: SenseIndex, imap: IliMap) -> tuple[SenseIndex, int]:
    """Re-key an offset index by concept ids; returns ``(index, dropped)``.

    Entries whose synset has no concept id are dropped and counted.
    """
    if index.scheme != OFFSET:
        raise SchemeMismatch(f"index {index.version_label!r} is not offset-keyed")
    out = SenseIndex(
        version_label=index.version_label,
        scheme=ILI,
        violations=list(index.violations),
        collisions=index.collisions,
    )
    dropped = 0
    for key, sid in index.entries.items():
        ili = imap.ili_for(sid)
        if ili is None:
            dropped += 1
        else:
            out.entries[key] = ili
    return out, dropped
