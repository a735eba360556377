"""Sense keys: ``lemma%ss_type:lex_filenum:lex_id:head_word:head_id``.

>>> key = parse_sense_key("newfangled%5:00:00:original:00")
>>> key.lemma, pos_of(key), key.head_word
('newfangled', 's', 'original')
>>> str(key)
'newfangled%5:00:00:original:00'
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from .errors import MalformedKey

__all__ = [
    "SenseKey",
    "parse_sense_key",
    "format_sense_key",
    "pos_of",
    "key_component_diff",
    "COMPONENTS",
]

SS_TYPE_POS = {1: "n", 2: "v", 3: "a", 4: "r", 5: "s"}
COMPONENTS = ("lemma", "ss_type", "lex_filenum", "lex_id", "head_word", "head_id")

_TWO_DIGITS = re.compile(r"[0-9]{2}\Z")
_WHITESPACE = re.compile(r"\s")


@dataclass(frozen=True, slots=True)
class SenseKey:
    lemma: str
    ss_type: int
    lex_filenum: int
    lex_id: int
    head_word: Optional[str] = None
    head_id: Optional[int] = None

    def __str__(self) -> str:
        return format_sense_key(self)

    @property
    def pos(self) -> str:
        return SS_TYPE_POS[self.ss_type]

    def component(self, name: str) -> str:
        """Return one component as it is written inside the key."""
        value = getattr(self, name)
        if value is None:
            return ""
        if name in ("lex_filenum", "lex_id", "head_id"):
            return f"{value:02d}"
        return str(value)


def _two_digit(field: str, name: str, raw: str) -> int:
    if not _TWO_DIGITS.match(field):
        raise MalformedKey(f"{name} must be two digits in {raw!r}")
    return int(field)


def parse_sense_key(raw: str, strict: bool = False) -> SenseKey:
    """Decompose a sense key string.

    In the default lenient mode the lemma and head word are lowercased;
    ``strict=True`` rejects uppercase instead. The lemma ends at the first
    ``%``.
    """
    if not raw or _WHITESPACE.search(raw):
        raise MalformedKey(f"sense key must be a single non-empty token: {raw!r}")
    lemma, sep, rest = raw.partition("%")
    if not sep:
        raise MalformedKey(f"missing '%' in {raw!r}")
    if not lemma:
        raise MalformedKey(f"empty lemma in {raw!r}")
    fields = rest.split(":")
    if len(fields) != 5:
        raise MalformedKey(f"expected 5 ':'-separated fields after '%' in {raw!r}")
    ss, filenum, lex_id, head_word, head_id = fields
    if len(ss) != 1 or ss not in "12345":
        raise MalformedKey(f"ss_type must be one of 1-5 in {raw!r}")
    ss_type = int(ss)

    if ss_type == 5:
        if not head_word or not head_id:
            raise MalformedKey(f"satellite key needs head word and head id: {raw!r}")
        head_num: Optional[int] = _two_digit(head_id, "head_id", raw)
    else:
        if head_word or head_id:
            raise MalformedKey(f"head fields only allowed when ss_type is 5: {raw!r}")
        head_word = None
        head_num = None

    if strict:
        if lemma != lemma.lower() or (head_word and head_word != head_word.lower()):
            raise MalformedKey(f"uppercase characters in {raw!r}")
    else:
        lemma = lemma.lower()
        if head_word:
            head_word = head_word.lower()

    return SenseKey(
        lemma=lemma,
        ss_type=ss_type,
        lex_filenum=_two_digit(filenum, "lex_filenum", raw),
        lex_id=_two_digit(lex_id, "lex_id", raw),
        head_word=head_word,
        head_id=head_num,
    )


def format_sense_key(key: SenseKey) -> str:
    head = ""
    if key.head_word is not None:
        head = f"{key.head_word}:{key.head_id:02d}"
    else:
        head = ":"
    return f"{key.lemma}%{key.ss_type}:{key.lex_filenum:02d}:{key.lex_id:02d}:{head}"


def pos_of(key: SenseKey) -> str:
    return SS_TYPE_POS[key.ss_type]


def key_component_diff(a: SenseKey, b: SenseKey) -> list[tuple[str, str, str]]:
    """List ``(component, value_in_a, value_in_b)`` for every differing part.

    Values are rendered the way they appear in the key, so a lex_id change
    reads ``("lex_id", "00", "01")`` and an absent head word is ``""``.
    """
    return [
        (name, a.component(name), b.component(name))
        for name in COMPONENTS
        if getattr(a, name) != getattr(b, name)
    ]
