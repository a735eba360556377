import io

import pytest
from hypothesis import given, settings, strategies as st

from wnmap.errors import ConsistencyError, SchemeMismatch
from wnmap.ingest import ILI, IliMap, SynsetId
from wnmap.mapping import ManyMap, OneMap, build_mapping, map_to_many, map_to_one
from wnmap.metrics import (
    SATELLITE_POS_CHANGE,
    UNRESOLVED,
    VOCABULARY_REMOVED,
    KeyChange,
    categorize_losses,
    confusion,
    detect_key_changes,
    write_confusion,
    write_key_changes,
)
from wnmap.synth import synthetic_pair

from conftest import make_index


def sid(text):
    return SynsetId(text)


def test_confusion_identity():
    src, _ = synthetic_pair(3)
    many = map_to_many(src, src)
    counts = confusion(many, map_to_one(many))
    assert counts.fp == counts.fp_senses == counts.lost == 0
    assert counts.precision == counts.precision_senses == 1.0
    assert counts.tp == len(set(src.entries.values()))
    assert counts.tp_senses == len(src)


def test_confusion_single_split():
    many = ManyMap("offset", {sid("00000001-n"): {sid("00000002-n"): 2, sid("00000003-n"): 1}})
    counts = confusion(many, map_to_one(many))
    assert (counts.tp_senses, counts.fp_senses) == (2, 1)
    assert (counts.tp, counts.fp, counts.lost) == (1, 1, 0)
    assert counts.precision_senses == pytest.approx(2 / 3)


def test_confusion_ignores_supplement_aliases():
    src = make_index({"new%5:00:00:old:00": "00012345-s"})
    many = map_to_many(src, src)
    one = build_mapping(src, src)
    assert len(one.mapping) == 2
    assert confusion(many, one).tp == 1


def test_confusion_inconsistent():
    many = ManyMap("offset", {})
    one = OneMap("offset", mapping={sid("00000001-n"): sid("00000002-n")})
    with pytest.raises(ConsistencyError):
        confusion(many, one)


def test_confusion_report_lines():
    counts = confusion(ManyMap("offset", {sid("00000001-n"): {}}),
                       map_to_one(ManyMap("offset", {sid("00000001-n"): {}})))
    out = io.StringIO()
    write_confusion(counts, out)
    keys = [line.split("=")[0] for line in out.getvalue().splitlines()]
    for needed in ("tp", "fp", "lost", "precision", "recall_lb", "recall_ub"):
        assert needed in keys


def test_paper_counts_bracket():
    # tp: mapped synsets, fp: split synsets, lost: unmapped synsets
    from wnmap.metrics import ConfusionCounts

    counts = ConfusionCounts(tp=117454, fp=44, lost=205, tp_senses=0, fp_senses=0)
    assert counts.score_lb <= 0.9989 <= counts.score_ub
    assert f"{100 * counts.f1_lb:.2f}" == "99.89"


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_sense_totals_conserved(seed):
    src, tgt = synthetic_pair(seed)
    many = map_to_many(src, tgt)
    one = map_to_one(many)
    counts = confusion(many, one)
    mapped_total = sum(sum(many.candidates[s].values()) for s in one.mapping)
    assert counts.tp_senses + counts.fp_senses == mapped_total
    minority = sum(sum(bag.values()) - max(bag.values()) for _, bag in one.splits)
    assert counts.fp_senses == minority
    assert counts.tp == len(one.mapping) and counts.lost == len(one.nomap)


def _ili(pairs):
    imap = IliMap()
    for off, ili in pairs.items():
        imap.forward[sid(off)] = sid(ili)
        imap.reverse[sid(ili)] = sid(off)
    return imap


LOSS_SRC = {
    "newfangled%5:00:00:original:00": "00000001-s",
    "darky%1:18:00::": "00000002-n",
    "darkie%1:18:00::": "00000002-n",
    "darkey%1:18:00::": "00000002-n",
    "bank%1:14:00::": "00000003-n",
    "dog%1:05:00::": "00000004-n",
    "cat%1:05:00::": "00000005-n",
}
LOSS_TGT = {
    "newfangled%3:00:00::": "00000011-a",
    "bank%1:17:00::": "00000013-n",
    "dog%1:05:00::": "00000014-n",
    "cat%1:05:00::": "00000015-n",
}


def test_categorize_losses():
    src, tgt = make_index(LOSS_SRC), make_index(LOSS_TGT)
    one = build_mapping(src, tgt)
    assert sorted(map(str, one.nomap)) == ["00000001-s", "00000002-n", "00000003-n"]
    src_ili = _ili({"00000001-s": "i1", "00000002-n": "i2", "00000003-n": "i3"})
    tgt_ili = _ili({"00000011-a": "i1", "00000013-n": "i4"})
    cats = {str(c.synset): c.category for c in categorize_losses(one.nomap, src, tgt, src_ili, tgt_ili)}
    assert cats == {
        "00000001-s": SATELLITE_POS_CHANGE,
        "00000002-n": VOCABULARY_REMOVED,
        "00000003-n": UNRESOLVED,
    }


def test_categorize_without_ili_maps():
    src, tgt = make_index(LOSS_SRC), make_index(LOSS_TGT)
    one = build_mapping(src, tgt)
    cats = {str(c.synset): c.category for c in categorize_losses(one.nomap, src, tgt)}
    assert cats["00000001-s"] == UNRESOLVED


def test_categorize_rejects_ili_indexes():
    with pytest.raises(SchemeMismatch):
        categorize_losses([], make_index({}, scheme=ILI), make_index({}, scheme=ILI))


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_every_loss_gets_one_category(seed):
    src, tgt = synthetic_pair(seed)
    one = build_mapping(src, tgt)
    cats = categorize_losses(one.nomap, src, tgt)
    assert [c.synset for c in cats] == list(one.nomap)


SKCHG_SRC = {
    "sequoia%1:20:00::": "11640645-n",
    "stub_out%2:30:00::": "00478682-v",
    "obtrusive%3:00:00::": "01614778-a",
    "newfangled%5:00:00:original:00": "01687965-s",
    "dog%1:05:00::": "02084071-n",
}
SKCHG_TGT = {
    "sequoia%1:20:01::": "11700000-n",
    "stub_out%2:35:00::": "00500000-v",
    "obtrusive%5:00:00:noticeable:00": "01600000-s",
    "newfangled%5:00:00:new:00": "01700000-s",
    "dog%1:05:00::": "02100000-n",
}


def test_detect_key_changes_paper_examples():
    changes = detect_key_changes(make_index(SKCHG_SRC), make_index(SKCHG_TGT))
    got = {c.src_key: c for c in changes}
    assert len(changes) == 4 and not any(c.ambiguous for c in changes)
    assert got["sequoia%1:20:00::"].diff == (("lex_id", "00", "01"),)
    assert got["stub_out%2:30:00::"].diff == (("lex_filenum", "30", "35"),)
    assert ("ss_type", "3", "5") in got["obtrusive%3:00:00::"].diff
    assert got["newfangled%5:00:00:original:00"].diff == (("head_word", "original", "new"),)


def test_detect_key_changes_identity():
    src = make_index(SKCHG_SRC)
    assert detect_key_changes(src, src) == []


def test_detect_key_changes_ambiguous():
    src = make_index({"bank%1:14:00::": "00000001-n", "bank%1:14:01::": "00000002-n"})
    tgt = make_index({"bank%1:14:02::": "00000003-n"})
    (change,) = detect_key_changes(src, tgt)
    assert change.ambiguous and change.diff == ()
    assert change.src_key == "bank%1:14:00::,bank%1:14:01::"


def test_detect_key_changes_ignores_multi_part_changes():
    src = make_index({"bank%1:14:00::": "00000001-n"})
    tgt = make_index({"bank%1:17:01::": "00000002-n"})
    assert detect_key_changes(src, tgt) == []


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_detect_key_changes_symmetric(seed):
    src, tgt = synthetic_pair(seed)
    forward = {(c.src_key, c.tgt_key, c.diff, c.ambiguous) for c in detect_key_changes(src, tgt)}
    backward = {
        (c.tgt_key, c.src_key, tuple((n, b, a) for n, a, b in c.diff), c.ambiguous)
        for c in detect_key_changes(tgt, src)
    }
    assert forward == backward


def test_key_change_tsv():
    out = io.StringIO()
    write_key_changes([KeyChange("a%1:00:00::", "a%1:00:01::", (("lex_id", "00", "01"),))], out)
    assert out.getvalue() == "a%1:00:00::\ta%1:00:01::\tlex_id=00>01\tpaired\n"
