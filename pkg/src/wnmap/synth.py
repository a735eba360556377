"""Random wordnet version pairs for tests and benchmarks.

A source version is drawn first; the target is derived from it by removing
senses and whole synsets, splitting synsets two or three ways, merging
synsets, adding senses, and renumbering every offset, which is what
happens between real releases.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .ingest import OFFSET, SenseIndex, SynsetId

SS_WEIGHTS = {1: 0.55, 2: 0.15, 3: 0.1, 4: 0.05, 5: 0.15}
POS = {1: "n", 2: "v", 3: "a", 4: "r", 5: "s"}


@dataclass
class SynthConfig:
    max_synsets: int = 500
    max_senses: int = 2000
    p_drop_sense: float = 0.05
    p_drop_synset: float = 0.04
    p_split: float = 0.08
    p_merge: float = 0.04
    p_add_sense: float = 0.05
    p_shared_offset: float = 0.02
    # fixed sizes instead of random ones (benchmarks)
    n_synsets: int | None = None
    n_senses: int | None = None


class _Offsets:
    def __init__(self, rng: random.Random):
        self.rng = rng
        self.used: set[int] = set()

    def fresh(self) -> int:
        while True:
            n = self.rng.randrange(1, 10**8)
            if n not in self.used:
                self.used.add(n)
                return n


def _make_keys(rng, ss_type, count, vocab, taken):
    keys = []
    for _ in range(count):
        while True:
            lemma = rng.choice(vocab)
            head = f"{rng.choice(vocab)}:00" if ss_type == 5 else ":"
            key = f"{lemma}%{ss_type}:{rng.randrange(45):02d}:{rng.randrange(16):02d}:{head}"
            if key not in taken:
                taken.add(key)
                keys.append(key)
                break
    return keys


def synthetic_pair(
    seed: int, config: SynthConfig | None = None
) -> tuple[SenseIndex, SenseIndex]:
    cfg = config or SynthConfig()
    rng = random.Random(seed)
    n_synsets = cfg.n_synsets or rng.randint(1, cfg.max_synsets)
    n_senses = cfg.n_senses or rng.randint(n_synsets, max(n_synsets, cfg.max_senses))
    vocab = [f"w{i}" for i in range(max(8, n_senses // 3))]
    offsets = _Offsets(rng)
    taken: set[str] = set()

    ss_types = rng.choices(list(SS_WEIGHTS), weights=list(SS_WEIGHTS.values()), k=n_synsets)
    sizes = [1] * n_synsets
    for _ in range(n_senses - n_synsets):
        sizes[rng.randrange(n_synsets)] += 1

    # source synsets: (SynsetId, [keys])
    src_synsets: list[tuple[SynsetId, list[str]]] = []
    for ss, size in zip(ss_types, sizes):
        sid = SynsetId.offset(offsets.fresh(), POS[ss])
        src_synsets.append((sid, _make_keys(rng, ss, size, vocab, taken)))
    # an adjective and a satellite occasionally share one offset
    for i, (sid, keys) in enumerate(src_synsets):
        if sid.pos == "s" and rng.random() < cfg.p_shared_offset:
            adj = [j for j, (other, _) in enumerate(src_synsets) if other.pos == "a"]
            if adj:
                j = rng.choice(adj)
                src_synsets[i] = (src_synsets[j][0].with_pos("s"), keys)

    src = SenseIndex(version_label=f"synthetic-{seed}-src", scheme=OFFSET)
    for sid, keys in src_synsets:
        for key in keys:
            src.entries[key] = sid

    # target synsets are lists of keys, grouped by ss_type for merges
    groups: list[tuple[int, list[str]]] = []
    for (sid, keys), ss in zip(src_synsets, ss_types):
        if rng.random() < cfg.p_drop_synset:
            continue
        kept = [k for k in keys if rng.random() >= cfg.p_drop_sense]
        if not kept:
            continue
        if len(kept) >= 2 and rng.random() < cfg.p_split:
            rng.shuffle(kept)
            ways = min(len(kept), rng.choice((2, 2, 3)))
            cuts = sorted(rng.sample(range(1, len(kept)), ways - 1))
            parts = [kept[a:b] for a, b in zip([0] + cuts, cuts + [len(kept)])]
            for part in parts:
                groups.append((ss, part))
        else:
            groups.append((ss, kept))

    by_type: dict[int, list[int]] = {}
    for i, (ss, _) in enumerate(groups):
        by_type.setdefault(ss, []).append(i)
    for i, (ss, keys) in enumerate(groups):
        if keys and rng.random() < cfg.p_merge:
            j = rng.choice(by_type[ss])
            if j != i and groups[j][1]:
                groups[j][1].extend(keys)
                groups[i] = (ss, [])

    for ss, keys in groups:
        if keys and rng.random() < cfg.p_add_sense:
            keys.extend(_make_keys(rng, ss, rng.randint(1, 2), vocab, taken))
    for _ in range(rng.randint(0, max(1, n_synsets // 20))):
        ss = rng.choice(list(SS_WEIGHTS))
        groups.append((ss, _make_keys(rng, ss, rng.randint(1, 3), vocab, taken)))

    tgt_offsets = _Offsets(rng)
    tgt = SenseIndex(version_label=f"synthetic-{seed}-tgt", scheme=OFFSET)
    rng.shuffle(groups)
    for ss, keys in groups:
        if not keys:
            continue
        sid = SynsetId.offset(tgt_offsets.fresh(), POS[ss])
        for key in keys:
            tgt.entries[key] = sid
    return src, tgt


def scaled_pair(n_keys: int, seed: int = 0) -> tuple[SenseIndex, SenseIndex]:
    """A pair with exactly ``n_keys`` source senses, for timing runs."""
    cfg = SynthConfig(n_synsets=max(1, n_keys * 4 // 7), n_senses=n_keys)
    return synthetic_pair(seed, cfg)
