"""Brute-force reference implementations used only by the tests.

They share no code with the library beyond plain strings: sense keys are
matched by comparing every source key against every target key, and
targets are chosen by fully sorting each candidate list.
"""

import numpy as np


def id_order(text):
    """Numeric sort key for ``OOOOOOOO-p`` and ``i<digits>`` strings."""
    if text.startswith("i"):
        return (int(text[1:]), "")
    return (int(text[:8]), text[9:])


def brute_force_many(src_pairs, tgt_pairs):
    """``src_pairs``/``tgt_pairs``: lists of (sense key, synset id) strings."""
    bags = {sid: {} for _, sid in src_pairs}
    if not src_pairs or not tgt_pairs:
        return bags
    src_keys = np.array([k for k, _ in src_pairs])
    tgt_keys = np.array([k for k, _ in tgt_pairs])
    equal = src_keys[:, None] == tgt_keys[None, :]
    for i, j in zip(*np.nonzero(equal)):
        bag = bags[src_pairs[i][1]]
        target = tgt_pairs[j][1]
        bag[target] = bag.get(target, 0) + 1
    return bags


def brute_force_one(bags, tie="highest"):
    mapping, splits, nomap = {}, {}, set()
    for source, bag in bags.items():
        if not bag:
            nomap.add(source)
            continue
        best_count = max(bag.values())
        tied = [t for t, n in bag.items() if n == best_count]
        pick = max if tie == "highest" else min
        mapping[source] = pick(tied, key=id_order)
        if len(bag) > 1:
            splits[source] = dict(bag)
    return mapping, splits, nomap


def brute_force_supplement(mapping, nomap):
    out = dict(mapping)
    sources = set(mapping) | set(nomap)
    for source, target in mapping.items():
        if source.endswith("-s"):
            alias = source[:-1] + "a"
            if alias not in sources:
                out[alias] = target
    return out


def brute_force_mapping(src_pairs, tgt_pairs, tie="highest", supplement=True):
    mapping, splits, nomap = brute_force_one(brute_force_many(src_pairs, tgt_pairs), tie)
    if supplement and all(not sid.startswith("i") for _, sid in src_pairs):
        mapping = brute_force_supplement(mapping, nomap)
    return mapping, splits, nomap


def pairs(index):
    return [(k, str(v)) for k, v in index.entries.items()]


def library_result(one):
    return (
        {str(k): str(v) for k, v in one.mapping.items()},
        {str(s): {str(t): n for t, n in bag.items()} for s, bag in one.splits},
        {str(s) for s in one.nomap},
    )
