"""Command-line front end.

    wnmap map       --src-index A --tgt-index B --out-dir out/
    wnmap remap     --mapping out/mapping.tsv --lexicon wn-data-fra.tab --out-dir out/
    wnmap stats     --src-index A --tgt-index B [--src-ili-map .. --tgt-ili-map ..] --out-dir out/
    wnmap diff-keys --src-index A --tgt-index B --out-dir out/

Exit status: 0 on success, 2 on bad input or usage, 1 on internal errors.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence, TextIO

from .errors import InputError
from .ingest import (
    ILI,
    OFFSET,
    IliMap,
    SenseIndex,
    index_to_ili,
    read_ili_map,
    read_index_sense,
    read_lexicon_tab,
    write_lexicon_tab,
)
from .mapping import (
    HIGHEST,
    TIE_POLICIES,
    OneMap,
    build_mapping,
    map_to_many,
    map_to_one,
    read_mapping,
    satellite_supplement,
    write_mapping,
    write_nomap,
    write_splits,
)
from .metrics import (
    categorize_losses,
    confusion,
    detect_key_changes,
    write_confusion,
    write_key_changes,
    write_loss_categories,
)
from .remap import remap_lexicon, write_loss_reports

log = logging.getLogger("wnmap")

COMMANDS = ("map", "remap", "stats", "diff-keys")


@dataclass
class RunConfig:
    command: str
    out_dir: str
    src_index_path: Optional[str] = None
    tgt_index_path: Optional[str] = None
    scheme: str = OFFSET
    ili_map_paths: Optional[tuple[str, str]] = None
    tie: str = HIGHEST
    supplement: bool = True
    lexicon_paths: list[str] = field(default_factory=list)
    mapping_path: Optional[str] = None
    strict: bool = False
    plots: bool = True


def write_atomic(path: str, writer: Callable[[TextIO], None]) -> str:
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8", newline="\n") as out:
        writer(out)
    os.replace(tmp, path)
    return path


def _read_index(path: str, strict: bool) -> SenseIndex:
    with open(path, encoding="utf-8") as stream:
        index = read_index_sense(stream, version_label=path, strict=strict)
    log.info("%s: %d sense keys", path, len(index))
    return index


def _read_ili(path: str) -> IliMap:
    with open(path, encoding="utf-8") as stream:
        return read_ili_map(stream)


def _load_indexes(cfg: RunConfig) -> tuple[SenseIndex, SenseIndex]:
    src = _read_index(cfg.src_index_path, cfg.strict)
    tgt = _read_index(cfg.tgt_index_path, cfg.strict)
    if cfg.scheme == ILI:
        src_ili, tgt_ili = (_read_ili(p) for p in cfg.ili_map_paths)
        src, dropped_src = index_to_ili(src, src_ili)
        tgt, dropped_tgt = index_to_ili(tgt, tgt_ili)
        log.info("senses without a concept id: %d source, %d target",
                 dropped_src, dropped_tgt)
    return src, tgt


def _out(cfg: RunConfig, name: str) -> str:
    return os.path.join(cfg.out_dir, name)


def cmd_map(cfg: RunConfig) -> int:
    src, tgt = _load_indexes(cfg)
    many = map_to_many(src, tgt)
    one = map_to_one(many, cfg.tie)
    if cfg.supplement and cfg.scheme == OFFSET:
        one = satellite_supplement(one, src)
    counts = confusion(many, one)
    write_atomic(_out(cfg, "mapping.tsv"), lambda f: write_mapping(one, f))
    write_atomic(_out(cfg, "splits.tsv"), lambda f: write_splits(one, f))
    write_atomic(_out(cfg, "nomap.txt"), lambda f: write_nomap(one, f))
    write_atomic(_out(cfg, "confusion.txt"), lambda f: write_confusion(counts, f))
    if cfg.plots:
        from .plots import plot_mapping_summary

        plot_mapping_summary(one, _out(cfg, "mapping.png"))
    log.info("mapped %d synsets, %d splits, %d lost",
             counts.tp, len(one.splits), len(one.nomap))
    return 0


def _mapping_for_remap(cfg: RunConfig) -> OneMap:
    if cfg.mapping_path:
        with open(cfg.mapping_path, encoding="utf-8") as stream:
            return read_mapping(stream)
    src, tgt = _load_indexes(cfg)
    return build_mapping(src, tgt, cfg.tie, cfg.supplement)


def _language_of(header: list[str], path: str) -> str:
    # OMW headers read "# <name>\t<lang>\t<url>\t<licence>"
    if header:
        fields = header[0].split("\t")
        if len(fields) >= 2 and fields[1].strip():
            return fields[1].strip()
    stem = os.path.basename(path).rsplit(".", 1)[0]
    return stem.rsplit("-", 1)[-1]


def cmd_remap(cfg: RunConfig) -> int:
    one = _mapping_for_remap(cfg)
    reports = []
    for path in cfg.lexicon_paths:
        with open(path, encoding="utf-8") as stream:
            lex = read_lexicon_tab(stream)
        lex.language = _language_of(lex.header, path)
        out, report = remap_lexicon(lex, one)
        name = os.path.basename(path)
        stem = name.rsplit(".", 1)[0] if "." in name else name
        write_atomic(_out(cfg, name), lambda f: write_lexicon_tab(out, f))
        write_atomic(_out(cfg, stem + ".dropped.tab"),
                     lambda f: write_lexicon_tab(report.dropped, f))
        log.info("%s: %d of %d synsets lost (%.2f%%)", report.language,
                 report.synsets_lost, report.synsets_before, report.lost_pct)
        reports.append(report)
    write_atomic(_out(cfg, "loss_report.tsv"), lambda f: write_loss_reports(reports, f))
    if cfg.plots and reports:
        from .plots import plot_loss_reports

        plot_loss_reports(reports, _out(cfg, "loss_report.png"))
    return 0


def cmd_stats(cfg: RunConfig) -> int:
    src = _read_index(cfg.src_index_path, cfg.strict)
    tgt = _read_index(cfg.tgt_index_path, cfg.strict)
    ili_maps = None
    if cfg.ili_map_paths:
        ili_maps = tuple(_read_ili(p) for p in cfg.ili_map_paths)
    if cfg.scheme == ILI:
        m_src, _ = index_to_ili(src, ili_maps[0])
        m_tgt, _ = index_to_ili(tgt, ili_maps[1])
    else:
        m_src, m_tgt = src, tgt
    many = map_to_many(m_src, m_tgt)
    one = map_to_one(many, cfg.tie)
    counts = confusion(many, one)
    write_atomic(_out(cfg, "confusion.txt"), lambda f: write_confusion(counts, f))
    if cfg.scheme == OFFSET:
        src_ili, tgt_ili = ili_maps if ili_maps else (None, None)
        cats = categorize_losses(one.nomap, src, tgt, src_ili, tgt_ili)
        write_atomic(_out(cfg, "loss_categories.tsv"),
                     lambda f: write_loss_categories(cats, f))
    if cfg.plots:
        from .plots import plot_mapping_summary

        plot_mapping_summary(one, _out(cfg, "mapping.png"))
    return 0


def cmd_diff_keys(cfg: RunConfig) -> int:
    src = _read_index(cfg.src_index_path, cfg.strict)
    tgt = _read_index(cfg.tgt_index_path, cfg.strict)
    changes = detect_key_changes(src, tgt)
    write_atomic(_out(cfg, "key_changes.tsv"), lambda f: write_key_changes(changes, f))
    log.info("%d changed sense keys", len(changes))
    return 0


HANDLERS = {
    "map": cmd_map,
    "remap": cmd_remap,
    "stats": cmd_stats,
    "diff-keys": cmd_diff_keys,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--src-index", help="index.sense of the source version")
    common.add_argument("--tgt-index", help="index.sense of the target version")
    common.add_argument("--scheme", choices=(OFFSET, ILI), default=OFFSET)
    common.add_argument("--src-ili-map", help="ili<TAB>offset-pos table, source version")
    common.add_argument("--tgt-ili-map", help="ili<TAB>offset-pos table, target version")
    common.add_argument("--tie", choices=TIE_POLICIES, default=HIGHEST,
                        help="which synset id wins a tied count (default: highest)")
    common.add_argument("--no-supplement", action="store_true",
                        help="skip the adjective alias for satellite synsets")
    common.add_argument("--strict", action="store_true",
                        help="reject uppercase keys and duplicate sense keys")
    common.add_argument("--mapping", help="prebuilt mapping TSV (remap only)")
    common.add_argument("--lexicon", action="append", default=[],
                        help="OMW tab file to remap; repeatable")
    common.add_argument("--out-dir", required=True)
    common.add_argument("--no-plots", action="store_true", help="skip PNG figures")

    parser = argparse.ArgumentParser(
        prog="wnmap",
        description="Map synsets between wordnet versions through their sense keys.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def config_from_args(parser: argparse.ArgumentParser, args: argparse.Namespace) -> RunConfig:
    ili_paths = None
    if args.src_ili_map or args.tgt_ili_map:
        if not (args.src_ili_map and args.tgt_ili_map):
            missing = "--tgt-ili-map" if args.src_ili_map else "--src-ili-map"
            parser.error(f"{missing} is required when one ILI map is given")
        ili_paths = (args.src_ili_map, args.tgt_ili_map)
    if args.scheme == ILI and ili_paths is None:
        parser.error("--scheme ili requires --src-ili-map and --tgt-ili-map")

    have_indexes = bool(args.src_index and args.tgt_index)
    if args.command == "remap":
        if not args.mapping and not have_indexes:
            parser.error("remap requires --mapping or both --src-index and --tgt-index")
        if not args.lexicon:
            parser.error("remap requires at least one --lexicon")
        if args.scheme == ILI:
            parser.error("remap works on offset-keyed lexicons; use --scheme offset")
    elif not have_indexes:
        missing = "--src-index" if not args.src_index else "--tgt-index"
        parser.error(f"{args.command} requires {missing}")

    return RunConfig(
        command=args.command,
        out_dir=args.out_dir,
        src_index_path=args.src_index,
        tgt_index_path=args.tgt_index,
        scheme=args.scheme,
        ili_map_paths=ili_paths,
        tie=args.tie,
        supplement=not args.no_supplement,
        lexicon_paths=list(args.lexicon),
        mapping_path=args.mapping,
        strict=args.strict,
        plots=not args.no_plots,
    )


def _setup_logging() -> None:
    level = os.environ.get("WNMAP_LOG", "WARNING").upper()
    logging.basicConfig(
        level=getattr(logging, level, logging.WARNING),
        format="wnmap: %(levelname)s: %(message)s",
        stream=sys.stderr,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    _setup_logging()
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = config_from_args(parser, args)
    try:
        os.makedirs(cfg.out_dir, exist_ok=True)
        return HANDLERS[cfg.command](cfg)
    except (InputError, OSError, UnicodeDecodeError) as exc:
        print(f"wnmap: error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001
        log.debug("internal error", exc_info=True)
        print(f"wnmap: internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
