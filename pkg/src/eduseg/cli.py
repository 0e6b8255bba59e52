"""Command-line interface: ``eduseg {segment,evaluate,agreement,lexicon}``."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .evaluation import (
    BoundaryPairList,
    CorpusReport,
    UnknownDocumentError,
    comparison_table,
    corpus_agreement,
    corpus_report,
    document_id,
    extract_pairs,
    read_pairs,
)
from .lexicon import (
    LexiconError,
    MarkerLexicon,
    iter_records,
    load_lexicon,
    load_lexicon_file,
    resolve_lexicon_path,
    validate_lines,
)
from .segmenter import MissingPOSError, Strategy, format_segments, parse_segments, segment
from .textproc import AlignmentError, FallbackTagger, PretaggedProvider, TagMap, default_tagmap


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    language: str = "fr"
    lexicon_paths: tuple[str, ...] = ()
    strategy: Strategy = Strategy.MU
    pos_source: str = "fallback"
    tagmap_path: str | None = None
    include_comma_marker: bool = False

    def __post_init__(self):
        object.__setattr__(self, "strategy", Strategy(self.strategy))
        if self.pos_source.startswith("pretagged:"):
            path = Path(self.pos_source.split(":", 1)[1])
            if not path.exists():
                raise UsageError(f"pre-tagged source does not exist: {path}")
        elif self.pos_source not in ("fallback", "none"):
            raise UsageError(f"--pos must be 'fallback', 'none' or 'pretagged:PATH', got {self.pos_source!r}")

    def lexicon(self) -> MarkerLexicon:
        paths = self.lexicon_paths or (self.language,)
        lex = None
        for p in paths:
            part = load_lexicon_file(p, self.language, self.include_comma_marker)
            lex = part if lex is None else lex.union(part)
        return lex

    def tagmap(self) -> TagMap:
        if self.tagmap_path:
            return TagMap.from_file(self.tagmap_path)
        return default_tagmap()

    def pos_provider(self, input_path: Path):
        if self.pos_source == "none":
            return None
        if self.pos_source == "fallback":
            return FallbackTagger()
        path = Path(self.pos_source.split(":", 1)[1])
        if path.is_dir():
            candidates = [path / f"{input_path.name}.tag", path / f"{input_path.stem}.tag"]
            found = next((c for c in candidates if c.is_file()), None)
            if found is None:
                raise UsageError(f"no pre-tagged file for {input_path} in {path}")
            path = found
        return PretaggedProvider.from_file(path, self.tagmap())


def _read_text(path: Path) -> str:
    try:
        with open(path, encoding="utf-8", newline="") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from exc
    except UnicodeDecodeError as exc:
        raise UsageError(f"{path} is not valid UTF-8: {exc}") from exc


def _write_text(path: Path, content: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(content)


def cmd_segment(args) -> int:
    config = RunConfig(
        language=args.language,
        lexicon_paths=tuple(args.lexicon or ()),
        strategy=args.strategy,
        pos_source=args.pos,
        tagmap_path=args.tagmap,
        include_comma_marker=args.include_comma_marker,
    )
    lexicon = config.lexicon()
    out_dir = Path(args.output) if args.output else None
    if out_dir:
        out_dir.mkdir(parents=True, exist_ok=True)
    summary = {}
    for name in args.inputs:
        path = Path(name)
        text = _read_text(path)
        doc = segment(text, lexicon, config.strategy, config.pos_provider(path))
        target = (out_dir or path.parent) / f"{path.name}.seg"
        _write_text(target, format_segments(doc))
        summary[str(path)] = len(doc)
    if args.json:
        print(json.dumps({"strategy": config.strategy.value, "files": summary}, ensure_ascii=False))
    else:
        for name, n in summary.items():
            print(f"{name}\t{n} segments")
    return 0


def _load_pair_lists(paths, mode: str, role: str) -> dict[str, BoundaryPairList]:
    out = {}
    for name in paths:
        path = Path(name)
        doc_id = document_id(path)
        if doc_id in out:
            raise UsageError(f"duplicate document id {doc_id!r} ({path})")
        if mode == "pairs":
            try:
                out[doc_id] = read_pairs(path, doc_id, role)
            except OSError as exc:
                raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from exc
        else:
            out[doc_id] = extract_pairs(parse_segments(_read_text(path)), doc_id, role)
    return out


def _print_report(report: CorpusReport, label: str, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report.to_dict(), ensure_ascii=False))
        return
    t = report.total
    print(comparison_table({label: t}, label="Reference"), end="")
    print(f"common={t.n_common} candidate={t.n_candidate} reference={t.n_reference}")


def cmd_evaluate(args) -> int:
    refs = _load_pair_lists(args.reference, args.mode, "REFERENCE")
    cands = _load_pair_lists(args.candidate, args.mode, "CANDIDATE")
    _print_report(corpus_report(refs, cands), "candidate", args.json)
    return 0


def cmd_agreement(args) -> int:
    a = _load_pair_lists(args.a, args.mode, "REFERENCE")
    b = _load_pair_lists(args.b, args.mode, "REFERENCE")
    a_ref, b_ref = corpus_agreement(a, b)
    if args.json:
        print(json.dumps({"a_as_reference": a_ref.to_dict(), "b_as_reference": b_ref.to_dict()}, ensure_ascii=False))
    else:
        print(comparison_table({"A": a_ref.total, "B": b_ref.total}, label="Reference"), end="")
    return 0


def cmd_lexicon(args) -> int:
    path = resolve_lexicon_path(args.path)
    with open(path, "rb") as fh:
        raw = fh.readlines()
    if args.action == "validate":
        problems = validate_lines(raw)
        n_records = sum(1 for _ in iter_records(line.decode("utf-8") for line in raw))
        for lineno, msg in problems:
            print(f"{path}:{lineno}: {msg}")
        print(f"{n_records} records, {len(problems)} problems")
        if n_records == 0:
            print(f"{path}: no entries", file=sys.stderr)
            return 1
        return 1 if problems else 0
    lex = load_lexicon(raw, args.language, args.include_comma_marker)
    if args.action == "expand":
        for entry in lex.sorted_entries():
            print(entry.text)
    else:
        print(f"entries\t{len(lex)}")
        print(f"max_len\t{lex.max_len}")
        print(f"elided\t{lex.elided_count}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="eduseg", description="Rule-based discourse segmentation and evaluation.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("segment", help="segment raw text files into EDUs")
    p.add_argument("inputs", nargs="+")
    p.add_argument("--language", default="fr")
    p.add_argument("--lexicon", action="append", metavar="PATH", help="marker list (repeatable; default: bundled list for --language)")
    p.add_argument("--strategy", choices=[s.value for s in Strategy], default="mu")
    p.add_argument("--pos", default="fallback", metavar="{pretagged:PATH,fallback,none}")
    p.add_argument("--tagmap", metavar="PATH")
    p.add_argument("--include-comma-marker", action="store_true")
    p.add_argument("--output", metavar="DIR")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_segment)

    for name, func, first, second in (
        ("evaluate", cmd_evaluate, ("-r", "--reference"), ("-c", "--candidate")),
        ("agreement", cmd_agreement, ("-a",), ("-b",)),
    ):
        p = sub.add_parser(name)
        p.add_argument(*first, nargs="+", required=True, dest=first[-1].lstrip("-"))
        p.add_argument(*second, nargs="+", required=True, dest=second[-1].lstrip("-"))
        mode = p.add_mutually_exclusive_group()
        mode.add_argument("--pairs", dest="mode", action="store_const", const="pairs")
        mode.add_argument("--segments", dest="mode", action="store_const", const="segments")
        p.set_defaults(mode="segments")
        p.add_argument("--json", action="store_true")
        p.set_defaults(func=func)

    p = sub.add_parser("lexicon", help="inspect marker lists")
    p.add_argument("action", choices=["expand", "validate", "stats"])
    p.add_argument("path")
    p.add_argument("--language", default="fr")
    p.add_argument("--include-comma-marker", action="store_true")
    p.set_defaults(func=cmd_lexicon)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, LexiconError, MissingPOSError, AlignmentError, UnknownDocumentError,
            FileNotFoundError, ValueError) as exc:
        print(f"eduseg: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
