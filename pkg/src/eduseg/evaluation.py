"""Boundary word-pair evaluation of discourse segmentations.

Every boundary between two adjacent segments is summarized by the pair
(last word of the left segment, first word of the right segment),
punctuation ignored.  A candidate segmentation is scored against a
reference by the size of the multiset intersection of the two pair lists:

    precision = common / |candidate|
    recall    = common / |reference|
    f_score   = 2 * P * R / (P + R)
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .segmenter import SegmentedDocument
from .textproc import APOSTROPHES, PUNCT, Token, normalize_form

REFERENCE = "REFERENCE"
CANDIDATE = "CANDIDATE"


class UnknownDocumentError(KeyError):
    def __init__(self, ids: Iterable[str]):
        self.ids = sorted(ids)
        super().__init__(f"candidate documents without a reference: {', '.join(self.ids)}")

    def __str__(self) -> str:
        return self.args[0]


@dataclass(frozen=True)
class BoundaryPair:
    left: str
    right: str

    def __post_init__(self):
        object.__setattr__(self, "left", normalize_form(self.left.strip()))
        object.__setattr__(self, "right", normalize_form(self.right.strip()))
        if not self.left or not self.right:
            raise ValueError("boundary pair words must be non-empty")

    def __str__(self) -> str:
        return f"[{self.left} -- {self.right}]"


@dataclass(frozen=True)
class BoundaryPairList:
    pairs: tuple[BoundaryPair, ...]
    doc_id: str = ""
    role: str = CANDIDATE

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def counts(self) -> Counter:
        return Counter(self.pairs)

    @classmethod
    def of(cls, pairs: Iterable[tuple[str, str]], doc_id: str = "", role: str = CANDIDATE) -> "BoundaryPairList":
        return cls(tuple(BoundaryPair(l, r) for l, r in pairs), doc_id, role)


@dataclass(frozen=True)
class EvalReport:
    n_common: int
    n_candidate: int
    n_reference: int
    precision: float = field(init=False)
    recall: float = field(init=False)
    f_score: float = field(init=False)

    def __post_init__(self):
        p = self.n_common / self.n_candidate if self.n_candidate else 0.0
        r = self.n_common / self.n_reference if self.n_reference else 0.0
        f = 2 * p * r / (p + r) if p + r else 0.0
        object.__setattr__(self, "precision", p)
        object.__setattr__(self, "recall", r)
        object.__setattr__(self, "f_score", f)

    def __add__(self, other: "EvalReport") -> "EvalReport":
        return EvalReport(
            self.n_common + other.n_common,
            self.n_candidate + other.n_candidate,
            self.n_reference + other.n_reference,
        )

    def to_dict(self) -> dict:
        return {
            "n_common": self.n_common,
            "n_candidate": self.n_candidate,
            "n_reference": self.n_reference,
            "precision": self.precision,
            "recall": self.recall,
            "f_score": self.f_score,
            "rounded": {
                "precision": round(self.precision, 3),
                "recall": round(self.recall, 3),
                "f_score": round(self.f_score, 3),
            },
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)


EMPTY_REPORT = EvalReport(0, 0, 0)


# -- extraction ----------------------------------------------------------------


def _words(tokens: Sequence[Token]) -> list[Token]:
    return [t for t in tokens if t.pos != PUNCT]


def _head_word(words: Sequence[Token]) -> str:
    # an elided clitic glued to its host ("qu'une") counts as one word
    first = words[0]
    if first.norm[-1] in APOSTROPHES and len(words) > 1 and words[1].char_start == first.char_end:
        return first.norm + words[1].norm
    return first.norm


def extract_pairs(doc: SegmentedDocument, doc_id: str = "", role: str = CANDIDATE) -> BoundaryPairList:
    """One boundary pair per pair of adjacent segments.

    Segments made only of punctuation are folded into the preceding one
    (or dropped when they open the document).
    """
    groups: list[list[Token]] = []
    for seg in doc.segments:
        words = _words(doc.tokens(seg))
        if words:
            groups.append(words)
    pairs = tuple(BoundaryPair(left[-1].norm, _head_word(right)) for left, right in zip(groups, groups[1:]))
    return BoundaryPairList(pairs, doc_id, role)


# -- scoring -------------------------------------------------------------------


def common_count(reference: BoundaryPairList, candidate: BoundaryPairList) -> int:
    return sum((reference.counts() & candidate.counts()).values())


def score(reference: BoundaryPairList, candidate: BoundaryPairList) -> EvalReport:
    return EvalReport(common_count(reference, candidate), len(candidate), len(reference))


def agreement(a: BoundaryPairList, b: BoundaryPairList) -> tuple[EvalReport, EvalReport]:
    """Score ``b`` against ``a`` and ``a`` against ``b``."""
    return score(a, b), score(b, a)


@dataclass(frozen=True)
class CorpusReport:
    total: EvalReport
    per_document: dict[str, EvalReport]

    def to_dict(self) -> dict:
        out = self.total.to_dict()
        out["documents"] = {k: v.to_dict() for k, v in self.per_document.items()}
        return out


def corpus_report(
    refs: Mapping[str, BoundaryPairList], cands: Mapping[str, BoundaryPairList]
) -> CorpusReport:
    """Micro-averaged scores over documents.

    Counts are summed over documents before computing P/R/F.  A reference
    document with no candidate counts as an empty candidate list.
    """
    unknown = set(cands) - set(refs)
    if unknown:
        raise UnknownDocumentError(unknown)
    empty = BoundaryPairList(())
    per_doc = {doc_id: score(refs[doc_id], cands.get(doc_id, empty)) for doc_id in sorted(refs)}
    total = sum(per_doc.values(), EMPTY_REPORT)
    return CorpusReport(total, per_doc)


def corpus_agreement(
    a: Mapping[str, BoundaryPairList], b: Mapping[str, BoundaryPairList]
) -> tuple[CorpusReport, CorpusReport]:
    """Two-way agreement between annotators over a shared document set."""
    if set(a) != set(b):
        raise UnknownDocumentError(set(a) ^ set(b))
    return corpus_report(a, b), corpus_report(b, a)


def comparison_table(rows: Mapping[str, EvalReport], label: str = "System") -> str:
    """Aligned text table with F-score, P and R columns, one row per system."""
    width = max([len(label)] + [len(name) for name in rows])
    lines = [f"{label:>{width}} | {'F-score':>7} {'P':>7} {'R':>7}", "-" * (width + 27)]
    for name, rep in rows.items():
        lines.append(f"{name:>{width}} | {rep.f_score:7.3f} {rep.precision:7.3f} {rep.recall:7.3f}")
    return "\n".join(lines) + "\n"


# -- pair files ----------------------------------------------------------------


def parse_pairs(lines: Iterable[str], doc_id: str = "", role: str = REFERENCE) -> BoundaryPairList:
    """Read ``left<TAB>right`` lines; ``#`` comments and blank lines are skipped."""
    pairs = []
    for lineno, line in enumerate(lines, 1):
        line = line.rstrip("\r\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise ValueError(f"pair line {lineno}: expected 'left<TAB>right', got {line!r}")
        pairs.append(BoundaryPair(parts[0], parts[1]))
    return BoundaryPairList(tuple(pairs), doc_id, role)


def read_pairs(path: str | Path, doc_id: str | None = None, role: str = REFERENCE) -> BoundaryPairList:
    path = Path(path)
    with open(path, encoding="utf-8") as fh:
        return parse_pairs(fh, doc_id if doc_id is not None else document_id(path), role)


def format_pairs(pairs: BoundaryPairList) -> str:
    return "".join(f"{p.left}\t{p.right}\n" for p in pairs)


def document_id(path: str | Path) -> str:
    """Document key of a file: its name up to the first dot."""
    return Path(path).name.split(".")[0]
