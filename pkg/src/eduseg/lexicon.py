"""Discourse-marker lexicons: loading, elision expansion and marker matching."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, Iterable, NamedTuple, Sequence

from .textproc import APOSTROPHES, PUNCT, Token, is_punct, tokenize

DATA_DIR = Path(__file__).parent / "data"
LEXICON_DIR_ENV = "EDUSEG_LEXICON_DIR"


class LexiconError(ValueError):
    pass


class EmptyLexiconError(LexiconError):
    pass


class LexiconEncodingError(LexiconError):
    pass


def marker_words(text: str) -> tuple[str, ...]:
    """Normalized word sequence of a marker string, tokenized like running text."""
    return tuple(tok.norm for tok in tokenize(" ".join(text.split())))


@dataclass(frozen=True, order=True)
class MarkerEntry:
    surface: tuple[str, ...]

    def __post_init__(self):
        if not self.surface:
            raise ValueError("marker entry must have at least one word")
        for w in self.surface:
            if not w or w != w.strip() or w != w.lower():
                raise ValueError(f"marker word {w!r} is not normalized")

    @classmethod
    def from_text(cls, text: str) -> "MarkerEntry":
        return cls(marker_words(text))

    @property
    def elided(self) -> bool:
        return self.surface[-1][-1] in APOSTROPHES

    @property
    def text(self) -> str:
        """Surface string with clitics re-attached ("c'est à dire qu'")."""
        out = self.surface[0]
        for w in self.surface[1:]:
            out += w if out[-1] in APOSTROPHES else " " + w
        return out

    def __len__(self) -> int:
        return len(self.surface)


def _full_form(word: str) -> str:
    # French elision drops an "e" (qu' -> que, d' -> de, l' -> le), except s' -> si
    stem = word[:-1]
    return "si" if stem == "s" else stem + "e"


def expand_elision(entry: MarkerEntry) -> set[MarkerEntry]:
    """The entry itself plus, when its final word is elided, the full form."""
    if not entry.elided:
        return {entry}
    companion = MarkerEntry(entry.surface[:-1] + (_full_form(entry.surface[-1]),))
    return {entry, companion}


class MarkerOccurrence(NamedTuple):
    start_index: int
    length: int
    entry: MarkerEntry | None = None

    @property
    def end_index(self) -> int:
        return self.start_index + self.length


@dataclass(frozen=True)
class MarkerLexicon:
    """Immutable set of markers; safe to share between threads."""

    entries: frozenset[MarkerEntry] = field(repr=False)
    language: str = "fr"
    max_len: int = field(init=False)

    def __post_init__(self):
        if not self.entries:
            raise EmptyLexiconError("lexicon has no entries")
        object.__setattr__(self, "max_len", max(len(e) for e in self.entries))
        object.__setattr__(self, "_surfaces", {e.surface: e for e in self.entries})

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, item) -> bool:
        if isinstance(item, str):
            item = marker_words(item)
        if isinstance(item, MarkerEntry):
            item = item.surface
        return tuple(item) in self._surfaces

    def get(self, words: Sequence[str]) -> MarkerEntry | None:
        return self._surfaces.get(tuple(words))

    @property
    def elided_count(self) -> int:
        return sum(e.elided for e in self.entries)

    def sorted_entries(self) -> list[MarkerEntry]:
        return sorted(self.entries)

    def union(self, other: "MarkerLexicon") -> "MarkerLexicon":
        return MarkerLexicon(self.entries | other.entries, self.language)

    @classmethod
    def from_markers(cls, markers: Iterable[str], language: str = "fr") -> "MarkerLexicon":
        """Build a lexicon from marker strings (normalized and elision-expanded)."""
        entries: set[MarkerEntry] = set()
        for m in markers:
            entries |= expand_elision(MarkerEntry.from_text(m))
        return cls(frozenset(entries), language)


def iter_records(lines: Iterable[str]) -> Iterable[tuple[int, str]]:
    """Yield ``(line_number, record)`` from a lexicon file.

    Blank lines and ``#`` comments are skipped; several records may share a
    line when separated by ``/`` (the appendix layout, one trailing ``/``).
    """
    for lineno, line in enumerate(lines, 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        for rec in stripped.split("/"):
            rec = " ".join(rec.split())
            if rec:
                yield lineno, rec


def _decoded(source: IO | Iterable) -> Iterable[str]:
    for lineno, line in enumerate(source, 1):
        if isinstance(line, bytes):
            try:
                line = line.decode("utf-8")
            except UnicodeDecodeError as exc:
                raise LexiconEncodingError(f"line {lineno} is not valid UTF-8: {exc}") from exc
        yield line.lstrip("\ufeff") if lineno == 1 else line


def load_lexicon(source: IO | Iterable, language: str = "fr", include_comma: bool = False) -> MarkerLexicon:
    """Load a marker lexicon from a line-oriented text or bytes stream.

    The bare ``,`` record is dropped unless ``include_comma`` is set.
    """
    entries: set[MarkerEntry] = set()
    for _, rec in iter_records(_decoded(source)):
        if rec == "," and not include_comma:
            continue
        words = marker_words(rec)
        if not words:
            continue
        entries |= expand_elision(MarkerEntry(words))
    if not entries:
        raise EmptyLexiconError("no markers found in lexicon source")
    return MarkerLexicon(frozenset(entries), language)


def validate_lines(lines: Iterable[str]) -> list[tuple[int, str]]:
    """Return ``(line_number, problem)`` for every malformed record."""
    problems = []
    for lineno, rec in iter_records(_decoded(lines)):
        if rec == ",":
            continue
        bad = sorted({c for c in rec if not (c.isalpha() or c in APOSTROPHES or c in " -")})
        if bad:
            problems.append((lineno, f"unexpected characters {''.join(bad)!r} in {rec!r}"))
        elif any(is_punct(w) for w in rec.split()):
            problems.append((lineno, f"punctuation-only word in {rec!r}"))
    return problems


def resolve_lexicon_path(name: str | os.PathLike) -> Path:
    """Find a lexicon by path, in ``$EDUSEG_LEXICON_DIR``, or among bundled data.

    Bare names are tried with and without a ``.txt`` suffix.
    """
    path = Path(name)
    if path.is_file():
        return path
    dirs = []
    if os.environ.get(LEXICON_DIR_ENV):
        dirs.extend(Path(d) for d in os.environ[LEXICON_DIR_ENV].split(os.pathsep) if d)
    dirs.append(DATA_DIR)
    for d in dirs:
        for cand in (d / path, d / f"{path}.txt"):
            if cand.is_file():
                return cand
    raise FileNotFoundError(f"lexicon not found: {name}")


def load_lexicon_file(path: str | os.PathLike, language: str | None = None, include_comma: bool = False) -> MarkerLexicon:
    path = resolve_lexicon_path(path)
    with open(path, "rb") as fh:
        return load_lexicon(fh, language or path.stem.split("_")[0], include_comma)


def bundled_lexicon(language: str = "fr", include_comma: bool = False) -> MarkerLexicon:
    return load_lexicon_file(DATA_DIR / f"{language}.txt", language, include_comma)


def match_markers(tokens: Sequence[Token], lexicon: MarkerLexicon) -> list[MarkerOccurrence]:
    """Greedy left-to-right longest-match marker detection.

    Matches never overlap.  A span containing punctuation only matches an
    entry whose corresponding words are punctuation themselves (the opt-in
    comma marker), so ordinary markers never swallow punctuation.
    """
    norms = [t.norm for t in tokens]
    punct = [t.pos == PUNCT or is_punct(t.surface) for t in tokens]
    out = []
    i, n = 0, len(tokens)
    while i < n:
        for length in range(min(lexicon.max_len, n - i), 0, -1):
            entry = lexicon.get(norms[i:i + length])
            if entry is None:
                continue
            if any(punct[k] and not is_punct(entry.surface[k - i]) for k in range(i, i + length)):
                continue
            out.append(MarkerOccurrence(i, length, entry))
            i += length
            break
        else:
            i += 1
    return out
