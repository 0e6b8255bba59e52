"""Text preprocessing: sentence splitting, tokenization and coarse POS tagging.

Tokens carry character offsets into the document they were cut from, so a
segmentation can always be rendered back with its original spacing.

The coarse tagset is deliberately tiny (``VERB``, ``NOUN``, ``PUNCT``,
``OTHER``): the merge rules of the segmenter only ever ask whether a span
contains a verb or a noun.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Iterable, Iterator, Sequence

VERB = "VERB"
NOUN = "NOUN"
PUNCT = "PUNCT"
OTHER = "OTHER"
COARSE_TAGS = frozenset({VERB, NOUN, PUNCT, OTHER})

APOSTROPHES = "'’"

# Words whose inner apostrophe is not an elision boundary.
UNSPLIT_ELISIONS = frozenset(
    {"aujourd'hui", "presqu'île", "quelqu'un", "quelqu'une", "prud'homme", "prud'hommes"}
)

ABBREVIATIONS = frozenset(
    {
        "m.", "mm.", "mme.", "mmes.", "mlle.", "mlles.", "dr.", "pr.", "me.",
        "st.", "ste.", "etc.", "cf.", "ex.", "p.", "pp.", "vol.", "chap.",
        "fig.", "art.", "av.", "bd.", "env.", "n.", "no.", "réf.", "éd.",
        "coll.", "op.", "cit.", "ibid.", "i.e.", "e.g.", "c.-à-d.", "c.à.d.",
    }
)

_SENT_FINAL = ".!?…"
_CLOSERS = "\"'»”’)]}"
_OPENERS = "\"'«“‘([{"
_PARAGRAPH = re.compile(r"\n[ \t\r\f\v]*\n\s*")
_SENT_BREAK = re.compile(
    r"[%s]+(?:[%s]|\s+[»”)\]}])*(?=\s+[%s\w])"
    % (re.escape(_SENT_FINAL), re.escape(_CLOSERS), re.escape(_OPENERS))
)
_CHUNK = re.compile(r"\S+")


class AlignmentError(ValueError):
    """Pre-tagged tokens do not line up with the tokenizer output."""

    def __init__(self, sentence: int, token: int, detail: str):
        super().__init__(f"alignment error at sentence {sentence}, token {token}: {detail}")
        self.sentence = sentence
        self.token = token


def normalize_form(word: str) -> str:
    """Lowercase, NFC-composed form with typographic apostrophes folded to ``'``."""
    return unicodedata.normalize("NFC", word).lower().replace("’", "'")


def is_punct(text: str) -> bool:
    return bool(text) and all(unicodedata.category(c).startswith("P") for c in text)


@dataclass(frozen=True)
class Token:
    surface: str
    norm: str
    pos: str | None
    char_start: int
    char_end: int

    def with_pos(self, pos: str) -> "Token":
        return replace(self, pos=pos)


@dataclass(frozen=True)
class Sentence:
    tokens: tuple[Token, ...]
    index: int


# -- sentence splitting ----------------------------------------------------


def _ends_with_abbreviation(text: str, end: int) -> bool:
    start = end
    while start > 0 and not text[start - 1].isspace():
        start -= 1
    word = text[start:end].lower().lstrip(_OPENERS)
    if word in ABBREVIATIONS:
        return True
    # single capital initial, as in "J. Dupont"
    return len(word) == 2 and word[0].isalpha() and word[1] == "."


def sentence_spans(text: str) -> list[tuple[int, int]]:
    """Character spans ``(start, end)`` of the sentences of ``text``."""
    spans: list[tuple[int, int]] = []
    para_start = 0
    for brk in list(_PARAGRAPH.finditer(text)) + [None]:
        para_end = brk.start() if brk else len(text)
        cut = para_start
        for m in _SENT_BREAK.finditer(text, para_start, para_end):
            nxt = text[m.end():para_end].lstrip()
            if not nxt or not (nxt[0].isupper() or nxt[0].isdigit() or nxt[0] in _OPENERS):
                continue
            if text[m.start()] == "." and m.end() - m.start() == 1 and _ends_with_abbreviation(text, m.end()):
                continue
            spans.append((cut, m.end()))
            cut = m.end()
        spans.append((cut, para_end))
        if brk:
            para_start = brk.end()
    out = []
    for start, end in spans:
        chunk = text[start:end]
        stripped = chunk.strip()
        if stripped:
            lead = len(chunk) - len(chunk.lstrip())
            out.append((start + lead, start + lead + len(stripped)))
    return out


def split_sentences(text: str) -> list[str]:
    return [text[s:e] for s, e in sentence_spans(text)]


# -- tokenization ------------------------------------------------------------


def _punct_run(s: str) -> list[str]:
    """Split a run of punctuation; repeated characters ("...", "!!") stay together."""
    return [m.group(0) for m in re.finditer(r"(.)\1*", s, re.S)]


def _split_elisions(core: str) -> list[str]:
    if normalize_form(core) in UNSPLIT_ELISIONS:
        return [core]
    pieces = []
    start = 0
    for i in range(1, len(core) - 1):
        if core[i] in APOSTROPHES and core[i - 1].isalpha() and core[i + 1].isalnum():
            pieces.append(core[start:i + 1])
            start = i + 1
    pieces.append(core[start:])
    return pieces


def _chunk_pieces(chunk: str) -> list[str]:
    lo, hi = 0, len(chunk)
    while lo < hi and is_punct(chunk[lo]):
        lo += 1
    # trailing apostrophe right after a letter is an elision mark, not punctuation
    while hi > lo and is_punct(chunk[hi - 1]) and not (
        chunk[hi - 1] in APOSTROPHES and hi - 2 >= lo and chunk[hi - 2].isalpha()
    ):
        hi -= 1
    if lo == hi:
        return _punct_run(chunk)
    return _punct_run(chunk[:lo]) + _split_elisions(chunk[lo:hi]) + _punct_run(chunk[hi:])


def tokenize(sentence: str, offset: int = 0) -> list[Token]:
    """Whitespace tokenization with punctuation detached and elided clitics split.

    ``offset`` is added to every character offset, so that tokens cut from a
    sentence inside a larger document point back into the document.
    """
    tokens = []
    for m in _CHUNK.finditer(sentence):
        pos = m.start()
        for piece in _chunk_pieces(m.group(0)):
            tag = PUNCT if is_punct(piece) else None
            tokens.append(Token(piece, normalize_form(piece), tag, offset + pos, offset + pos + len(piece)))
            pos += len(piece)
    return tokens


def process_text(text: str) -> list[Sentence]:
    """Split ``text`` into tokenized sentences (POS unset except punctuation)."""
    sentences = []
    for start, end in sentence_spans(text):
        tokens = tokenize(text[start:end], offset=start)
        if tokens:
            sentences.append(Sentence(tuple(tokens), len(sentences)))
    return sentences


# -- POS tagging -------------------------------------------------------------


class TagMap:
    """Maps fine-grained tagger labels onto the coarse tagset.

    Patterns ending in ``*`` match by prefix; the longest matching pattern
    wins and anything unmatched maps to ``OTHER``.
    """

    def __init__(self, mapping: dict[str, str]):
        bad = {v for v in mapping.values() if v not in COARSE_TAGS}
        if bad:
            raise ValueError(f"unknown coarse tags: {sorted(bad)}")
        self.exact = {k: v for k, v in mapping.items() if not k.endswith("*")}
        self.prefixes = sorted(
            ((k[:-1], v) for k, v in mapping.items() if k.endswith("*")),
            key=lambda kv: -len(kv[0]),
        )

    def __call__(self, fine: str) -> str:
        if fine in self.exact:
            return self.exact[fine]
        for prefix, coarse in self.prefixes:
            if fine.startswith(prefix):
                return coarse
        return OTHER

    @classmethod
    def from_lines(cls, lines: Iterable[str]) -> "TagMap":
        mapping = {}
        for lineno, line in enumerate(lines, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise ValueError(f"tag map line {lineno}: expected 'fine<TAB>coarse', got {line!r}")
            mapping[parts[0].strip()] = parts[1].strip().upper()
        return cls(mapping)

    @classmethod
    def from_file(cls, path: str | Path) -> "TagMap":
        with open(path, encoding="utf-8") as fh:
            return cls.from_lines(fh)


def default_tagmap(name: str = "treetagger_fr") -> TagMap:
    path = Path(__file__).parent / "data" / f"tagmap_{name}.tsv"
    return TagMap.from_file(path)


def read_pretagged(lines: Iterable[str]) -> list[list[tuple[str, str]]]:
    """Read ``surface<TAB>fine_tag`` lines; a blank line closes a sentence."""
    sentences: list[list[tuple[str, str]]] = []
    current: list[tuple[str, str]] = []
    for lineno, line in enumerate(lines, 1):
        line = line.rstrip("\r\n")
        if not line.strip():
            if current:
                sentences.append(current)
                current = []
            continue
        parts = line.split("\t")
        if len(parts) < 2:
            raise ValueError(f"pre-tagged line {lineno}: expected 'surface<TAB>tag', got {line!r}")
        current.append((parts[0], parts[1]))
    if current:
        sentences.append(current)
    return sentences


class PretaggedProvider:
    """POS source backed by externally tagged tokens (e.g. TreeTagger output).

    Alignment is checked over the flat token stream, so the external tool may
    split sentences differently; surfaces must agree token for token.
    """

    def __init__(self, tagged: Sequence[Sequence[tuple[str, str]]], tagmap: TagMap | None = None):
        self.tagged = [pair for sent in tagged for pair in sent]
        self.tagmap = tagmap or default_tagmap()

    @classmethod
    def from_file(cls, path: str | Path, tagmap: TagMap | None = None) -> "PretaggedProvider":
        with open(path, encoding="utf-8") as fh:
            return cls(read_pretagged(fh), tagmap)

    def tags(self, sentences: Sequence[Sentence]) -> list[list[str]]:
        it = iter(self.tagged)
        out = []
        for sent in sentences:
            row = []
            for j, tok in enumerate(sent.tokens):
                try:
                    surface, fine = next(it)
                except StopIteration:
                    raise AlignmentError(sent.index, j, f"pre-tagged input ended before token {tok.surface!r}") from None
                if normalize_form(surface) != tok.norm:
                    raise AlignmentError(sent.index, j, f"expected {tok.surface!r}, pre-tagged input has {surface!r}")
                row.append(self.tagmap(fine))
            out.append(row)
        leftover = sum(1 for _ in it)
        if leftover:
            last = sentences[-1] if sentences else None
            raise AlignmentError(
                last.index + 1 if last else 0, 0, f"{leftover} pre-tagged tokens left over after the text"
            )
        return out


# Suffix tables for the fallback tagger.  Checked in order: closed classes,
# then noun suffixes, then verb suffixes.
DETERMINERS = frozenset(
    "le la les l' un une des du de d' au aux ce cet cette ces mon ma mes ton ta tes son sa ses "
    "notre nos votre vos leur leurs chaque plusieurs quelques aucun aucune".split()
)
FUNCTION_WORDS = frozenset(
    "à en dans par pour sur sous avec sans vers chez entre contre depuis pendant avant après "
    "et ou mais donc or ni car que qu' qui quoi dont où si comme quand lorsque lorsqu' puisque puisqu' "
    "ne n' pas plus moins très trop assez bien aussi ainsi alors encore déjà toujours jamais "
    "il elle ils elles on je j' tu nous vous me m' te t' se s' lui y eux ceci cela ça c' "
    "ce celui celle ceux celles tout tous toute toutes même autre autres "
    "non oui là ici puis ensuite enfin cependant pourtant toutefois néanmoins".split()
)
ADJECTIVES = frozenset(
    "grand grande grands grandes petit petite petits petites bon bonne bons bonnes "
    "nouveau nouvelle nouveaux nouvelles certain certaine certains certaines "
    "premier première premiers premières dernier dernière derniers dernières "
    "beau belle beaux belles vieux vieille jeune jeunes gros grosse long longue "
    "nombreux nombreuses seul seule seuls seules haut haute mauvais mauvaise "
    "total totale totaux totales original originale originaux originales".split()
)
COMMON_VERBS = frozenset(
    "est sont était étaient sera seront serait être été suis es sommes êtes fut furent soit "
    "a ont avait avaient aura auront aurait avoir ai as avons avez eut eurent "
    "fait font faisait faire peut peuvent pouvait pouvoir doit doivent devait devoir "
    "va vont allait aller vient viennent venait venir dit disent disait dire "
    "veut veulent voulait vouloir sait savent savait savoir voit voient voir "
    "prend prennent prenait met mettent mettait faut fallait".split()
)
ADVERB_MENT = (
    "amment", "emment", "ivement", "eusement", "ellement", "alement", "ièrement", "ctement",
    "ètement", "ûrement", "iquement", "airement", "eulement", "iment", "ument", "ément",
)
NOUN_SUFFIXES = (
    "tion", "tions", "sion", "sions", "ment", "ments", "ité", "ités", "été", "étés",
    "uté", "utés", "nté", "ntés", "erté", "ertés", "isme", "ismes",
    "eur", "eurs", "age", "ages", "ance", "ances", "ence", "ences", "ure", "ures",
    "ude", "udes", "ie", "ies", "esse", "esses", "ette", "ettes", "oire", "oires",
)
VERB_SUFFIXES = (
    "aient", "ait", "èrent", "irent", "urent", "inrent", "ront", "rait", "raient", "rons",
    "rez", "ssent", "ssions", "iez", "ions", "ez", "er", "ir", "é", "ée", "és", "ées",
)


def _fallback_tag(word: str, previous: str | None, sentence_initial: bool) -> str:
    w = normalize_form(word)
    if w in COMMON_VERBS:
        return VERB
    if w in DETERMINERS or w in FUNCTION_WORDS or w in ADJECTIVES:
        return OTHER
    if not any(c.isalpha() for c in w):
        return OTHER
    if word[:1].isupper() and not sentence_initial:
        return NOUN
    if w.endswith(("ment", "ments")):
        return OTHER if w.endswith(ADVERB_MENT) and not w.endswith(("ements", "ments")) else NOUN
    if len(w) > 4 and w.endswith(NOUN_SUFFIXES):
        return NOUN
    if len(w) > 3 and w.endswith(VERB_SUFFIXES) and not w.endswith("ier"):
        return VERB
    if previous is not None and (previous in DETERMINERS or previous in ADJECTIVES):
        return NOUN
    return OTHER


class FallbackTagger:
    """Best-effort French suffix tagger.

    Only meant to let the pipeline run without an external tagger; use
    :class:`PretaggedProvider` for anything that matters.
    """

    def tags(self, sentences: Sequence[Sentence]) -> list[list[str]]:
        out = []
        for sent in sentences:
            row = []
            previous = None
            content_seen = False
            for tok in sent.tokens:
                if tok.pos == PUNCT:
                    row.append(PUNCT)
                    continue
                row.append(_fallback_tag(tok.surface, previous, not content_seen))
                previous = tok.norm
                content_seen = True
            out.append(row)
        return out


def attach_pos(sentences: Sequence[Sentence], provider) -> list[Sentence]:
    """Return copies of ``sentences`` with every token carrying a coarse tag.

    ``provider`` is anything with a ``tags(sentences)`` method returning one
    coarse tag per token.  Tokens tagged ``PUNCT`` by the tokenizer keep that
    tag; ``PUNCT`` proposed for a non-punctuation token becomes ``OTHER``.
    """
    rows = provider.tags(sentences)
    out = []
    for sent, row in zip(sentences, rows):
        if len(row) != len(sent.tokens):
            raise AlignmentError(sent.index, min(len(row), len(sent.tokens)), "tag count differs from token count")
        tokens = []
        for tok, tag in zip(sent.tokens, row):
            if tok.pos == PUNCT:
                tag = PUNCT
            elif tag == PUNCT or tag not in COARSE_TAGS:
                tag = OTHER
            tokens.append(tok.with_pos(tag))
        out.append(Sentence(tuple(tokens), sent.index))
    return out


def iter_tokens(sentences: Iterable[Sentence]) -> Iterator[Token]:
    for sent in sentences:
        yield from sent.tokens
