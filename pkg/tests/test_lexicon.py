import io

import pytest
from hypothesis import given, strategies as st

from eduseg import (
    EmptyLexiconError,
    LexiconEncodingError,
    MarkerEntry,
    MarkerLexicon,
    expand_elision,
    load_lexicon,
    load_lexicon_file,
    match_markers,
    tokenize,
)
from eduseg.lexicon import resolve_lexicon_path, validate_lines
from eduseg.textproc import Token

from .conftest import APPENDIX
from .golden_count import count_entries
from .oracles import all_matches, greedy_longest

APPENDIX_ENTRIES = 467


def entry(text):
    return MarkerEntry.from_text(text)


def toks(*words):
    out, pos = [], 0
    for w in words:
        tag = "PUNCT" if w in ",.;" else None
        out.append(Token(w, w.lower(), tag, pos, pos + len(w)))
        pos += len(w) + 1
    return out


class TestLoad:
    def test_multiword_entry(self):
        lex = load_lexicon(io.StringIO("afin de\n"))
        assert MarkerEntry(("afin", "de")) in lex.entries

    def test_blank_only_is_an_error(self):
        with pytest.raises(EmptyLexiconError):
            load_lexicon(io.StringIO("\n\n   \n"))

    def test_comments_only_is_an_error(self):
        with pytest.raises(EmptyLexiconError):
            load_lexicon(io.StringIO("# nothing here\n"))

    def test_case_duplicates_collapse(self):
        lines = ["Mais\n", "mais\n", "MAIS  \n"]
        assert len({" ".join(l.split()).lower() for l in lines}) == 1
        lex = load_lexicon(lines)
        assert lex.entries == {MarkerEntry(("mais",))}

    def test_inner_whitespace_collapsed(self):
        lex = load_lexicon(["par    contre\n"])
        assert ("par", "contre") in lex

    def test_slash_separated_records(self):
        lex = load_lexicon(["donc / mais /\n", "or\n"])
        assert {e.text for e in lex.entries} == {"donc", "mais", "or"}

    def test_undecodable_bytes(self):
        with pytest.raises(LexiconEncodingError):
            load_lexicon(io.BytesIO(b"mais\n\xff\xfe bad\n"))

    def test_bytes_stream(self):
        lex = load_lexicon(io.BytesIO("à condition d'\n".encode()))
        assert len(lex) == 2

    def test_comma_dropped_by_default(self):
        lex = load_lexicon([", /\n", "mais /\n"])
        assert (",",) not in lex
        assert (",",) in load_lexicon([", /\n"], include_comma=True)

    def test_inner_clitics_tokenized_like_text(self):
        lex = load_lexicon(["d'abord\n"])
        assert lex.entries == {MarkerEntry(("d'", "abord"))}

    def test_typographic_apostrophe(self):
        lex = load_lexicon(["près qu’\n"])
        assert ("près", "qu'") in lex and ("près", "que") in lex

    def test_max_len(self):
        lex = load_lexicon(["si\n", "tant et si bien qu'\n"])
        assert lex.max_len == 5


class TestExpandElision:
    def test_condition(self):
        assert expand_elision(entry("à condition d'")) == {entry("à condition d'"), entry("à condition de")}

    def test_no_elision(self):
        assert expand_elision(entry("mais")) == {entry("mais")}

    def test_pres_qu(self):
        assert expand_elision(entry("près qu'")) == {entry("près qu'"), entry("près que")}

    @pytest.mark.parametrize(
        "elided, full",
        [("lorsqu'", "lorsque"), ("s'", "si"), ("dans l'", "dans le"), ("puisqu'", "puisque")],
    )
    def test_other_forms(self, elided, full):
        assert entry(full) in expand_elision(entry(elided))

    def test_elided_flag(self):
        assert entry("afin d'").elided
        assert not entry("d'abord").elided


class TestAppendix:
    def test_golden_count(self, appendix_lexicon):
        assert count_entries(APPENDIX) == APPENDIX_ENTRIES
        assert len(appendix_lexicon) == APPENDIX_ENTRIES

    def test_with_comma(self):
        assert len(load_lexicon_file(APPENDIX, include_comma=True)) == APPENDIX_ENTRIES + 1
        assert count_entries(APPENDIX, include_comma=True) == APPENDIX_ENTRIES + 1

    def test_expansion_closure(self, appendix_lexicon):
        for e in appendix_lexicon.entries:
            if e.elided:
                assert expand_elision(e) <= appendix_lexicon.entries, e

    def test_paper_examples_present(self, appendix_lexicon):
        for m in ["afin de", "pour que", "donc", "quand bien même", "ensuite", "par contre", "sinon",
                  "à ce moment-là", "cependant", "subséquemment", "si", "finalement"]:
            assert m in appendix_lexicon, m
        assert "qui" not in appendix_lexicon

    def test_entries_normalized(self, appendix_lexicon):
        for e in appendix_lexicon.entries:
            assert all(w == w.strip().lower() and w for w in e.surface)

    def test_validates_clean(self):
        with open(APPENDIX, encoding="utf-8") as fh:
            assert validate_lines(fh) == []

    def test_supplement_resolves_by_name(self):
        assert "qui" in load_lexicon_file("fr_supplement")

    def test_env_search_path(self, tmp_path, monkeypatch):
        (tmp_path / "mine.txt").write_text("toutefois\n", encoding="utf-8")
        monkeypatch.setenv("EDUSEG_LEXICON_DIR", str(tmp_path))
        assert resolve_lexicon_path("mine") == tmp_path / "mine.txt"


def test_validate_reports_line_numbers():
    problems = validate_lines(["mais\n", "donc 2\n", "# c\n", "or ; ou\n"])
    assert [n for n, _ in problems] == [2, 4]


class TestMatch:
    def test_qui(self, qui_lexicon):
        tokens = tokenize("La ville d'Avignon est la capitale du Vaucluse, qui est un département")
        occ = match_markers(tokens, qui_lexicon)
        assert [(o.start_index, o.length) for o in occ] == [(10, 1)]
        assert tokens[10].surface == "qui"

    def test_absent(self, appendix_lexicon):
        assert match_markers(tokenize("bonjour"), appendix_lexicon) == []

    def test_longest_wins(self):
        lex = MarkerLexicon(frozenset({entry("de"), entry("de sorte qu'")}))
        words = ["de", "sorte", "qu'", "il"]
        oracle = greedy_longest(all_matches(words, [e.surface for e in lex.entries]))
        assert oracle == [(0, 3)]
        occ = match_markers(toks(*words), lex)
        assert [(o.start_index, o.length) for o in occ] == oracle

    def test_punctuation_never_matches(self):
        lex = load_lexicon([", /\n", "mais\n"], include_comma=False)
        assert [o.start_index for o in match_markers(toks("a", ",", "mais"), lex)] == [2]

    def test_opt_in_comma(self):
        lex = load_lexicon([", /\n"], include_comma=True)
        assert [o.start_index for o in match_markers(toks("a", ",", "b"), lex)] == [1]

    def test_case_insensitive(self, appendix_lexicon):
        occ = match_markers(tokenize("Il dort. Mais il rêve"), appendix_lexicon)
        assert [o.entry.text for o in occ] == ["mais"]


WORDS = ["de", "sorte", "qu'", "il", "mais", "ou", "bien", ","]
LEX = MarkerLexicon.from_markers(["de", "de sorte qu'", "ou bien", "ou", "mais", "bien"])


@given(st.lists(st.sampled_from(WORDS), max_size=15))
def test_matches_agree_with_oracle(words):
    tokens = toks(*words)
    occ = match_markers(tokens, LEX)
    usable = {(s, l) for s, l in all_matches(words, [e.surface for e in LEX.entries])
              if "," not in words[s:s + l]}
    assert [(o.start_index, o.length) for o in occ] == greedy_longest(usable)
    # sorted, non-overlapping, each span is an entry
    ends = 0
    for o in occ:
        assert o.start_index >= ends
        ends = o.end_index
        assert tuple(words[o.start_index:o.end_index]) in LEX
    assert occ == match_markers(tokens, LEX)
