"""Lexicon loading, elision expansion and longest-match lookup.

    python demos/04_lexicon.py
"""

import io

from eduseg import MarkerEntry, bundled_lexicon, expand_elision, load_lexicon, match_markers, tokenize

lex = bundled_lexicon("fr")
print(f"{len(lex)} entries, {lex.elided_count} elided, max length {lex.max_len}")

for text in ["à condition d'", "près qu'", "s'", "mais"]:
    forms = sorted(e.text for e in expand_elision(MarkerEntry.from_text(text)))
    print(f"{text!r:18} -> {forms}")

# Longest match: "de sorte qu'" wins over "de".
small = load_lexicon(io.StringIO("de\nde sorte qu'\n"))
tokens = tokenize("Il pleut de sorte qu'il reste")
for occ in match_markers(tokens, small):
    span = tokens[occ.start_index:occ.end_index]
    print("match:", " ".join(t.surface for t in span))

# Lowercase folding and apostrophe variants are handled by normalization.
print([o.entry.text for o in match_markers(tokenize("Afin qu’il parte, Mais"), lex)])
