"""Segmenting one sentence with the three strategies.

Run from the repository root:

    python demos/01_segment_sentence.py
"""

from eduseg import FallbackTagger, MarkerLexicon, attach_pos, bundled_lexicon, format_segments, process_text, segment

text = "La ville d'Avignon est la capitale du Vaucluse, qui est un département du sud de la France."

# "qui" is not in the bundled French list; add it from a one-word lexicon.
lexicon = bundled_lexicon("fr").union(MarkerLexicon.from_markers(["qui"]))
print(f"lexicon: {len(lexicon)} markers, longest has {lexicon.max_len} words\n")

# The tokenizer splits elided clitics and detaches punctuation.
sentences = attach_pos(process_text(text), FallbackTagger())
print(" ".join(f"{t.surface}/{t.pos}" for t in sentences[0].tokens), "\n")

for strategy in ("mu", "mu-v", "mu-vn"):
    doc = segment(text, lexicon, strategy, FallbackTagger())
    print(f"--- {strategy}: {len(doc)} segment(s)")
    print(format_segments(doc))

# Both segments contain a verb ("est"), so the verbal rule keeps them apart;
# both contain a noun, so the verb-noun rule keeps them apart too.
