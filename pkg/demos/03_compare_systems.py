"""Three-system comparison on the 20-document fixture corpus.

    python demos/03_compare_systems.py
"""

from pathlib import Path

from eduseg import (
    FallbackTagger,
    MarkerLexicon,
    bundled_lexicon,
    comparison_table,
    corpus_report,
    extract_pairs,
    parse_segments,
    segment,
)

CORPUS = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "corpus"

refs = {
    p.stem: extract_pairs(parse_segments(p.read_text(encoding="utf-8")), p.stem)
    for p in sorted((CORPUS / "reference").glob("*.seg"))
}
lexicon = bundled_lexicon("fr").union(MarkerLexicon.from_markers(["qui"]))

rows = {}
for name, strategy in [("Segmenter-mu", "mu"), ("Grammatical (V)", "mu-v"), ("Grammatical (V-N)", "mu-vn")]:
    cands = {
        p.stem: extract_pairs(segment(p.read_text(encoding="utf-8"), lexicon, strategy, FallbackTagger()), p.stem)
        for p in sorted((CORPUS / "text").glob("*.txt"))
    }
    report = corpus_report(refs, cands)
    rows[name] = report.total
    worst = min(report.per_document.items(), key=lambda kv: kv[1].f_score)
    print(f"{name}: weakest document {worst[0]} (F={worst[1].f_score:.3f})")

print()
print(comparison_table(rows))
# Scores are micro-averaged: counts are summed over documents first.
