"""Boundary-pair evaluation of the wik1_01 example.

    python demos/02_worked_evaluation.py
"""

from pathlib import Path

from eduseg import bundled_lexicon, extract_pairs, parse_segments, read_pairs, score, segment

FIX = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "paper"

reference = read_pairs(FIX / "wik1_01.ref.pairs")
candidate = read_pairs(FIX / "wik1_01.cand.pairs")
print("reference pairs:", ", ".join(map(str, reference)))
print("candidate pairs:", ", ".join(map(str, candidate)))

report = score(reference, candidate)
print(f"\ncommon={report.n_common}  P={report.precision:.3f}  R={report.recall:.3f}  F={report.f_score:.3f}")

# The same reference pairs can be rebuilt from the bracketed reference text.
ref_doc = parse_segments((FIX / "wik1_01.ref.seg").read_text(encoding="utf-8"))
print("\nextracted from reference text:", ", ".join(map(str, extract_pairs(ref_doc))))

# And our own marker-only segmentation of the raw text:
raw = (FIX / "wik1_01.txt").read_text(encoding="utf-8")
ours = extract_pairs(segment(raw, bundled_lexicon("fr"), "mu"))
print("our mu segmentation:", ", ".join(map(str, ours)))
print(score(reference, ours).to_json(indent=2))
