"""Rule-based discourse segmentation into elementary discourse units.

Typical use::

    from eduseg import FallbackTagger, bundled_lexicon, format_segments, segment

    doc = segment(text, bundled_lexicon("fr"), "mu-v", FallbackTagger())
    print(format_segments(doc))
"""

from .evaluation import (
    BoundaryPair,
    BoundaryPairList,
    CorpusReport,
    EvalReport,
    UnknownDocumentError,
    agreement,
    comparison_table,
    corpus_agreement,
    corpus_report,
    extract_pairs,
    parse_pairs,
    read_pairs,
    score,
)
from .lexicon import (
    EmptyLexiconError,
    LexiconEncodingError,
    LexiconError,
    MarkerEntry,
    MarkerLexicon,
    MarkerOccurrence,
    bundled_lexicon,
    expand_elision,
    load_lexicon,
    load_lexicon_file,
    match_markers,
)
from .segmenter import (
    Boundary,
    MissingPOSError,
    Segment,
    SegmentedDocument,
    Strategy,
    format_segments,
    merge_pass_v,
    merge_pass_vn,
    parse_segments,
    segment,
    segment_mu,
)
from .textproc import (
    AlignmentError,
    FallbackTagger,
    PretaggedProvider,
    Sentence,
    TagMap,
    Token,
    attach_pos,
    process_text,
    split_sentences,
    tokenize,
)

__version__ = "0.1.0"
