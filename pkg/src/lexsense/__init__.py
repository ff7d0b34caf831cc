"""Knowledge-based word sense disambiguation.

Distributional neighbours are computed from dependency triples (Lin
similarity over syntactic features); candidate senses from a semantic
network snapshot are then scored with gloss-overlap measures and the best
scoring sense wins, with connectivity degree breaking ties.
"""

from .disambiguator import (AnnotatedToken, DisambiguationResult, Scorer,
                            ScorerConfig, Status, disambiguate_document,
                            disambiguate_token, exhaustive_disambiguate,
                            load_corpus, paragraph_candidates)
from .distributional import (InformationContentTable, NeighborList,
                             build_ic_tables, information_content,
                             lin_similarity, nearest_neighbors)
from .errors import (BudgetExceededError, GoldConsistencyError, LexsenseError,
                     NetworkLoadError, ParseError, UnknownWordError)
from .evaluation import (CoverageReport, EvalConfig, EvaluationReport,
                         GoldAnnotation, accuracy, aggregate, coverage,
                         load_gold, sweep)
from .lesk import (DEFAULT_RELATION_PAIRS, lesk_base, lesk_extended,
                   lesk_variant, sequence_overlap, validate_relation_pairs)
from .semantic_network import (RelationType, SemanticNetwork, Synset,
                               definition_bag, definition_tokens, load_network,
                               save_network, senses)
from .text import content_bag, default_stoplist, load_stoplist, tokenize_content
from .triple_store import (DependencyTriple, Slot, SyntacticFeature, TripleIndex,
                           load_pos_lexicon, load_triples, sample_triples)

__version__ = "0.1.0"
