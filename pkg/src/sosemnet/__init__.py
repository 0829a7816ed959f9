"""Socio-semantic network toolkit.

Builds per-member semantic networks from text corpora by strict
immediate-adjacency collocation, layers them into shared meaning maps
across member groups, detects interaction communities from sociometric
surveys, ranks focal concepts, and backs every count with verbatim
quote concordances.
"""

from .bundle import Analysis, GroupSpec, PipelineParams, analyze, run_pipeline
from .concordance import ConcordanceHit, find_association, find_concept
from .corpus import Corpus, Document, Genre, Member, Role, load_corpus
from .errors import SosemnetError
from .focal import ConceptFocality, concept_focality, render_table, top_associations
from .intersect import (
    LayeredMap,
    SharedAssociationSet,
    SharingRule,
    giant_component,
    group_shared,
    layered_map,
    shared_with_anyone,
)
from .normalize import NormalizedDocument, Token, TokenKind, normalize_document, tokenize
from .semnet import SemanticNetwork, build_member_network, concept_labels, network_stats
from .socnet import (
    CommunityPartition,
    InteractionTie,
    edge_betweenness,
    girvan_newman,
    modularity,
    reconcile_ties,
)
from .stemming import stem

__version__ = "0.1.0"

__all__ = [
    "Analysis",
    "CommunityPartition",
    "ConceptFocality",
    "ConcordanceHit",
    "Corpus",
    "Document",
    "Genre",
    "GroupSpec",
    "InteractionTie",
    "LayeredMap",
    "Member",
    "NormalizedDocument",
    "PipelineParams",
    "Role",
    "SemanticNetwork",
    "SharedAssociationSet",
    "SharingRule",
    "SosemnetError",
    "Token",
    "TokenKind",
    "analyze",
    "build_member_network",
    "concept_focality",
    "concept_labels",
    "edge_betweenness",
    "find_association",
    "find_concept",
    "giant_component",
    "girvan_newman",
    "group_shared",
    "layered_map",
    "modularity",
    "network_stats",
    "normalize_document",
    "reconcile_ties",
    "render_table",
    "run_pipeline",
    "shared_with_anyone",
    "stem",
    "top_associations",
    "tokenize",
]
