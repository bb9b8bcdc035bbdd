"""Zero-divisor graphs of finite commutative rings: universality embeddings,
threshold recognition and red/green/blue dot-product colourings."""

__version__ = "0.1.0"

from .errors import (
    CapExceeded,
    GraphError,
    NotThresholdError,
    ParseError,
    RingAxiomError,
    RingError,
    VerificationError,
    ZdgError,
)
from .graph import Graph, complement, find_induced_embedding, induced_subgraph
from .threshold import forbidden_subgraph_scan, is_threshold, recognize_threshold
from .zdg import ann_threshold_conditions, zero_divisor_graph
from .embed import embed, verify_embedding
from .dotprod import build_dot_embedding, verify_trichotomy

__all__ = [
    "CapExceeded",
    "GraphError",
    "NotThresholdError",
    "ParseError",
    "RingAxiomError",
    "RingError",
    "VerificationError",
    "ZdgError",
    "Graph",
    "complement",
    "find_induced_embedding",
    "induced_subgraph",
    "forbidden_subgraph_scan",
    "is_threshold",
    "recognize_threshold",
    "ann_threshold_conditions",
    "zero_divisor_graph",
    "embed",
    "verify_embedding",
    "build_dot_embedding",
    "verify_trichotomy",
]
