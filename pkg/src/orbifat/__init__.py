"""Cyclic fatgraphs and immersed surfaces in hyperbolic orbifolds."""

from .certificate import CertificateReport, IncompleteFatgraph, check_certificate
from .cyclic import CyclicOrder, incompatibility_witness, interval, is_compatible
from .fatgraph import (
    BoundaryReport,
    Fatgraph,
    FatgraphBuilder,
    FatgraphError,
    HomologyObstruction,
    boundary,
    census,
    covers,
    euler_characteristic,
    format_fatgraph,
    parse_fatgraph,
    pinch,
    spine_dot,
    validate,
)
from .realization import (
    Realization,
    core_graph_dot,
    derive_boundary_word,
    format_orbifold,
    parse_orbifold,
)
from .words import (
    CyclicWord,
    ElementClass,
    GenAlphabet,
    Letter,
    classify,
    cyclic_reduce,
    format_word,
    free_reduce,
    parse_word,
)

__version__ = "0.1.0"
