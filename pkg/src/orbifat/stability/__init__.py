"""Constructions of certified fatgraphs bounding ``w b^n`` for large ``n``."""

from .common import (
    BoundaryContractError,
    EquidistributionFailure,
    ExponentTooSmall,
    HomologyObstruction,
    NoAttachmentSite,
    NotHyperbolic,
    PartialBuild,
    PreparedWord,
    StabilityError,
    TooFewConePoints,
    UngluedInfiniteOrder,
    boundary_exponent,
    covering_trick,
    expanded_words,
    prepare_word,
    target_word,
)
from .disk import SurfaceBuild, build_disk_surface, disk_plan, pad_exponent_disk
from .genus import (
    add_even,
    add_odd,
    attach_A_modules,
    build_genus_surface,
    genus_base,
    z_edge_pairs,
)
from .modules import (
    Module,
    build_module_A,
    build_module_A_i,
    build_module_A_ik,
    build_module_B,
    module_A,
    module_A_i,
    module_A_ik,
    module_B,
)
from .numbertheory import (
    NTInstance,
    Unreachable,
    is_witness,
    minimal_threshold,
    nt_bound,
    nt_witness,
    reachable_sums,
)
from .reach import achievable_exponents
from .yprime import build_Yprime_disk, build_Yprime_genus, word_runs

