"""Complete certified fatgraphs over disk orbifolds."""

from __future__ import annotations

from dataclasses import dataclass

from ..fatgraph import Fatgraph, FatgraphBuilder, group_polygon
from ..realization import Realization
from ..words import CyclicWord, Letter
from .common import (
    BoundaryContractError,
    ExponentTooSmall,
    NoAttachmentSite,
    PartialBuild,
    StabilityError,
    TooFewConePoints,
    boundary_exponent,
    covering_trick,
    target_word,
)
from .modules import add_standard_polygon
from .numbertheory import nt_bound, nt_witness
from .yprime import build_Yprime_disk


@dataclass(frozen=True)
class SurfaceBuild:
    """A complete fatgraph whose boundary covers ``target`` with ``degree``.

    ``target`` is the cyclic reduction of ``w b^exponent`` for the
    original word ``w``; ``N`` is the exponent reached at ``n = 0``.
    """

    fatgraph: Fatgraph
    target: CyclicWord
    exponent: int
    N: int
    degree: int


def pad_exponent_disk(p: PartialBuild, r: Realization, indices) -> PartialBuild:
    """Attach group polygons ``c_i`` for each ``i`` in ``indices``, in order.

    Each step hangs a group polygon on an unglued ``pe(c_i)`` and closes
    its other edges with standard polygons, adding ``o_i - 1`` copies of
    ``b``.  After the first step, sites are taken from the standard
    polygons added by the previous step.
    """
    indices = list(indices)
    if not indices:
        return p
    fb = FatgraphBuilder.from_fatgraph(p.fatgraph)
    O = r.order
    x0 = Letter(1, indices[0])
    sites = [(q, s) for q, s, kind, x in p.fatgraph.unglued_edges() if kind == "pe" and x == x0]
    fresh: list[tuple[int, dict]] = []
    added = 0
    for step, i in enumerate(indices):
        x = Letter(1, i)
        o = r.alphabet.order(x)
        if step:
            sites = [(q, seg[x]) for q, seg in fresh if (q, seg[x]) not in fb.gluing]
        if not sites:
            raise NoAttachmentSite(f"step {step}: no unglued pe({x}) available")
        gp = fb.add(group_polygon(i, o))
        fb.glue((gp, 1), min(sites))
        fresh = []
        for t in range(1, o):
            q, seg = add_standard_polygon(fb, O)
            fb.glue((gp, 2 * t + 1), (q, seg[x]))
            fresh.append((q, seg))
        added += o - 1
    f = fb.build()
    m = boundary_exponent(f, r, p.word)
    if m != p.exponent + added:
        raise BoundaryContractError(f"padding gave exponent {m}, expected {p.exponent + added}")
    return PartialBuild(f, p.word, p.original, m, p.absorbed)


def _yprime_with_sites(r: Realization, w) -> PartialBuild:
    """Y', extended by copies of b until every pe(c_j) label is unglued somewhere."""
    want = {Letter(1, j) for j in range(r.alphabet.fin_count)}
    for extra in range(4):
        p = build_Yprime_disk(r, w, append_b=extra)
        have = {x for _, _, kind, x in p.fatgraph.unglued_edges() if kind == "pe"}
        if want <= have:
            return p
    raise NoAttachmentSite("could not expose an unglued edge for every cone point")


def disk_plan(r: Realization, w):
    """Y' plus the number-theory data used for every ``n``."""
    a = r.alphabet
    if not r.is_disk:
        raise StabilityError("realization has genus; use build_genus_surface")
    if a.fin_count < 3:
        raise TooFewConePoints(f"need at least three cone points, got {a.fin_count}")
    p = _yprime_with_sites(r, w)
    inst = nt_bound([o - 1 for o in a.fin_orders])
    return p, inst


def build_disk_surface(r: Realization, w, n: int) -> SurfaceBuild:
    """Complete certified fatgraph covering ``w b^(N + n g)`` with degree ``lcm(o_j)``."""
    if n < 0:
        raise ExponentTooSmall(f"exponent offset {n} is below the construction's base")
    p, inst = disk_plan(r, w)
    seq = nt_witness(inst, inst.N + n * inst.g)
    padded = pad_exponent_disk(p, r, seq)
    f, L = covering_trick(padded, r)
    exp = padded.total_exponent
    return SurfaceBuild(f, target_word(r, p.original, exp), exp, p.total_exponent + inst.N, L)
