"""Complete certified fatgraphs over orbifolds with genus."""

from __future__ import annotations

from ..fatgraph import FatgraphBuilder
from ..realization import Realization
from .common import (
    BoundaryContractError,
    EquidistributionFailure,
    ExponentTooSmall,
    NoAttachmentSite,
    PartialBuild,
    StabilityError,
    boundary_exponent,
    covering_trick,
    target_word,
)
from .disk import SurfaceBuild
from .modules import Module, module_A_i, module_A_ik, module_B
from .yprime import build_Yprime_genus


def _attach(fb: FatgraphBuilder, module: Module, sites) -> None:
    off = fb.extend(module.fatgraph)
    for ((q, s), _), site in zip(module.ports, sites):
        fb.glue((q + off, s), site)


def z_edge_pairs(f, i: int) -> list[tuple]:
    """Unglued ``(pe(Z_i), pe(z_i))`` sites paired in address order."""
    plus, minus = [], []
    for q, s, kind, x in f.unglued_edges():
        if kind == "pe" and x.kind == 0 and x.index == i:
            (minus if x.inverse else plus).append((q, s))
    if len(plus) != len(minus):
        raise EquidistributionFailure(
            f"{len(plus)} unglued pe(z{i}) but {len(minus)} unglued pe(Z{i})")
    return list(zip(minus, plus))


def _fill(p: PartialBuild, r: Realization, k: int | None, leave: int):
    """Attach A_i everywhere, ``A_{0,k}`` on the first z0 pair if ``k`` is set,
    and leave the last ``leave`` z0 pairs open."""
    a, O = r.alphabet, r.order
    fb = FatgraphBuilder.from_fatgraph(p.fatgraph)
    left = []
    for i in range(a.inf_count):
        pairs = z_edge_pairs(p.fatgraph, i)
        if i == 0:
            need = leave + (1 if k is not None else 0)
            if len(pairs) < need:
                raise NoAttachmentSite(f"need {need} pairs of unglued z0 edges, found {len(pairs)}")
            if leave:
                pairs, left = pairs[:-leave], pairs[-leave:]
            if k is not None:
                _attach(fb, module_A_ik(a, O, 0, k), pairs[0])
                pairs = pairs[1:]
        mod = module_A_i(a, O, i)
        for pair in pairs:
            _attach(fb, mod, pair)
    return fb, left


def attach_A_modules(p: PartialBuild, r: Realization) -> PartialBuild:
    """Fill every unglued infinite-order edge with a copy of A_i."""
    fb, _ = _fill(p, r, None, 0)
    f = fb.build()
    return PartialBuild(f, p.word, p.original, boundary_exponent(f, r, p.word), p.absorbed)


def add_even(p: PartialBuild, r: Realization, k: int) -> PartialBuild:
    """As attach_A_modules, with one A_0 replaced by ``A_{0,k}`` (exponent + k)."""
    fb, _ = _fill(p, r, k, 0)
    f = fb.build()
    m = boundary_exponent(f, r, p.word)
    if m != p.exponent + k:
        raise BoundaryContractError(f"A_0,{k} gave exponent {m}, expected {p.exponent + k}")
    return PartialBuild(f, p.word, p.original, m, p.absorbed)


def add_odd(p: PartialBuild, r: Realization, k: int) -> PartialBuild:
    """Two sheets joined by two B modules: both boundaries gain ``k + 1`` copies of b.

    Two z0 pairs stay open on each sheet.  The first B joins the first
    open ``pe(Z0)`` on both sheets and fills both open ``pe(z0)`` of
    sheet 0; the second B does the same with the other ``pe(Z0)`` and
    sheet 1.
    """
    a, O = r.alphabet, r.order
    fb1, left = _fill(p, r, k, 2)
    x = fb1.build()
    (m3, e1), (m4, e2) = left
    fb = FatgraphBuilder(a, O)
    off = [fb.extend(x), fb.extend(x)]
    B = module_B(a, O, 0)
    sheet = lambda t, site: (site[0] + off[t], site[1])
    # ports: re(Z0) on P_0, half re(z0), half re(Z0), re(z0) on P_2
    _attach(fb, B, [sheet(0, m3), sheet(0, e1), sheet(1, m3), sheet(0, e2)])
    _attach(fb, B, [sheet(0, m4), sheet(1, e1), sheet(1, m4), sheet(1, e2)])
    f = fb.build()
    m = boundary_exponent(f, r, p.word, copies=2)
    if m != p.exponent + k + 1:
        raise BoundaryContractError(f"B modules gave exponent {m}, expected {p.exponent + k + 1}")
    return PartialBuild(f, p.word, p.original, m, p.absorbed)


def genus_base(r: Realization, w, pad_b2: bool = True) -> PartialBuild:
    if r.is_disk:
        raise StabilityError("realization is a disk; use build_disk_surface")
    return build_Yprime_genus(r, w, pad_b2=pad_b2)


def build_genus_surface(r: Realization, w, n: int, pad_b2: bool = True) -> SurfaceBuild:
    """Complete certified fatgraph covering ``w b^(N + n)``.

    Even ``n`` uses one ``A_{0,n}`` and has degree ``lcm(o_j)``; odd ``n``
    goes through the two-sheet B construction and has twice that degree.
    """
    if n < 0:
        raise ExponentTooSmall(f"exponent offset {n} is below the construction's base")
    p = genus_base(r, w, pad_b2)
    if n % 2 == 0:
        y, sheets = add_even(p, r, n), 1
    else:
        y, sheets = add_odd(p, r, n - 1), 2
    f, L = covering_trick(y, r)
    exp = y.total_exponent
    return SurfaceBuild(f, target_word(r, p.original, exp), exp, p.total_exponent, sheets * L)
