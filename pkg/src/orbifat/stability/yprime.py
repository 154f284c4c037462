"""The first partial fatgraph: the word along the top, intervals below."""

from __future__ import annotations

from ..cyclic import interval
from ..fatgraph import FatgraphBuilder, polygon, rectangle, group_polygon
from ..realization import Realization
from ..words import Letter
from .common import PartialBuild, StabilityError, boundary_exponent, prepare_word
from .modules import add_standard_polygon


def word_runs(word) -> list[tuple[Letter, int]]:
    """Maximal runs of finite-order letters; infinite-order letters stand alone."""
    runs: list[list] = []
    for x in word:
        if x.kind == 1 and runs and runs[-1][0] == x:
            runs[-1][1] += 1
        else:
            runs.append([x, 1])
    return [(x, n) for x, n in runs]


def _run_piece(fb: FatgraphBuilder, r: Realization, x: Letter, e: int):
    """Add the piece for one run; return (left edge, right edge)."""
    if x.kind == 0:
        p = fb.add(rectangle(x.index))
        return ((p, 1), (p, 3)) if x.inverse else ((p, 3), (p, 1))
    o = r.alphabet.order(x)
    p = fb.add(group_polygon(x.index, o))
    for t in range(e - 1):
        fb.glue((p, 2 * t + 1), (fb.add(polygon((x,))), 0))
    for t in range(e, o - 1):
        q, seg = add_standard_polygon(fb, r.order)
        fb.glue((p, 2 * t + 1), (q, seg[x]))
    return (p, 2 * o - 1), (p, 2 * e - 1)


def build_yprime_raw(r: Realization, word) -> FatgraphBuilder:
    """Pieces for ``word`` glued left to right, with interval polygons.

    Between a run ending in ``x`` and one starting with ``y`` sits the arc
    of the cyclic order from ``y`` to ``x^-1``; the right end uses the arc
    from ``b_0`` to ``w_last^-1`` and the left end the arc from ``w_0`` to
    ``b_last^-1``.
    """
    O, b = r.order, r.boundary.letters
    runs = word_runs(word)
    if not runs:
        raise StabilityError("empty word")
    fb = FatgraphBuilder(r.alphabet, O)
    ends = [_run_piece(fb, r, x, e) for x, e in runs]
    for k in range(len(runs) - 1):
        x, y = runs[k][0], runs[k + 1][0]
        arc = interval(O, y, x.inv())
        q = fb.add(polygon(arc))
        fb.glue((q, 0), ends[k + 1][0])
        fb.glue((q, len(arc) - 1), ends[k][1])
    arc = interval(O, b[0], runs[-1][0].inv())
    q = fb.add(polygon(arc))
    fb.glue((q, len(arc) - 1), ends[-1][1])
    arc = interval(O, runs[0][0], b[-1].inv())
    q = fb.add(polygon(arc))
    fb.glue((q, 0), ends[0][0])
    return fb


def _build(r: Realization, w, extra: tuple = (), extra_count: int = 0) -> PartialBuild:
    prep = prepare_word(r, w)
    word = prep.word + extra
    f = build_yprime_raw(r, word).build()
    m = boundary_exponent(f, r, word)
    return PartialBuild(f, word, prep.original, m, prep.absorbed + extra_count)


def build_Yprime_disk(r: Realization, w, append_b: int = 0) -> PartialBuild:
    """Partial fatgraph over a disk orbifold reading ``w b^m``.

    ``append_b`` extra copies of ``b`` may be placed after the prepared word.
    """
    if not r.is_disk:
        raise StabilityError("realization has genus; use build_Yprime_genus")
    b = r.boundary.letters
    return _build(r, w, b * append_b, append_b)


def build_Yprime_genus(r: Realization, w, pad_b2: bool = True) -> PartialBuild:
    """Partial fatgraph over a genus orbifold reading ``w b^m``.

    With ``pad_b2`` the word is extended by ``b^2``, which guarantees at
    least four unglued edges of each infinite-order label.
    """
    if r.is_disk:
        raise StabilityError("realization is a disk; use build_Yprime_disk")
    b = r.boundary.letters
    return _build(r, w, b * 2 if pad_b2 else (), 2 if pad_b2 else 0)
