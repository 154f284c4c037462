"""Shared pieces of the stability constructions."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import lcm

from ..fatgraph import (
    Fatgraph,
    FatgraphBuilder,
    HomologyObstruction,
    boundary,
    group_polygon,
    read_word,
)
from ..realization import Realization
from ..words import (
    CyclicWord,
    ElementClass,
    canonical_rotation,
    classify,
    cyclic_reduce,
    free_reduce,
    is_reduced,
    z_exponent_sums,
)


class StabilityError(ValueError):
    pass


class NotHyperbolic(StabilityError):
    pass


class UngluedInfiniteOrder(StabilityError):
    pass


class NoAttachmentSite(StabilityError):
    pass


class EquidistributionFailure(StabilityError):
    pass


class TooFewConePoints(StabilityError):
    pass


class ExponentTooSmall(StabilityError):
    pass


class BoundaryContractError(AssertionError):
    """A construction produced a boundary other than the promised one."""


__all__ = [
    "BoundaryContractError", "EquidistributionFailure", "ExponentTooSmall",
    "HomologyObstruction", "NoAttachmentSite", "NotHyperbolic", "PartialBuild",
    "PreparedWord", "StabilityError", "TooFewConePoints", "UngluedInfiniteOrder",
    "boundary_exponent", "covering_trick", "expanded_words", "prepare_word",
    "target_word",
]


@dataclass(frozen=True)
class PreparedWord:
    word: tuple  # b^p w b^q, reduced
    original: tuple  # reduced input word
    absorbed: int  # p + q


def prepare_word(r: Realization, w) -> PreparedWord:
    """Pad ``w`` with copies of ``b`` until it meets ``b`` without cancellation.

    The result ``w'`` is reduced and ``b w' b`` is reduced as written.
    """
    a = r.alphabet
    w = free_reduce(w, a)
    cls = classify(w, r)
    if cls is not ElementClass.HYPERBOLIC:
        raise NotHyperbolic(f"word is {cls.value}, not hyperbolic")
    if not r.is_disk and any(z_exponent_sums(w, a)):
        raise HomologyObstruction(
            f"z exponent sums {z_exponent_sums(w, a)} must all vanish on a genus orbifold")
    b = r.boundary.letters
    bound = len(w) // len(b) + 3
    for total in range(2 * bound + 1):
        for p in range(min(total, bound) + 1):
            q = total - p
            cand = free_reduce(b * p + w + b * q, a)
            if not cand or not is_reduced(b + cand + b, a):
                continue
            return PreparedWord(cand, w, total)
    raise StabilityError("could not pad the word against the boundary word")


@dataclass(frozen=True)
class PartialBuild:
    """A partial fatgraph whose boundary reads ``word b^exponent``.

    Unglued ``pe(c_j)`` reads as ``c_j`` and unglued ``pe(z_i)`` as the
    loop a module would fill it with.  ``absorbed`` copies of ``b`` were
    folded into ``word`` on top of the original word.
    """

    fatgraph: Fatgraph
    word: tuple
    original: tuple
    exponent: int
    absorbed: int

    @property
    def total_exponent(self) -> int:
        return self.exponent + self.absorbed

    def unglued_census(self) -> Counter:
        return Counter(str(x) for _, _, _, x in self.fatgraph.unglued_edges())


def expanded_words(f: Fatgraph, r: Realization) -> list[tuple]:
    return [read_word(comp, r) for comp in boundary(f).components]


def _exponent_of(read: tuple, word: tuple, b: tuple) -> int | None:
    extra = len(read) - len(word)
    if extra < 0 or extra % len(b):
        return None
    m = extra // len(b)
    if canonical_rotation(read) != canonical_rotation(word + b * m):
        return None
    return m


def boundary_exponent(f: Fatgraph, r: Realization, word: tuple, copies: int = 1) -> int:
    """The ``m`` with every boundary component reading ``word b^m``.

    Raises BoundaryContractError unless there are exactly ``copies``
    components, all with the same ``m``.
    """
    reads = expanded_words(f, r)
    if len(reads) != copies:
        raise BoundaryContractError(f"expected {copies} boundary component(s), found {len(reads)}")
    ms = {_exponent_of(x, word, r.boundary.letters) for x in reads}
    if len(ms) != 1 or None in ms:
        raise BoundaryContractError("boundary does not read word * b^m")
    return ms.pop()


def target_word(r: Realization, original: tuple, exponent: int) -> CyclicWord:
    """Cyclic reduction of ``original * b^exponent``."""
    core, _ = cyclic_reduce(original + r.boundary.letters * exponent, r.alphabet)
    return core


def covering_trick(p: PartialBuild | Fatgraph, r: Realization) -> tuple[Fatgraph, int]:
    """Fill every unglued ``pe(c_j)`` using ``lcm(o_j)`` sheets.

    Over each unglued base edge with order ``o``, group polygon ``t``
    joins the copies on sheets ``t*o .. t*o + o - 1``.  Returns the
    complete fatgraph and its degree over the base.
    """
    f = p.fatgraph if isinstance(p, PartialBuild) else p
    sites = f.unglued_edges()
    for q, s, kind, x in sites:
        if kind != "pe" or x.kind != 1:
            raise UngluedInfiniteOrder(f"unglued {kind}({x}) at {q}.{s} cannot be filled by group polygons")
    a = f.alphabet
    L = lcm(*a.fin_orders) if a.fin_orders else 1
    fb = FatgraphBuilder(a, f.order)
    for _ in range(L):
        fb.extend(f)
    n = len(f.pieces)
    for q, s, _, x in sites:
        o = a.order(x)
        for t in range(L // o):
            gp = fb.add(group_polygon(x.index, o))
            for k in range(o):
                fb.glue((gp, 2 * k + 1), ((t * o + k) * n + q, s))
    return fb.build(), L
