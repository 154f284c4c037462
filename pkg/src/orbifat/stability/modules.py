"""Standard polygons and the small genus modules built from them."""

from __future__ import annotations

from dataclasses import dataclass

from ..cyclic import CyclicOrder
from ..fatgraph import Fatgraph, FatgraphBuilder, polygon, rectangle, segments
from ..words import GenAlphabet, z


def add_standard_polygon(fb: FatgraphBuilder, order: CyclicOrder) -> tuple[int, dict]:
    """Add one standard polygon; return its index and a label -> segment map."""
    p = fb.add(polygon(order.symbols))
    return p, {x: s for s, x in enumerate(order.symbols)}


def close_rectangle(fb: FatgraphBuilder, p: int, seg: dict, i: int) -> int:
    """A rectangle ``r(z_i)`` glued at both ends to the same polygon."""
    r = fb.add(rectangle(i))
    fb.glue((p, seg[z(i)]), (r, 3))
    fb.glue((p, seg[z(i, -1)]), (r, 1))
    return r


def module_A(alphabet: GenAlphabet, order: CyclicOrder) -> Fatgraph:
    """Standard polygon with every rectangle attached at both edges."""
    fb = FatgraphBuilder(alphabet, order)
    p, seg = add_standard_polygon(fb, order)
    for i in range(alphabet.inf_count):
        close_rectangle(fb, p, seg, i)
    return fb.build()


@dataclass(frozen=True)
class Module:
    """A partial fatgraph with open rectangle edges to be glued elsewhere.

    ``ports`` lists ``((piece, segment), label)`` for each open edge,
    where ``label`` is the label the matching polygon edge must carry.
    """

    fatgraph: Fatgraph
    ports: tuple


def _ports(fb: FatgraphBuilder, addrs) -> tuple:
    return tuple((a, segments(fb.pieces[a[0]])[a[1]].label) for a in addrs)


def module_A_i(alphabet: GenAlphabet, order: CyclicOrder, i: int) -> Module:
    """Module A with rectangle ``r(z_i)`` split into two half-glued copies.

    Ports: the free ``re(Z_i)`` first, then the free ``re(z_i)``.
    """
    fb = FatgraphBuilder(alphabet, order)
    p, seg = add_standard_polygon(fb, order)
    for t in range(alphabet.inf_count):
        if t != i:
            close_rectangle(fb, p, seg, t)
    ra = fb.add(rectangle(i))
    fb.glue((p, seg[z(i)]), (ra, 3))
    rb = fb.add(rectangle(i))
    fb.glue((p, seg[z(i, -1)]), (rb, 1))
    return Module(fb.build(), _ports(fb, [(ra, 1), (rb, 3)]))


def partner(i: int) -> int:
    """The index sharing a handle with ``i``."""
    return i + 1 if i % 2 == 0 else i - 1


def _chain(alphabet: GenAlphabet, order: CyclicOrder, i: int, k: int, split_first: bool):
    if k < 0 or k % 2:
        raise ValueError(f"k must be a non-negative even integer, got {k}")
    fb = FatgraphBuilder(alphabet, order)
    polys = [add_standard_polygon(fb, order) for _ in range(k + 1)]
    j = partner(i)
    for p, seg in polys:
        for t in range(alphabet.inf_count):
            if t not in (i, j):
                close_rectangle(fb, p, seg, t)
    # z_i rectangles: a free re(Z_i) at the start, links P_l -> P_l+1, a free re(z_i) at the end
    first = fb.add(rectangle(i))
    fb.glue((first, 3), (polys[0][0], polys[0][1][z(i)]))
    ports = [(first, 1)]
    for l in range(k):
        (p, sp), (q, sq) = polys[l], polys[l + 1]
        if split_first and l == 0:
            ra = fb.add(rectangle(i))
            fb.glue((ra, 1), (p, sp[z(i, -1)]))
            rb = fb.add(rectangle(i))
            fb.glue((rb, 3), (q, sq[z(i)]))
            ports += [(ra, 3), (rb, 1)]
            continue
        r = fb.add(rectangle(i))
        fb.glue((r, 1), (p, sp[z(i, -1)]))
        fb.glue((r, 3), (q, sq[z(i)]))
    last = fb.add(rectangle(i))
    fb.glue((last, 1), (polys[k][0], polys[k][1][z(i, -1)]))
    ports.append((last, 3))
    # z_j rectangles: a crossing pair between P_l and P_l+1 for even l, one closed on P_k
    for l in range(0, k, 2):
        (p, sp), (q, sq) = polys[l], polys[l + 1]
        r = fb.add(rectangle(j))
        fb.glue((r, 3), (p, sp[z(j)]))
        fb.glue((r, 1), (q, sq[z(j, -1)]))
        r = fb.add(rectangle(j))
        fb.glue((r, 1), (p, sp[z(j, -1)]))
        fb.glue((r, 3), (q, sq[z(j)]))
    close_rectangle(fb, polys[k][0], polys[k][1], j)
    return fb, ports


def module_A_ik(alphabet: GenAlphabet, order: CyclicOrder, i: int, k: int) -> Module:
    """``k + 1`` standard polygons chained by ``r(z_i)`` and paired ``r(z_i')``.

    Filling a ``pe(Z_i)`` with it inserts ``b^k``.  Ports: free ``re(Z_i)``
    then free ``re(z_i)``.
    """
    fb, ports = _chain(alphabet, order, i, k, split_first=False)
    return Module(fb.build(), _ports(fb, ports))


def module_B(alphabet: GenAlphabet, order: CyclicOrder, i: int) -> Module:
    """``A_{i,2}`` with the first link rectangle cut into two halves.

    Ports, in order: free ``re(Z_i)`` on ``P_0``, the two halves
    (``re(z_i)`` then ``re(Z_i)``), free ``re(z_i)`` on ``P_2``.
    """
    fb, ports = _chain(alphabet, order, i, 2, split_first=True)
    return Module(fb.build(), _ports(fb, ports))


def _genus_only(r) -> None:
    if r.is_disk:
        raise ValueError("modules need a realization with genus")


def build_module_A(r) -> Fatgraph:
    _genus_only(r)
    return module_A(r.alphabet, r.order)


def build_module_A_i(r, i: int) -> Module:
    _genus_only(r)
    return module_A_i(r.alphabet, r.order, i)


def build_module_A_ik(r, i: int, k: int) -> Module:
    _genus_only(r)
    return module_A_ik(r.alphabet, r.order, i, k)


def build_module_B(r, i: int) -> Module:
    _genus_only(r)
    return module_B(r.alphabet, r.order, i)
