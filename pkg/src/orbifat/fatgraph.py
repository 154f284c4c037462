"""Cyclic fatgraphs: pieces glued along labeled edges.

Every piece is a disk whose boundary is a cyclic list of *segments*,
each either a labeled side or a glueable edge, listed counterclockwise:

* ``rect z_i``   -> ``[side z_i, re(Z_i), side Z_i, re(z_i)]``
* ``gpoly c_j``  -> ``[side c_j, ge(c_j)] * o_j``
* ``poly x y ..`` -> ``[pe(x), pe(y), ...]``

An edge is addressed as ``(piece, segment)``.  Gluings form an
involution on edge addresses.  Boundary traversal walks segments and,
at a glued edge, continues from the segment after the partner edge.
"""

from __future__ import annotations

import random
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

from .cyclic import CyclicOrder
from .words import (
    CyclicWord,
    GenAlphabet,
    Letter,
    canonical_rotation,
    least_rotation,
    cyclic_reduce,
    parse_token,
    z_exponent_sums,
)

RECT, GPOLY, POLY = "rect", "gpoly", "poly"


class FatgraphError(ValueError):
    pass


class HomologyObstruction(FatgraphError):
    """Letter counts do not allow pairing into rectangles and group polygons."""


class Segment(NamedTuple):
    edge: bool
    label: Letter


class Piece(NamedTuple):
    kind: str
    labels: tuple  # (z_i,) for rect, (c_j,) for gpoly, edge labels for poly
    order: int = 0  # group polygon size

    def __str__(self) -> str:
        return f"{self.kind} " + " ".join(map(str, self.labels))


@lru_cache(maxsize=None)
def rectangle(i: int) -> Piece:
    return Piece(RECT, (Letter(0, i),))


@lru_cache(maxsize=None)
def group_polygon(j: int, order: int) -> Piece:
    return Piece(GPOLY, (Letter(1, j),), order)


@lru_cache(maxsize=None)
def _polygon(labels: tuple) -> Piece:
    return Piece(POLY, labels)


def polygon(labels: Iterable[Letter]) -> Piece:
    return _polygon(tuple(labels))


@lru_cache(maxsize=None)
def segments(piece: Piece) -> tuple[Segment, ...]:
    if piece.kind == RECT:
        x = piece.labels[0]
        return (Segment(False, x), Segment(True, x.inv()),
                Segment(False, x.inv()), Segment(True, x))
    if piece.kind == GPOLY:
        x = piece.labels[0]
        return (Segment(False, x), Segment(True, x)) * piece.order
    return tuple(Segment(True, x) for x in piece.labels)


_EDGE_NAME = {RECT: "re", GPOLY: "ge", POLY: "pe"}


class Token(NamedTuple):
    """A boundary token: a side label or an unglued edge marker."""

    kind: str  # "side", "pe", "re" or "ge"
    label: Letter

    def __str__(self) -> str:
        if self.kind == "side":
            return str(self.label)
        return f"{self.kind}({self.label})"


@dataclass(frozen=True)
class Fatgraph:
    """A frozen fatgraph.  Use :class:`FatgraphBuilder` to make one."""

    alphabet: GenAlphabet
    pieces: tuple[Piece, ...]
    gluing: dict = field(repr=False)  # (p, s) -> (q, t), symmetric
    order: CyclicOrder | None = None  # optional realization metadata

    @property
    def num_gluings(self) -> int:
        return len(self.gluing) // 2

    def is_complete(self) -> bool:
        return all(
            (p, s) in self.gluing
            for p, piece in enumerate(self.pieces)
            for s, seg in enumerate(segments(piece))
            if seg.edge
        )

    def unglued_edges(self) -> list[tuple[int, int, str, Letter]]:
        """``(piece, segment, edge kind, label)`` in address order."""
        out = []
        for p, piece in enumerate(self.pieces):
            for s, seg in enumerate(segments(piece)):
                if seg.edge and (p, s) not in self.gluing:
                    out.append((p, s, _EDGE_NAME[piece.kind], seg.label))
        return out

    def polygons(self) -> list[tuple[int, Piece]]:
        return [(p, pc) for p, pc in enumerate(self.pieces) if pc.kind == POLY]

    def glue_pairs(self) -> list[tuple[tuple[int, int], tuple[int, int]]]:
        return sorted((a, b) for a, b in self.gluing.items() if a < b)

    def structurally_equal(self, other: "Fatgraph") -> bool:
        return (self.alphabet == other.alphabet and self.pieces == other.pieces
                and self.gluing == other.gluing and self.order == other.order)


class FatgraphBuilder:
    """Mutable construction phase of a fatgraph."""

    def __init__(self, alphabet: GenAlphabet, order: CyclicOrder | None = None):
        self.alphabet = alphabet
        self.order = order
        self.pieces: list[Piece] = []
        self.gluing: dict = {}

    @classmethod
    def from_fatgraph(cls, f: Fatgraph) -> "FatgraphBuilder":
        b = cls(f.alphabet, f.order)
        b.pieces = list(f.pieces)
        b.gluing = dict(f.gluing)
        return b

    def add(self, piece: Piece) -> int:
        self.pieces.append(piece)
        return len(self.pieces) - 1

    def glue(self, a: tuple[int, int], b: tuple[int, int]) -> None:
        if a in self.gluing or b in self.gluing:
            raise FatgraphError(f"edge already glued: {a} or {b}")
        if a == b:
            raise FatgraphError(f"cannot glue {a} to itself")
        self.gluing[a] = b
        self.gluing[b] = a

    def unglue(self, a: tuple[int, int]) -> tuple[int, int]:
        b = self.gluing.pop(a)
        del self.gluing[b]
        return b

    def extend(self, f: "Fatgraph | FatgraphBuilder") -> int:
        """Copy all pieces and gluings of ``f``; return the index offset."""
        off = len(self.pieces)
        self.pieces.extend(f.pieces)
        for (p, s), (q, t) in f.gluing.items():
            self.gluing[(p + off, s)] = (q + off, t)
        return off

    def build(self) -> Fatgraph:
        return Fatgraph(self.alphabet, tuple(self.pieces), dict(self.gluing), self.order)


# ----------------------------------------------------------------- validation


def validate(f: Fatgraph, alphabet: GenAlphabet | None = None) -> list[str]:
    """All structural violations, as human-readable strings (empty if ok)."""
    alphabet = alphabet or f.alphabet
    bad: list[str] = []
    for p, pc in enumerate(f.pieces):
        try:
            for x in pc.labels:
                alphabet.check(x)
        except ValueError as exc:
            bad.append(f"piece {p}: {exc}")
            continue
        if pc.kind == RECT:
            if pc.labels[0].kind != 0 or pc.labels[0].inverse:
                bad.append(f"piece {p}: rectangle must be labeled by some z_i")
        elif pc.kind == GPOLY:
            x = pc.labels[0]
            if x.kind != 1:
                bad.append(f"piece {p}: group polygon must be labeled by some c_j")
            elif pc.order != alphabet.order(x):
                bad.append(f"piece {p}: group polygon {x} has {pc.order} sides, order is {alphabet.order(x)}")
        else:
            labels = pc.labels
            if not labels:
                bad.append(f"piece {p}: empty polygon")
            elif any(x.kind == 1 and x.inverse for x in labels):
                bad.append(f"piece {p}: negative finite-order label")
            elif len(labels) == 1:
                if labels[0].kind != 1:
                    bad.append(f"piece {p}: monogon with infinite-order edge pe({labels[0]})")
            else:
                for s, x in enumerate(labels):
                    y = labels[(s + 1) % len(labels)]
                    if x.kind == 0 and x == y:
                        bad.append(f"piece {p}: not locally reduced at edges {s},{(s + 1) % len(labels)} (pe({x}) twice)")
    for a, b in f.gluing.items():
        if f.gluing.get(b) != a:
            bad.append(f"gluing {a}->{b} is not symmetric")
            continue
        if a > b:
            continue
        try:
            pa, pb = f.pieces[a[0]], f.pieces[b[0]]
            sa, sb = segments(pa)[a[1]], segments(pb)[b[1]]
        except IndexError:
            bad.append(f"gluing {a}-{b} references a missing segment")
            continue
        if not (sa.edge and sb.edge):
            bad.append(f"gluing {a}-{b} uses a labeled side")
            continue
        if (pa.kind == POLY) == (pb.kind == POLY):
            bad.append(f"gluing {a}-{b} must join a polygon to a rectangle or group polygon")
        if sa.label != sb.label:
            bad.append(f"gluing {a}-{b}: label mismatch {sa.label} vs {sb.label}")
    return bad


# ---------------------------------------------------------------- traversal


@dataclass(frozen=True)
class BoundaryReport:
    """Boundary components as cyclic token sequences.

    ``sites[k][t]`` is the ``(piece, segment)`` that produced
    ``components[k][t]``.
    """

    components: tuple[tuple[Token, ...], ...]
    sites: tuple[tuple[tuple[int, int], ...], ...]

    def __len__(self) -> int:
        return len(self.components)

    def has_markers(self) -> bool:
        return any(t.kind != "side" for comp in self.components for t in comp)

    def words(self, realization=None) -> list[tuple[Letter, ...]]:
        return [read_word(comp, realization) for comp in self.components]

    def format(self) -> list[str]:
        return [" ".join(map(str, comp)) for comp in self.components]


def read_word(component: Sequence[Token], realization=None) -> tuple[Letter, ...]:
    """Read a component as a word.

    Unglued ``pe(c_j)`` reads as ``c_j``.  Unglued ``pe(z_i^{+-1})`` reads
    as the boundary loop ``z_i^{+-1} b_{i,+-} z_i^{-+1}`` when a
    realization is supplied; other markers are not readable.
    """
    out: list[Letter] = []
    for t in component:
        if t.kind == "side":
            out.append(t.label)
        elif t.kind == "pe" and t.label.kind == 1:
            out.append(t.label)
        elif t.kind == "pe" and realization is not None:
            out.extend(realization.edge_loop(t.label))
        else:
            raise FatgraphError(f"cannot read unglued marker {t} as a letter")
    return tuple(out)


def boundary(f: Fatgraph) -> BoundaryReport:
    """Traverse every boundary component of ``f``."""
    segs = [segments(pc) for pc in f.pieces]
    glue = f.gluing
    seen: set = set()
    comps = []
    for p, sg in enumerate(segs):
        for s, seg in enumerate(sg):
            if (p, s) in seen or (seg.edge and (p, s) in glue):
                continue
            toks, sites = [], []
            q, t = p, s
            while True:
                seen.add((q, t))
                sq = segs[q][t]
                toks.append(Token("side", sq.label) if not sq.edge
                            else Token(_EDGE_NAME[f.pieces[q].kind], sq.label))
                sites.append((q, t))
                t = (t + 1) % len(segs[q])
                while (q, t) in glue:
                    q, t = glue[(q, t)]
                    t = (t + 1) % len(segs[q])
                if (q, t) == (p, s):
                    break
            comps.append((toks, sites))
    keyed = []
    for toks, sites in comps:
        k = least_rotation(toks)
        keyed.append((tuple(toks[k:] + toks[:k]), tuple(sites[k:] + sites[:k])))
    keyed.sort(key=lambda kv: (kv[0], kv[1]))
    return BoundaryReport(tuple(k[0] for k in keyed), tuple(k[1] for k in keyed))


# ------------------------------------------------------------- invariants


def euler_characteristic(f: Fatgraph) -> int:
    return len(f.pieces) - f.num_gluings


def connected_components(f: Fatgraph) -> list[list[int]]:
    adj = defaultdict(list)
    for (p, _), (q, _) in f.gluing.items():
        adj[p].append(q)
    seen = [False] * len(f.pieces)
    out = []
    for start in range(len(f.pieces)):
        if seen[start]:
            continue
        seen[start] = True
        stack, comp = [start], []
        while stack:
            p = stack.pop()
            comp.append(p)
            for q in adj[p]:
                if not seen[q]:
                    seen[q] = True
                    stack.append(q)
        comps_sorted = sorted(comp)
        out.append(comps_sorted)
    return out


def cell_euler_characteristic(f: Fatgraph) -> int:
    """V - E + F of the cell structure, computed from corner identifications."""
    offsets, total = [], 0
    for pc in f.pieces:
        offsets.append(total)
        total += len(segments(pc))
    parent = list(range(total))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def corner(p, k):  # corner k is the start of segment k
        return offsets[p] + k % len(segments(f.pieces[p]))

    for (p, s), (q, t) in f.gluing.items():
        if (p, s) > (q, t):
            continue
        # orientation reversing: start(a) ~ end(b), end(a) ~ start(b)
        for u, v in ((corner(p, s), corner(q, t + 1)), (corner(p, s + 1), corner(q, t))):
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
    vertices = sum(1 for x in range(total) if find(x) == x)
    edges = total - f.num_gluings
    return vertices - edges + len(f.pieces)


@dataclass(frozen=True)
class SurfaceSummary:
    components: int
    boundary_components: int
    euler_characteristic: int
    genus: int


def surface_summary(f: Fatgraph) -> SurfaceSummary:
    """Classify the underlying surface (connected pieces summed).

    Raises FatgraphError if the cell count disagrees with the spine count,
    or the implied genus is not a non-negative integer.
    """
    chi = euler_characteristic(f)
    chi_cells = cell_euler_characteristic(f)
    if chi != chi_cells:
        raise FatgraphError(f"Euler characteristic mismatch: spine {chi}, cells {chi_cells}")
    ncomp = len(connected_components(f))
    nbd = len(boundary(f))
    twice_g = 2 * ncomp - nbd - chi
    if twice_g < 0 or twice_g % 2:
        raise FatgraphError(f"inconsistent surface: c={ncomp} b={nbd} chi={chi}")
    return SurfaceSummary(ncomp, nbd, chi, twice_g // 2)


@dataclass(frozen=True)
class Census:
    rectangles: dict
    group_polygons: dict
    polygons: dict
    unglued: dict

    def format(self) -> list[str]:
        out = []
        for i, n in sorted(self.rectangles.items()):
            out.append(f"rect z{i} {n}")
        for j, n in sorted(self.group_polygons.items()):
            out.append(f"gpoly c{j} {n}")
        for k, n in sorted(self.polygons.items()):
            out.append(f"poly {k}-gon {n}")
        for key, n in sorted(self.unglued.items()):
            out.append(f"unglued {key} {n}")
        return out


def census(f: Fatgraph) -> Census:
    rects, gpolys, polys = Counter(), Counter(), Counter()
    for pc in f.pieces:
        if pc.kind == RECT:
            rects[pc.labels[0].index] += 1
        elif pc.kind == GPOLY:
            gpolys[pc.labels[0].index] += 1
        else:
            polys[len(pc.labels)] += 1
    unglued = Counter(f"{kind}({x})" for _, _, kind, x in f.unglued_edges())
    return Census(dict(rects), dict(gpolys), dict(polys), dict(unglued))


# ----------------------------------------------------------------- covers


def covering_degree(words: Iterable[Sequence[Letter]], target: Sequence[Letter]) -> int | None:
    """Total degree if every word is a cyclic power of ``target``, else None."""
    base = tuple(target.letters if isinstance(target, CyclicWord) else target)
    p = len(base)
    if p == 0:
        raise ValueError("empty target")
    canon = canonical_rotation(base)
    total = 0
    for w in words:
        n = len(w)
        if n == 0 or n % p:
            return None
        if any(w[i] != w[i - p] for i in range(p, n)):
            return None
        if canonical_rotation(w[:p]) != canon:
            return None
        total += n // p
    return total


def covers(report: BoundaryReport, target) -> int | None:
    """Covering degree of ``target`` by a complete fatgraph boundary, or None."""
    if report.has_markers():
        raise FatgraphError("boundary still has unglued edges")
    return covering_degree(report.words(), target)


# ------------------------------------------------------------------ pinch


def pinch(words: Iterable[Sequence[Letter]], alphabet: GenAlphabet,
          seed: int | None = None) -> Fatgraph:
    """A complete fatgraph whose boundary reads the given cyclic words.

    Letters are paired into rectangles and grouped into group polygons
    (in order of occurrence, or shuffled with ``seed``); polygons fill
    the junctions.  The result generally fails the immersion certificate.
    """
    loops = []
    for w in words:
        core, _ = cyclic_reduce(w, alphabet)
        if not core.letters:
            raise FatgraphError("cannot pinch a word that reduces to the identity")
        loops.append(core.letters)
    if not loops:
        raise FatgraphError("nothing to pinch")
    occ = defaultdict(list)  # letter -> list of (loop, position)
    for k, w in enumerate(loops):
        for t, x in enumerate(w):
            occ[x].append((k, t))
    rng = random.Random(seed) if seed is not None else None
    if rng:
        for v in occ.values():
            rng.shuffle(v)
    for i in range(alphabet.inf_count):
        if len(occ[Letter(0, i)]) != len(occ[Letter(0, i, True)]):
            raise HomologyObstruction(f"z{i} and Z{i} occur unequally often")
    for j, o in enumerate(alphabet.fin_orders):
        if len(occ[Letter(1, j)]) % o:
            raise HomologyObstruction(f"c{j} occurs {len(occ[Letter(1, j)])} times, not a multiple of {o}")

    b = FatgraphBuilder(alphabet)
    side_at = {}  # (loop, pos) -> (piece, side segment)
    for i in range(alphabet.inf_count):
        for (u, v) in zip(occ[Letter(0, i)], occ[Letter(0, i, True)]):
            p = b.add(rectangle(i))
            side_at[u], side_at[v] = (p, 0), (p, 2)
    for j, o in enumerate(alphabet.fin_orders):
        seq = occ[Letter(1, j)]
        for g in range(0, len(seq), o):
            p = b.add(group_polygon(j, o))
            for r, u in enumerate(seq[g:g + o]):
                side_at[u] = (p, 2 * r)
    # polygon successor: edge after side s  ->  edge before the next side
    nxt = {}
    for k, w in enumerate(loops):
        for t in range(len(w)):
            p, s = side_at[(k, t)]
            q, u = side_at[(k, (t + 1) % len(w))]
            n_q = len(segments(b.pieces[q]))
            nxt[(p, s + 1)] = (q, (u - 1) % n_q)
    done = set()
    for start in sorted(nxt):
        if start in done:
            continue
        cycle = []
        e = start
        while e not in done:
            done.add(e)
            cycle.append(e)
            e = nxt[e]
        labels = [segments(b.pieces[p])[s].label for p, s in cycle]
        poly = b.add(polygon(labels))
        for k, e in enumerate(cycle):
            b.glue((poly, k), e)
    return b.build()


# --------------------------------------------------------------- file I/O


def format_fatgraph(f: Fatgraph) -> str:
    lines = ["fatgraph", f"inf {f.alphabet.inf_count}"]
    if f.alphabet.fin_orders:
        lines.append("fin " + " ".join(map(str, f.alphabet.fin_orders)))
    if f.order is not None:
        lines.append(str(f.order))
    for p, pc in enumerate(f.pieces):
        lines.append(f"piece {p} {pc}")
    for (p, s), (q, t) in f.glue_pairs():
        lines.append(f"glue {p}.{s} {q}.{t}")
    return "\n".join(lines) + "\n"


def parse_fatgraph(text: str, alphabet: GenAlphabet | None = None) -> Fatgraph:
    """Parse the line-oriented fatgraph format.

    ``inf``/``fin``/``order`` lines are optional when ``alphabet`` is given.
    """
    header_seen = False
    inf = fin = order = None
    pieces: dict[int, tuple] = {}
    glues = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        try:
            if not header_seen:
                if toks != ["fatgraph"]:
                    raise ValueError("expected 'fatgraph' header")
                header_seen = True
            elif toks[0] == "inf":
                inf = int(toks[1])
            elif toks[0] == "fin":
                fin = tuple(int(x) for x in toks[1:])
            elif toks[0] == "order":
                order = CyclicOrder.parse(line)
            elif toks[0] == "piece":
                idx, kind = int(toks[1]), toks[2]
                if idx in pieces:
                    raise ValueError(f"duplicate piece {idx}")
                labels = []
                for t in toks[3:]:
                    x, e = parse_token(t)
                    if e != 1:
                        raise ValueError(f"exponent not allowed in piece label {t!r}")
                    labels.append(x)
                if kind not in (RECT, GPOLY, POLY):
                    raise ValueError(f"unknown piece kind {kind!r}")
                if kind != POLY and len(labels) != 1:
                    raise ValueError(f"{kind} takes exactly one generator")
                pieces[idx] = (kind, tuple(labels))
            elif toks[0] == "glue":
                a, b = (tuple(int(v) for v in t.split(".")) for t in toks[1:3])
                if len(toks) != 3 or len(a) != 2 or len(b) != 2:
                    raise ValueError("glue takes two <piece>.<segment> addresses")
                glues.append((a, b))
            else:
                raise ValueError(f"unknown directive {toks[0]!r}")
        except (ValueError, IndexError) as exc:
            raise FatgraphError(f"line {lineno}: {exc}") from None
    if not header_seen:
        raise FatgraphError("line 1: missing 'fatgraph' header")
    if alphabet is None:
        if inf is None:
            raise FatgraphError("no alphabet: add 'inf'/'fin' lines or supply an orbifold")
        alphabet = GenAlphabet(inf, fin or ())
    if sorted(pieces) != list(range(len(pieces))):
        raise FatgraphError("piece indices must be 0..n-1")
    b = FatgraphBuilder(alphabet, order)
    for idx in range(len(pieces)):
        kind, labels = pieces[idx]
        for x in labels:
            try:
                alphabet.check(x)
            except ValueError as exc:
                raise FatgraphError(f"piece {idx}: {exc}") from None
        if kind == RECT:
            if labels[0].kind != 0 or labels[0].inverse:
                raise FatgraphError(f"piece {idx}: rect needs a z<i> label")
            b.add(rectangle(labels[0].index))
        elif kind == GPOLY:
            if labels[0].kind != 1:
                raise FatgraphError(f"piece {idx}: gpoly needs a c<j> label")
            b.add(group_polygon(labels[0].index, alphabet.order(labels[0])))
        else:
            b.add(polygon(labels))
    for a, c in glues:
        for p, s in (a, c):
            if not (0 <= p < len(b.pieces) and 0 <= s < len(segments(b.pieces[p]))):
                raise FatgraphError(f"glue {a} {c}: no segment {p}.{s}")
        try:
            b.glue(a, c)
        except FatgraphError as exc:
            raise FatgraphError(f"glue {a} {c}: {exc}") from None
    return b.build()


# -------------------------------------------------------------------- DOT


def spine_dot(f: Fatgraph) -> str:
    """DOT text of the spine: one vertex per piece, one arc per gluing.

    Polygon to group polygon arcs leave the polygon; rectangle arcs run
    along the ``z_i`` side, i.e. from the polygon at ``re(z_i)`` into the
    rectangle and out to the polygon at ``re(Z_i)``.
    """
    shape = {POLY: "circle", RECT: "box", GPOLY: "hexagon"}
    lines = ["digraph spine {"]
    for p, pc in enumerate(f.pieces):
        lines.append(f'  n{p} [kind={pc.kind}, shape={shape[pc.kind]}, label="{pc}"];')
    for (p, s), (q, t) in f.glue_pairs():
        if f.pieces[p].kind != POLY:
            (p, s), (q, t) = (q, t), (p, s)
        other = f.pieces[q]
        label = segments(other)[t].label
        if other.kind == RECT and label.inverse:
            src, dst = q, p
        else:
            src, dst = p, q
        lines.append(f'  n{src} -> n{dst} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def z_balance(f: Fatgraph) -> tuple[int, ...]:
    """Exponent sums of the side labels (zero for closed-up pieces)."""
    letters = [seg.label for pc in f.pieces for seg in segments(pc) if not seg.edge]
    return z_exponent_sums(letters, f.alphabet)
