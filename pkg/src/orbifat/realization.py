"""Orbifold realizations: an alphabet plus a cyclic order on its symbols.

The boundary word ``b`` is never supplied by the user; it is read off the
boundary of the standard polygon with every rectangle glued at both ends.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .cyclic import CyclicOrder
from .words import CyclicWord, GenAlphabet, Letter, z


class RealizationError(ValueError):
    pass


class NotHyperbolicOrbifold(RealizationError):
    pass


class NonStandardOrder(RealizationError):
    pass


@dataclass(frozen=True)
class Disk:
    orders: tuple[int, ...]


@dataclass(frozen=True)
class Genus:
    genus: int
    orders: tuple[int, ...]


def standard_z_order(inf_count: int) -> tuple[Letter, ...]:
    """``z0 Z1 Z0 z1 z2 Z3 Z2 z3 ...``: the order giving commutator boundaries."""
    out = []
    for i in range(0, inf_count, 2):
        out += [z(i), z(i + 1, -1), z(i, -1), z(i + 1)]
    return tuple(out)


@dataclass(frozen=True, eq=False)
class Realization:
    alphabet: GenAlphabet
    order: CyclicOrder
    boundary: CyclicWord = field(init=False, repr=False)

    def __post_init__(self):
        a = self.alphabet
        if not self.order.matches_alphabet(a):
            raise RealizationError(
                f"cyclic order must list each of {' '.join(map(str, a.symbols()))} exactly once")
        if a.inf_count == 0 and a.fin_count <= 2:
            raise NotHyperbolicOrbifold(
                f"a disk orbifold needs at least three cone points, got {a.fin_count}")
        if a.inf_count:
            if a.inf_count % 2:
                raise NonStandardOrder(
                    f"{a.inf_count} infinite-order generators cannot pair up into handles")
            zs = tuple(x for x in self.order.symbols if x.kind == 0)
            if CyclicOrder(zs) != CyclicOrder(standard_z_order(a.inf_count)):
                raise NonStandardOrder(
                    "infinite-order symbols must appear in the cyclic order as "
                    + " ".join(map(str, standard_z_order(a.inf_count))))
        object.__setattr__(self, "boundary", derive_boundary_word(self))

    def __eq__(self, other) -> bool:
        return (isinstance(other, Realization) and self.alphabet == other.alphabet
                and self.order == other.order)

    def __hash__(self) -> int:
        return hash((self.alphabet, self.order))

    @classmethod
    def from_text(cls, inf: int, fin, order: str) -> "Realization":
        return cls(GenAlphabet(inf, tuple(fin)), CyclicOrder.parse(order))

    def shape(self) -> Disk | Genus:
        a = self.alphabet
        if a.inf_count == 0:
            return Disk(a.fin_orders)
        return Genus(a.inf_count // 2, a.fin_orders)

    @property
    def is_disk(self) -> bool:
        return self.alphabet.inf_count == 0

    def b_subwords(self, i: int) -> tuple[tuple[Letter, ...], tuple[Letter, ...]]:
        """``(b_plus, b_minus)``: the parts of ``b`` strictly between ``z_i``
        and ``Z_i``, and between ``Z_i`` and ``z_i``."""
        b = self.boundary.letters
        try:
            p, q = b.index(z(i)), b.index(z(i, -1))
        except ValueError:
            raise RealizationError(f"z{i} does not occur in the boundary word") from None
        rot = b[p:] + b[:p]
        q = (q - p) % len(b)
        return rot[1:q], rot[q + 1:]

    @cached_property
    def _edge_loops(self) -> dict:
        out = {}
        for i in range(self.alphabet.inf_count):
            plus, minus = self.b_subwords(i)
            out[z(i)] = (z(i),) + plus + (z(i, -1),)
            out[z(i, -1)] = (z(i, -1),) + minus + (z(i),)
        return out

    def edge_loop(self, x: Letter) -> tuple[Letter, ...]:
        """What an unglued ``pe(x)`` contributes once a module fills it."""
        if x.kind == 1:
            return (x,)
        return self._edge_loops[x]


def derive_boundary_word(r: Realization) -> CyclicWord:
    """Boundary of the standard polygon with all rectangles closed up."""
    from .fatgraph import boundary, read_word
    from .stability.modules import module_A

    rep = boundary(module_A(r.alphabet, r.order))
    if len(rep) != 1:
        raise RealizationError(
            f"cyclic order gives {len(rep)} boundary components; exactly one cusp is supported")
    return CyclicWord.of(read_word(rep.components[0]))


def boundary_by_rule(order: CyclicOrder) -> tuple[Letter, ...] | None:
    """Successor rule ``next(x) = succ(x^-1)`` followed from the first symbol.

    Returns None unless the rule forms a single cycle.  Used as an
    independent check of the module construction.
    """
    start = order.symbols[0]
    out, x = [start], order.succ(start.inv())
    while x != start:
        out.append(x)
        if len(out) > len(order):
            return None
        x = order.succ(x.inv())
    return tuple(out) if len(out) == len(order) else None


# ----------------------------------------------------------------- file I/O


def format_orbifold(r: Realization) -> str:
    lines = ["orbifold", f"inf {r.alphabet.inf_count}"]
    if r.alphabet.fin_orders:
        lines.append("fin " + " ".join(map(str, r.alphabet.fin_orders)))
    lines.append(str(r.order))
    return "\n".join(lines) + "\n"


def parse_orbifold(text: str) -> Realization:
    header = False
    inf, fin, order = None, (), None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        try:
            if not header:
                if toks != ["orbifold"]:
                    raise ValueError("expected 'orbifold' header")
                header = True
            elif toks[0] == "inf" and len(toks) == 2:
                inf = int(toks[1])
            elif toks[0] == "fin":
                fin = tuple(int(t) for t in toks[1:])
            elif toks[0] == "order":
                order = CyclicOrder.parse(line)
            else:
                raise ValueError(f"unrecognized line {line!r}")
        except ValueError as exc:
            raise RealizationError(f"line {lineno}: {exc}") from None
    if not header:
        raise RealizationError("line 1: missing 'orbifold' header")
    if inf is None or order is None:
        raise RealizationError("orbifold file needs 'inf' and 'order' lines")
    return Realization(GenAlphabet(inf, fin), order)


def core_graph_dot(r: Realization) -> str:
    """DOT text of the core graph, with the cyclic order as edge attribute."""
    a = r.alphabet
    pos = {x: k for k, x in enumerate(r.order.symbols)}
    lines = ["digraph core {", "  p [shape=point];"]
    for i in range(a.inf_count):
        lines.append(f"  z{i} [shape=circle];")
    for j in range(a.fin_count):
        lines.append(f'  c{j} [shape=doublecircle, order={a.fin_orders[j]}];')
    for i in range(a.inf_count):
        lines.append(f'  p -> z{i} [label="z{i}", cyclic_pos={pos[z(i)]}];')
        lines.append(f'  z{i} -> p [label="z{i}", cyclic_pos={pos[z(i, -1)]}];')
    for j in range(a.fin_count):
        lines.append(f'  p -> c{j} [label="c{j}", cyclic_pos={pos[Letter(1, j)]}];')
    lines.append(f'  label="{r.order}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
