"""Cyclic orders on the symbol set and compatibility of sub-orders."""

from __future__ import annotations

from typing import Sequence

from .words import GenAlphabet, Letter, canonical_rotation, parse_token


class CyclicOrder:
    """A cyclic arrangement of distinct symbols, kept in least rotation."""

    __slots__ = ("symbols", "_pos")

    def __init__(self, symbols: Sequence[Letter]):
        syms = canonical_rotation(list(symbols))
        if len(set(syms)) != len(syms):
            raise ValueError("cyclic order has repeated symbols")
        self.symbols: tuple[Letter, ...] = syms
        self._pos = {s: k for k, s in enumerate(syms)}

    @classmethod
    def parse(cls, text: str) -> "CyclicOrder":
        """Parse ``order z0 Z1 c0 ...`` (the leading keyword is optional)."""
        toks = text.split()
        if toks and toks[0] == "order":
            toks = toks[1:]
        syms = []
        for t in toks:
            letter, exp = parse_token(t)
            if exp != 1:
                raise ValueError(f"exponent not allowed in a cyclic order: {t!r}")
            syms.append(letter)
        return cls(syms)

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __contains__(self, x) -> bool:
        return x in self._pos

    def __eq__(self, other) -> bool:
        return isinstance(other, CyclicOrder) and self.symbols == other.symbols

    def __hash__(self) -> int:
        return hash(self.symbols)

    def __repr__(self) -> str:
        return "[" + ", ".join(map(str, self.symbols)) + "]"

    def __str__(self) -> str:
        return "order " + " ".join(map(str, self.symbols))

    def position(self, x: Letter) -> int:
        try:
            return self._pos[x]
        except KeyError:
            raise ValueError(f"symbol {x} not in cyclic order") from None

    def succ(self, x: Letter) -> Letter:
        return self.symbols[(self.position(x) + 1) % len(self.symbols)]

    def pred(self, x: Letter) -> Letter:
        return self.symbols[self.position(x) - 1]

    def matches_alphabet(self, alphabet: GenAlphabet) -> bool:
        return sorted(self.symbols) == alphabet.symbols()

    def restrict(self, keep) -> tuple[Letter, ...]:
        return tuple(s for s in self.symbols if s in keep)


def order_triple(order: CyclicOrder, x: Letter, y: Letter, z: Letter) -> int:
    """+1 if ``(x, y, z)`` is positively ordered, -1 if negatively, 0 on repeats."""
    px, py, pz = order.position(x), order.position(y), order.position(z)
    if px == py or py == pz or px == pz:
        return 0
    n = len(order)
    return 1 if (py - px) % n < (pz - px) % n else -1


def incompatibility_witness(sub: Sequence[Letter], order: CyclicOrder):
    """A triple of ``sub`` (in sub order) that ``order`` reverses, or None."""
    if len(set(sub)) != len(sub):
        raise ValueError("sub-order has repeated symbols; check smallness first")
    n = len(order)
    p0 = order.position(sub[0]) if sub else 0
    last = 0
    for k in range(1, len(sub)):
        rel = (order.position(sub[k]) - p0) % n
        if rel < last:
            return sub[0], sub[k - 1], sub[k]
        last = rel
    return None


def is_compatible(sub: Sequence[Letter], order: CyclicOrder) -> bool:
    """True iff ``sub`` is the restriction of ``order`` to its support.

    >>> O = CyclicOrder.parse("order c0 c1 c2 c3")
    >>> is_compatible(CyclicOrder.parse("c3 c0 c2").symbols, O)
    True
    """
    return incompatibility_witness(sub, order) is None


def interval(order: CyclicOrder, start: Letter, end: Letter) -> tuple[Letter, ...]:
    """Closed arc of ``order`` running from ``start`` forward to ``end``."""
    n = len(order)
    a, b = order.position(start), order.position(end)
    return tuple(order.symbols[(a + k) % n] for k in range((b - a) % n + 1))
