"""Words in free products of cyclic groups.

The group is ``(*_i Z_i) * (*_j C_j)`` with infinite-order generators
``z0, z1, ...`` and finite-order generators ``c0, c1, ...`` of orders
``o_j``.  Letters are small named tuples; a word is a plain tuple of
letters.  Finite-order generators only ever appear with positive sign,
so ``c0^-1`` is stored as ``c0`` repeated ``o_0 - 1`` times.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence


class WordSyntaxError(ValueError):
    """Raised for malformed word text."""


class Letter(NamedTuple):
    """One generator occurrence.

    ``kind`` is 0 for infinite-order generators and 1 for finite-order
    ones, so the natural tuple order is the canonical letter order
    ``z0 < Z0 < z1 < Z1 < ... < c0 < c1 < ...``.
    """

    kind: int
    index: int
    inverse: bool = False

    @property
    def is_finite(self) -> bool:
        return self.kind == 1

    def inv(self) -> "Letter":
        """Formal inverse of a symbol (``c_j`` maps to itself)."""
        if self.kind == 1:
            return self
        return Letter(0, self.index, not self.inverse)

    def __str__(self) -> str:
        if self.kind == 1:
            return f"c{self.index}"
        return f"{'Z' if self.inverse else 'z'}{self.index}"

    def __repr__(self) -> str:
        return f"<{self}>"


def z(i: int, sign: int = 1) -> Letter:
    return Letter(0, i, sign < 0)


def c(j: int) -> Letter:
    return Letter(1, j, False)


Word = tuple  # tuple[Letter, ...]


@dataclass(frozen=True)
class GenAlphabet:
    """Counts and orders of the generators."""

    inf_count: int
    fin_orders: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "fin_orders", tuple(int(o) for o in self.fin_orders))
        if self.inf_count < 0:
            raise ValueError("inf_count must be non-negative")
        if any(o < 2 for o in self.fin_orders):
            raise ValueError(f"finite orders must be >= 2, got {self.fin_orders}")
        if self.inf_count + len(self.fin_orders) < 1:
            raise ValueError("alphabet needs at least one generator")

    @property
    def fin_count(self) -> int:
        return len(self.fin_orders)

    def order(self, letter: Letter) -> int:
        return self.fin_orders[letter.index]

    def check(self, letter: Letter) -> None:
        bound = self.fin_count if letter.kind == 1 else self.inf_count
        if not 0 <= letter.index < bound:
            raise ValueError(f"letter {letter} outside alphabet {self}")

    def symbols(self) -> list[Letter]:
        """The symbol set S in canonical letter order."""
        out = []
        for i in range(self.inf_count):
            out += [z(i), z(i, -1)]
        out += [c(j) for j in range(self.fin_count)]
        return out


class ElementClass(enum.Enum):
    IDENTITY = "identity"
    ELLIPTIC = "elliptic"
    PARABOLIC = "parabolic"
    HYPERBOLIC = "hyperbolic"


# ---------------------------------------------------------------- text I/O

_TOKEN = re.compile(r"^([zZc])(\d+)(?:\^(-?\d+))?$")


def parse_token(tok: str) -> tuple[Letter, int]:
    """Split a token like ``Z1^3`` into its letter and exponent."""
    m = _TOKEN.match(tok)
    if m is None:
        raise WordSyntaxError(f"bad token {tok!r}")
    head, idx, exp = m.groups()
    letter = Letter(1 if head == "c" else 0, int(idx), head == "Z")
    return letter, 1 if exp is None else int(exp)


def parse_word(text: str | Iterable[str], alphabet: GenAlphabet) -> Word:
    """Parse whitespace separated tokens into a (not yet reduced) word.

    >>> a = GenAlphabet(1, (3,))
    >>> format_word(parse_word("z0^2 c0^-1 Z0", a))
    'z0 z0 c0 c0 Z0'
    """
    tokens = text.split() if isinstance(text, str) else list(text)
    out: list[Letter] = []
    for col, tok in enumerate(tokens):
        try:
            letter, exp = parse_token(tok)
            alphabet.check(letter)
        except ValueError as exc:
            raise WordSyntaxError(f"token {col}: {exc}") from None
        if letter.kind == 1:
            exp %= alphabet.order(letter)
        elif exp < 0:
            letter, exp = letter.inv(), -exp
        out.extend([letter] * exp)
    return tuple(out)


def format_word(word: Sequence[Letter]) -> str:
    return " ".join(str(x) for x in word)


def format_compact(word: Sequence[Letter]) -> str:
    """Run-length form, e.g. ``c0 c1^2 c2 c1``."""
    parts = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        n = j - i
        parts.append(str(word[i]) if n == 1 else f"{word[i]}^{n}")
        i = j
    return " ".join(parts)


# ------------------------------------------------------------- reduction


def _runs(word: Iterable[Letter], alphabet: GenAlphabet) -> list[list]:
    # stack of [letter, count]; z runs never hold a letter and its inverse
    stack: list[list] = []
    for x in word:
        alphabet.check(x)
        if stack and stack[-1][0] == x:
            stack[-1][1] += 1
            if x.kind == 1 and stack[-1][1] == alphabet.order(x):
                stack.pop()
        elif x.kind == 0 and stack and stack[-1][0] == x.inv():
            stack[-1][1] -= 1
            if stack[-1][1] == 0:
                stack.pop()
        else:
            stack.append([x, 1])
    return stack


def free_reduce(word: Iterable[Letter], alphabet: GenAlphabet) -> Word:
    """Normal form in the free product.

    >>> a = GenAlphabet(2, (3,))
    >>> free_reduce(parse_word("z0 z1 Z1 Z0 c0 c0 c0", a), a)
    ()
    """
    return tuple(x for x, n in _runs(word, alphabet) for _ in range(n))


def is_reduced(word: Sequence[Letter], alphabet: GenAlphabet) -> bool:
    return free_reduce(word, alphabet) == tuple(word)


def inverse(word: Sequence[Letter], alphabet: GenAlphabet) -> Word:
    out: list[Letter] = []
    for x in reversed(word):
        if x.kind == 1:
            out.extend([x] * (alphabet.order(x) - 1))
        else:
            out.append(x.inv())
    return tuple(out)


def multiply(alphabet: GenAlphabet, *words: Sequence[Letter]) -> Word:
    return free_reduce((x for w in words for x in w), alphabet)


def least_rotation(seq: Sequence) -> int:
    """Start index of the lexicographically least rotation (Booth)."""
    n = len(seq)
    if n == 0:
        return 0
    s = list(seq) * 2
    fail = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        sj = s[j]
        i = fail[j - k - 1]
        while i != -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j - i - 1
            i = fail[i]
        if sj != s[k + i + 1]:
            if sj < s[k]:
                k = j
            fail[j - k] = -1
        else:
            fail[j - k] = i + 1
    return k


def canonical_rotation(seq: Sequence) -> tuple:
    k = least_rotation(seq)
    return tuple(seq[k:]) + tuple(seq[:k])


@dataclass(frozen=True)
class CyclicWord:
    """A cyclic word stored in its least rotation."""

    letters: tuple

    @classmethod
    def of(cls, seq: Sequence) -> "CyclicWord":
        return cls(canonical_rotation(seq))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return format_word(self.letters)

    def power(self, k: int) -> "CyclicWord":
        return CyclicWord.of(self.letters * k)


def cyclic_reduce(word: Iterable[Letter], alphabet: GenAlphabet) -> tuple[CyclicWord, Word]:
    """Return ``(core, conjugator)`` with ``word = conjugator core conjugator^-1``.

    The conjugator is expressed against ``core.letters`` in its canonical
    rotation.
    """
    runs = _runs(word, alphabet)
    conj: list[Letter] = []
    lo, hi = 0, len(runs)
    while hi - lo >= 2 and runs[lo][0] == runs[hi - 1][0].inv():
        x, y = runs[lo], runs[hi - 1]
        if x[0].kind == 1:
            conj.extend([x[0]] * x[1])
            total = (x[1] + y[1]) % alphabet.order(x[0])
            lo += 1
            if total:
                y[1] = total
                break
            hi -= 1
        else:
            k = min(x[1], y[1])
            conj.extend([x[0]] * k)
            x[1] -= k
            y[1] -= k
            if x[1] == 0:
                lo += 1
            if y[1] == 0:
                hi -= 1
    core = [x for r, n in runs[lo:hi] for x in [r] * n]
    k = least_rotation(core)
    conj.extend(core[:k])
    return CyclicWord(tuple(core[k:] + core[:k])), free_reduce(conj, alphabet)


def z_exponent_sums(word: Iterable[Letter], alphabet: GenAlphabet) -> tuple[int, ...]:
    sums = [0] * alphabet.inf_count
    for x in word:
        if x.kind == 0:
            sums[x.index] += -1 if x.inverse else 1
    return tuple(sums)


def _has_period(seq: Sequence, base: tuple) -> bool:
    """True if ``seq`` is a cyclic power of some rotation of ``base``."""
    p = len(base)
    if p == 0 or len(seq) % p:
        return False
    if any(seq[i] != seq[i - p] for i in range(p, len(seq))):
        return False
    return canonical_rotation(seq[:p]) == canonical_rotation(base)


def classify(word: Iterable[Letter], realization) -> ElementClass:
    """Identity, elliptic, parabolic or hyperbolic.

    Parabolic means conjugate to a nonzero power of the boundary word.
    """
    alphabet = realization.alphabet
    core, _ = cyclic_reduce(word, alphabet)
    seq = core.letters
    if not seq:
        return ElementClass.IDENTITY
    if seq[0].kind == 1 and all(x == seq[0] for x in seq):
        return ElementClass.ELLIPTIC
    b = realization.boundary.letters
    if _has_period(seq, b):
        return ElementClass.PARABOLIC
    binv = inverse(b, alphabet)
    if _has_period(seq, binv):
        return ElementClass.PARABOLIC
    return ElementClass.HYPERBOLIC
