"""Sums of a list of integers along sequences with no repeated neighbours."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


class Unreachable(ValueError):
    """No index sequence with distinct neighbours has the requested sum."""


def _bezout_pair(a: int, b: int) -> tuple[int, int, int]:
    """``(g, u, v)`` with ``u*a + v*b = g`` and ``|u| + |v|`` minimal."""
    old_r, r, old_u, u, old_v, v = a, b, 1, 0, 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_u, u = u, old_u - q * u
        old_v, v = v, old_v - q * v
    g = old_r
    du, dv = b // g, a // g
    # every solution is (old_u + t*du, old_v - t*dv); scan around the minimum
    t0 = -old_u // du if du else 0
    best = None
    for t in range(t0 - 2, t0 + 3):
        cand = (old_u + t * du, old_v - t * dv)
        key = (abs(cand[0]) + abs(cand[1]), abs(cand[1]), -cand[0])
        if best is None or key < best[0]:
            best = (key, cand)
    return g, best[1][0], best[1][1]


@dataclass(frozen=True)
class NTInstance:
    xs: tuple[int, ...]
    g: int
    s: int
    coeffs: tuple[int, ...]
    N: int

    @property
    def k(self) -> int:
        return len(self.xs)


def nt_bound(xs: Sequence[int]) -> NTInstance:
    """gcd, Bezout coefficients and the constructive threshold N.

    >>> nt_bound([2, 2, 3]).N
    588
    """
    xs = tuple(int(x) for x in xs)
    if len(xs) < 3:
        raise ValueError(f"need at least three values, got {len(xs)}")
    if any(x < 1 for x in xs):
        raise ValueError("values must be positive")
    g, coeffs = xs[0], [1]
    for x in xs[1:]:
        g, u, v = _bezout_pair(g, x)
        coeffs = [a * u for a in coeffs] + [v]
    s = sum(xs)
    hi, lo = max(coeffs), min(coeffs)
    return NTInstance(xs, g, s, tuple(coeffs), 2 * len(xs) * s * (s // g) * (hi - lo))


def is_witness(xs: Sequence[int], seq: Sequence[int], target: int) -> bool:
    return (sum(xs[i] for i in seq) == target
            and all(a != b for a, b in zip(seq, seq[1:])))


def _constructive(inst: NTInstance, C: int) -> list[int]:
    k, s, g = inst.k, inst.s, inst.g
    top = max(inst.coeffs)
    c, r = divmod(C, s)
    d = r // g
    nruns = c + d * top
    runs = [list(range(k)) for _ in range(nruns)]
    for i, a in enumerate(inst.coeffs):
        for t in range(d * (top - a)):
            runs[2 * t].remove(i)
    # removals may leave a short run whose ends clash with the full runs
    # around it; full runs are free to rotate, so pick a rotation that fits
    runs = [run for run in runs if run]
    out: list[int] = []
    for n, run in enumerate(runs):
        if len(run) == k:
            nxt = runs[n + 1][0] if n + 1 < len(runs) and len(runs[n + 1]) < k else None
            prev = out[-1] if out else None
            rot = next(t for t in range(k)
                       if t != prev and (t - 1) % k != nxt)
            run = run[rot:] + run[:rot]
        out.extend(run)
    return out


def _search(xs: Sequence[int], target: int) -> list[int] | None:
    """Exact search over (sum, last index) for small targets."""
    k = len(xs)
    # parent[v][i] = previous index (or -1 at the start) on some path to sum v ending in i
    parent: list[list[int | None]] = [[None] * k for _ in range(target + 1)]
    for i, x in enumerate(xs):
        if x <= target:
            parent[x][i] = -1
    for v in range(1, target + 1):
        row = parent[v]
        for i in range(k):
            if row[i] is None:
                continue
            for j, x in enumerate(xs):
                if j != i and v + x <= target and parent[v + x][j] is None:
                    parent[v + x][j] = i
    end = next((i for i in range(k) if parent[target][i] is not None), None)
    if end is None:
        return None
    seq, v, i = [], target, end
    while i != -1:
        seq.append(i)
        i, v = parent[v][i], v - xs[i]
    return seq[::-1]


def nt_witness(inst: NTInstance, C: int) -> list[int]:
    """Indices with distinct neighbours whose values sum to ``C``.

    Targets at or above ``inst.N`` use the run-removal construction;
    smaller ones fall back to an exact search.
    """
    if C < 0 or C % inst.g:
        raise Unreachable(f"{C} is not a non-negative multiple of gcd {inst.g}")
    if C % inst.s == 0:
        seq = list(range(inst.k)) * (C // inst.s)
    elif C >= inst.N:
        seq = _constructive(inst, C)
    else:
        seq = _search(inst.xs, C)
        if seq is None:
            raise Unreachable(f"{C} is not a sum of {list(inst.xs)} with distinct neighbours")
    if not is_witness(inst.xs, seq, C):
        raise AssertionError(f"internal error: bad witness for {C}")
    return seq


def reachable_sums(xs: Sequence[int], limit: int) -> list[bool]:
    """``out[v]`` is True iff ``v`` is a distinct-neighbour sum (0 included)."""
    k = len(xs)
    ends = [[False] * k for _ in range(limit + 1)]
    for i, x in enumerate(xs):
        if x <= limit:
            ends[x][i] = True
    for v in range(1, limit + 1):
        for i in range(k):
            if ends[v][i]:
                for j, x in enumerate(xs):
                    if j != i and v + x <= limit:
                        ends[v + x][j] = True
    out = [any(row) for row in ends]
    out[0] = True
    return out


def minimal_threshold(inst: NTInstance) -> int:
    """Least T with every multiple of g in ``[T, N]`` reachable."""
    ok = reachable_sums(inst.xs, inst.N)
    t = inst.N
    while t - inst.g >= 0 and ok[t - inst.g]:
        t -= inst.g
    return t
