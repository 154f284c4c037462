import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from orbifat.stability.numbertheory import (
    Unreachable,
    is_witness,
    minimal_threshold,
    nt_bound,
    nt_witness,
    reachable_sums,
)


def brute_reachable(xs, limit):
    """Breadth-first over (sum, last index)."""
    seen = {(0, -1)}
    frontier = [(0, -1)]
    while frontier:
        nxt = []
        for v, last in frontier:
            for i, x in enumerate(xs):
                if i != last and v + x <= limit and (v + x, i) not in seen:
                    seen.add((v + x, i))
                    nxt.append((v + x, i))
        frontier = nxt
    return {v for v, _ in seen}


@pytest.mark.parametrize("xs, g, coeffs, N", [
    ((2, 2, 3), 1, (-1, 0, 1), 588),
    ((2, 4, 6), 2, (1, 0, 0), 432),
    ((3, 5, 7), 1, (2, -1, 0), 4050),
    ((4, 4, 4), 4, (1, 0, 0), 216),
    ((1, 1, 1), 1, (1, 0, 0), 54),
])
def test_bound_golden(xs, g, coeffs, N):
    inst = nt_bound(xs)
    assert (inst.g, inst.coeffs, inst.N) == (g, coeffs, N)
    assert sum(a * x for a, x in zip(inst.coeffs, xs)) == g
    k, s = len(xs), sum(xs)
    assert inst.N == 2 * k * s * (s // g) * (max(coeffs) - min(coeffs))


@pytest.mark.parametrize("xs, T", [((2, 2, 3), 2), ((3, 5, 7), 15), ((4, 4, 4), 0), ((2, 4, 6), 0)])
def test_minimal_threshold_golden(xs, T):
    assert minimal_threshold(nt_bound(xs)) == T


def test_bound_rejects_short_input():
    with pytest.raises(ValueError):
        nt_bound([2, 3])
    with pytest.raises(ValueError):
        nt_bound([2, 0, 3])


def test_small_witnesses():
    inst = nt_bound([2, 2, 3])
    seq = nt_witness(inst, 5)
    assert is_witness(inst.xs, seq, 5)
    assert nt_witness(inst, inst.s) == [0, 1, 2]
    with pytest.raises(Unreachable):
        nt_witness(inst, 1)
    with pytest.raises(Unreachable):
        nt_witness(nt_bound([4, 4, 4]), 218)


def test_reachable_matches_brute_force():
    rng = random.Random(7)
    for _ in range(30):
        xs = [rng.randint(1, 9) for _ in range(rng.randint(3, 4))]
        got = reachable_sums(xs, 80)
        want = brute_reachable(xs, 80)
        assert {v for v, ok in enumerate(got) if ok} == want


@given(st.lists(st.integers(1, 6), min_size=3, max_size=4), st.integers(0, 200))
def test_witness_at_and_above_bound(xs, t):
    inst = nt_bound(xs)
    C = inst.N + t * inst.g
    seq = nt_witness(inst, C)
    assert is_witness(inst.xs, seq, C)


@given(st.lists(st.integers(1, 6), min_size=3, max_size=4))
def test_threshold_below_bound(xs):
    inst = nt_bound(xs)
    T = minimal_threshold(inst)
    assert T <= inst.N
    ok = reachable_sums(inst.xs, inst.N + 50)
    assert all(ok[v] for v in range(T, inst.N + 51, inst.g))


@given(st.lists(st.integers(1, 6), min_size=3, max_size=4), st.integers(0, 120))
def test_witness_exists_iff_reachable(xs, C):
    inst = nt_bound(xs)
    ok = reachable_sums(inst.xs, C)[C]
    if ok:
        assert is_witness(inst.xs, nt_witness(inst, C), C)
    else:
        with pytest.raises(Unreachable):
            nt_witness(inst, C)
