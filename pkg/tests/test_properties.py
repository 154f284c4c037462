"""Randomized checks over desk-scale realizations and words."""

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from orbifat.fatgraph import (
    boundary,
    cell_euler_characteristic,
    euler_characteristic,
    format_fatgraph,
    parse_fatgraph,
    surface_summary,
)
from orbifat.realization import format_orbifold, parse_orbifold
from orbifat.stability import (
    build_Yprime_disk,
    build_Yprime_genus,
    expanded_words,
    z_edge_pairs,
)
from orbifat.words import (
    CyclicWord,
    ElementClass,
    classify,
    free_reduce,
    inverse,
    is_reduced,
    z_exponent_sums,
)

from conftest import realization_and_word, words

EXAMPLES = 500


def check_pair(r, w, g):
    """Every per-pair property; returns the Y' build or None if w is not hyperbolic."""
    a = r.alphabet
    assert len(w) <= 12
    # reduction
    once = free_reduce(w, a)
    assert free_reduce(once, a) == once and is_reduced(once, a)
    # classification under conjugation
    cls = classify(w, r)
    assert classify(g + w + inverse(g, a), r) is cls
    # realization file round trip
    assert parse_orbifold(format_orbifold(r)) == r
    if cls is not ElementClass.HYPERBOLIC:
        return None
    if r.is_disk:
        p = build_Yprime_disk(r, w)
    else:
        assert not any(z_exponent_sums(w, a))
        p = build_Yprime_genus(r, w)
        for i in range(a.inf_count):
            z_edge_pairs(p.fatgraph, i)
    f = p.fatgraph
    # the boundary reads w b^m, re-derived by an independent traversal
    (read,) = expanded_words(f, r)
    assert CyclicWord.of(read) == CyclicWord.of(p.word + r.boundary.letters * p.exponent)
    # Euler characteristic two ways, and the surface classification
    chi = euler_characteristic(f)
    assert chi == len(f.pieces) - f.num_gluings == cell_euler_characteristic(f)
    s = surface_summary(f)
    assert chi == 2 * s.components - 2 * s.genus - s.boundary_components
    assert len(boundary(f)) == 1
    # fatgraph file round trip
    text = format_fatgraph(f)
    back = parse_fatgraph(text)
    assert back.structurally_equal(f) and format_fatgraph(back) == text
    return p


@settings(max_examples=EXAMPLES)
@given(realization_and_word(max_len=12), st.data())
def test_random_pairs(rw, data):
    r, w = rw
    g = data.draw(words(r.alphabet, 5))
    check_pair(r, w, g)


@settings(max_examples=100)
@given(realization_and_word(max_len=12), st.data())
def test_random_hyperbolic_pairs(rw, data):
    r, w = rw
    assume(classify(w, r) is ElementClass.HYPERBOLIC)
    assert check_pair(r, w, ()) is not None
