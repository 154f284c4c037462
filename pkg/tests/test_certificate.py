import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from orbifat.certificate import IncompleteFatgraph, check_certificate, polygon_verdict
from orbifat.fatgraph import (
    Fatgraph,
    FatgraphBuilder,
    FatgraphError,
    group_polygon,
    parse_fatgraph,
    pinch,
    polygon,
)
from orbifat.realization import Realization
from orbifat.stability import build_module_A
from orbifat.words import ElementClass, c, parse_word

from conftest import FIXTURES, example22, torus

SPINE_ORDERS = ["c1 z0 c0 Z0", "c1 z0 Z0", "c0 z0 Z1", "c1 Z0", "c1 z1", "c0 Z1", "c0 z1"]


def spine():
    return parse_fatgraph((FIXTURES / "fig_spine.fg").read_text())


def test_spine_fixture_passes():
    r = example22()
    f = spine()
    got = [tuple(pc.labels) for _, pc in f.polygons()]
    assert got == [parse_word(t, r.alphabet) for t in SPINE_ORDERS]
    rep = check_certificate(f, r)
    assert rep.passed
    assert rep.lines()[-1] == "certificate: PASS"
    assert all(line.endswith("pass") for line in rep.lines()[:7])


def triangle_fatgraph(labels):
    """A triangle closed up by three group polygons of order 3."""
    r = Realization.from_text(0, (3, 3, 3), "c0 c1 c2")
    fb = FatgraphBuilder(r.alphabet)
    tri = fb.add(polygon(labels))
    for s, x in enumerate(labels):
        g = fb.add(group_polygon(x.index, 3))
        fb.glue((tri, s), (g, 1))
        for t in (3, 5):
            mono = fb.add(polygon([x]))
            fb.glue((mono, 0), (g, t))
    return fb.build(), r


def test_reversed_triangle_fails():
    f, r = triangle_fatgraph([c(2), c(1), c(0)])
    rep = check_certificate(f, r)
    assert not rep.passed
    assert rep.polygons[0].witness is not None
    assert rep.polygons[0].line().startswith("polygon 0 incompat:")


def test_forward_triangle_passes_polygons():
    f, r = triangle_fatgraph([c(0), c(1), c(2)])
    rep = check_certificate(f, r)
    assert all(v.ok for v in rep.polygons)


def test_parabolic_boundary_fails():
    r = torus()
    f = build_module_A(r)
    rep = check_certificate(f, r)
    assert all(v.ok for v in rep.polygons)
    assert rep.boundary_classes == (ElementClass.PARABOLIC,)
    assert not rep.passed
    assert "boundary 0 parabolic" in rep.failures


def test_repeated_label_is_notsmall():
    r = example22()
    v = polygon_verdict(3, parse_word("c0 z0 c0 Z0", r.alphabet), r)
    assert v.line() == "polygon 3 notsmall:c0"


def test_incomplete_rejected():
    r = example22()
    fb = FatgraphBuilder(r.alphabet)
    fb.add(polygon(r.order.symbols))
    with pytest.raises(IncompleteFatgraph):
        check_certificate(fb.build(), r)


def test_invalid_rejected():
    r = example22()
    fb = FatgraphBuilder(r.alphabet)
    fb.add(polygon([c(0), c(0)]))
    fb.add(polygon(parse_word("z0 z0 c1", r.alphabet)))
    with pytest.raises(FatgraphError):
        check_certificate(fb.build(), r)


def test_pinched_loop_can_fail():
    r = example22()
    loop = parse_word("z0 c0 c0 c0 c0 Z0 c1 c2 c1 c1 c1 c2 c2 c2", r.alphabet)
    f = pinch([loop], r.alphabet)
    rep = check_certificate(f, r)
    assert not rep.passed


def reindexed(f: Fatgraph, seed: int) -> Fatgraph:
    rng = random.Random(seed)
    perm = list(range(len(f.pieces)))
    rng.shuffle(perm)
    pieces = [None] * len(perm)
    for old, new in enumerate(perm):
        pieces[new] = f.pieces[old]
    pairs = list(f.glue_pairs())
    rng.shuffle(pairs)
    fb = FatgraphBuilder(f.alphabet, f.order)
    fb.pieces = pieces
    for (p, s), (q, t) in pairs:
        fb.glue((perm[q], t), (perm[p], s))
    return fb.build()


@given(st.integers(0, 1000))
def test_verdict_invariant_under_reindexing(seed):
    r = example22()
    f = spine()
    g = reindexed(f, seed)
    a, b = check_certificate(f, r), check_certificate(g, r)
    assert a.passed == b.passed
    assert sorted(v.ok for v in a.polygons) == sorted(v.ok for v in b.polygons)


def brute_ok(labels, order):
    if len(set(labels)) != len(labels):
        return False
    restricted = tuple(x for x in order.symbols if x in labels)
    n = len(labels)
    return any(tuple(labels[i:] + labels[:i]) == restricted for i in range(n))


def test_polygon_verdict_matches_brute_force():
    r = example22()
    syms = r.order.symbols
    for n in range(1, 5):
        for labels in itertools.product(syms, repeat=n):
            v = polygon_verdict(0, labels, r)
            assert v.ok == brute_ok(list(labels), r.order)


@given(st.permutations(list(example22().order.symbols)), st.integers(1, 7))
def test_polygon_verdict_random_subsets(perm, n):
    r = example22()
    labels = perm[:n]
    assert polygon_verdict(0, labels, r).ok == brute_ok(labels, r.order)
    assert polygon_verdict(0, labels + labels[:1], r).repeated is not None


def test_report_format():
    rep = check_certificate(spine(), example22())
    text = rep.format()
    assert text.endswith("certificate: PASS\n")
    assert text.count("polygon ") == 7
