"""End-to-end acceptance checks, one per criterion.

Each test prints a ``criterion N: PASS`` or ``criterion N: FAIL`` line.
Run ``python tests/test_acceptance.py`` for the summary alone.
"""

import contextlib
import random
import sys
import time
import traceback

from hypothesis import given, settings
from hypothesis import strategies as st

from orbifat.certificate import check_certificate
from orbifat.fatgraph import boundary, census, covers, parse_fatgraph, read_word
from orbifat.realization import Realization, derive_boundary_word
from orbifat.stability import (
    attach_A_modules,
    build_disk_surface,
    build_genus_surface,
    build_Yprime_genus,
    minimal_threshold,
    nt_bound,
    nt_witness,
)
from orbifat.stability.numbertheory import is_witness
from orbifat.words import CyclicWord, c, parse_word

from conftest import FIXTURES, realization_and_word, words
from test_certificate import SPINE_ORDERS, triangle_fatgraph
from test_numbertheory import brute_reachable
from test_properties import check_pair


def report(capsys, n, body):
    """Run ``body``; print one status line; re-raise on failure."""
    t = time.perf_counter()
    error = None
    try:
        detail = body()
    except Exception as exc:
        error = exc
        line = f"criterion {n}: FAIL  {type(exc).__name__}: {exc}"
    else:
        line = f"criterion {n}: PASS  {detail} ({time.perf_counter() - t:.2f}s)"
    with capsys.disabled():
        print(f"\n{line}")
    if error is not None:
        raise error


def test_criterion_1_boundary_derivation(capsys):
    def body():
        r = Realization.from_text(2, (4, 4, 4), "c1 c2 z0 Z1 c0 Z0 z1")
        t = time.perf_counter()
        b = derive_boundary_word(r)
        dt = time.perf_counter() - t
        assert b == CyclicWord.of(parse_word("c0 Z0 Z1 c1 c2 z0 z1", r.alphabet))
        assert dt < 1e-3, f"{dt * 1e3:.2f} ms"
        return f"b = {b}, {dt * 1e6:.0f} us"
    report(capsys, 1, body)


def test_criterion_2_fixture_boundary(capsys):
    def body():
        f = parse_fatgraph((FIXTURES / "fig_cyclic_fatgraph.fg").read_text())
        got = sorted(boundary(f).format())
        want = sorted(["z0 c0 Z1 c0 Z0 c1 z0 c1 Z1 c0 Z0 Z1 c1 Z0 c1 z1", "z0 z1", "z1 c0"])
        assert got == want, got
        assert census(f).polygons == {2: 7, 3: 2}
        return "3 components, 7 bigons + 2 triangles"
    report(capsys, 2, body)


def test_criterion_3_certificate(capsys):
    def body():
        r = Realization.from_text(2, (4, 4, 4), "c1 c2 z0 Z1 c0 Z0 z1")
        f = parse_fatgraph((FIXTURES / "fig_spine.fg").read_text())
        got = [tuple(pc.labels) for _, pc in f.polygons()]
        assert got == [parse_word(t, r.alphabet) for t in SPINE_ORDERS]
        assert check_certificate(f, r).passed
        tri, r3 = triangle_fatgraph([c(2), c(1), c(0)])
        rep = check_certificate(tri, r3)
        assert not rep.passed and rep.polygons[0].witness is not None
        return f"spine PASS, reversed triangle {rep.polygons[0].line()}"
    report(capsys, 3, body)


def test_criterion_4_disk_end_to_end(capsys):
    def body():
        r = Realization.from_text(0, (3, 3, 4), "c0 c1 c2")
        w = parse_word("c0 c1^2 c2 c1", r.alphabet)
        inst = nt_bound([2, 2, 3])
        assert inst.g == 1
        exps = []
        for n in range(6):
            t = time.perf_counter()
            s = build_disk_surface(r, w, n)
            dt = time.perf_counter() - t
            assert dt < 1, f"n={n} took {dt:.2f}s"
            f = s.fatgraph
            assert f.is_complete() and check_certificate(f, r).passed
            assert s.degree == 12 and covers(boundary(f), s.target) == 12
            assert s.exponent == s.N + n * inst.g
            exps.append(s.exponent)
        return f"degree 12, exponents {exps}"
    report(capsys, 4, body)


def test_criterion_5_genus_reproduction(capsys):
    def body():
        r = Realization.from_text(2, (3,), "z0 Z1 c0 Z0 z1")
        w = parse_word("z0 c0 Z0 c0", r.alphabet)
        y = attach_A_modules(build_Yprime_genus(r, w, pad_b2=False), r)
        comps = boundary(y.fatgraph).components
        assert len(comps) == 1
        read = read_word(comps[0])
        assert y.exponent == 14
        assert CyclicWord.of(read) == CyclicWord.of(w + r.boundary.letters * 14)
        return "Y'' reads w b^14"
    report(capsys, 5, body)


def test_criterion_6_genus_end_to_end(capsys):
    def body():
        cases = [
            (Realization.from_text(2, (3,), "z0 Z1 c0 Z0 z1"), "z0 c0 Z0 c0", 3),
            (Realization.from_text(2, (), "z0 Z1 Z0 z1"), "z0 z0 z1 Z0 Z0 Z1", 1),
        ]
        out = []
        for r, text, L in cases:
            w = parse_word(text, r.alphabet)
            degs = []
            for n in range(6):
                t = time.perf_counter()
                s = build_genus_surface(r, w, n)
                dt = time.perf_counter() - t
                assert dt < 5, f"n={n} took {dt:.2f}s"
                f = s.fatgraph
                assert f.is_complete() and check_certificate(f, r).passed
                assert s.exponent == s.N + n
                want = L if n % 2 == 0 else 2 * L
                assert s.degree == want and covers(boundary(f), s.target) == want
                degs.append(s.degree)
            out.append(f"degrees {degs}")
        return "; ".join(out)
    report(capsys, 6, body)


def test_criterion_7_number_theory(capsys):
    def body():
        rng = random.Random(7)
        triples = [(2, 2, 3), (2, 4, 6), (3, 5, 7)]
        triples += [tuple(rng.randint(1, 9) for _ in range(3)) for _ in range(20)]
        t = time.perf_counter()
        for xs in triples:
            inst = nt_bound(xs)
            hi = inst.N + 200 * inst.g
            reach = brute_reachable(xs, hi)
            # oracle threshold: least T with every admissible value >= T reachable
            T = max((v + inst.g for v in range(0, hi + 1, inst.g) if v not in reach), default=0)
            assert T <= inst.N, (xs, T, inst.N)
            assert minimal_threshold(inst) == T
            for k in range(200):
                C = inst.N + k * inst.g
                seq = nt_witness(inst, C)
                assert is_witness(xs, seq, C), (xs, C)
        dt = time.perf_counter() - t
        assert dt < 10, f"{dt:.2f}s"
        return f"{len(triples)} triples x 200 targets"
    report(capsys, 7, body)


def test_criterion_8_property_suites(capsys):
    count = []

    @settings(max_examples=500, database=None)
    @given(realization_and_word(max_len=12), st.data())
    def run(rw, data):
        r, w = rw
        check_pair(r, w, data.draw(words(r.alphabet, 5)))
        count.append(1)

    def body():
        run()
        return f"{len(count)} random pairs, zero failures"
    report(capsys, 8, body)


if __name__ == "__main__":
    class _Plain:
        disabled = staticmethod(contextlib.nullcontext)

    failed = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn(_Plain())
            except Exception:
                failed += 1
                traceback.print_exc(limit=1)
    sys.exit(1 if failed else 0)
