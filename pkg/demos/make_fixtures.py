"""Regenerate the shipped fixtures.

The two figure fatgraphs are found by deterministic search: the spine
fixture by trying gluings of the seven listed polygons, the boundary
fixture by pinching three fixed loops until the polygon census
comes out as seven bigons and two triangles.

    python demos/make_fixtures.py [outdir]
"""

import itertools
import sys
from pathlib import Path

from orbifat.certificate import check_certificate
from orbifat.fatgraph import (
    FatgraphBuilder,
    boundary,
    census,
    connected_components,
    format_fatgraph,
    group_polygon,
    pinch,
    polygon,
    rectangle,
)
from orbifat.realization import Realization, format_orbifold
from orbifat.words import Letter, parse_word

EXAMPLE = Realization.from_text(2, (4, 4, 4), "c1 c2 z0 Z1 c0 Z0 z1")
DISK = Realization.from_text(0, (3, 3, 4), "c0 c1 c2")
GENUS = Realization.from_text(2, (3,), "z0 Z1 c0 Z0 z1")

SPINE_POLYGONS = ["c1 z0 c0 Z0", "c1 z0 Z0", "c0 z0 Z1", "c1 Z0", "c1 z1", "c0 Z1", "c0 z1"]
LOOPS = ["z0 c0 Z1 c0 Z0 c1 z0 c1 Z1 c0 Z0 Z1 c1 Z0 c1 z1", "z0 z1", "z1 c0"]


def spine_fatgraph():
    r = EXAMPLE
    a = r.alphabet
    polys = [parse_word(t, a) for t in SPINE_POLYGONS]
    # polygon edges by label, in address order
    sites: dict = {}
    for p, labels in enumerate(polys):
        for s, x in enumerate(labels):
            sites.setdefault(x, []).append((p, s))
    nz = [len(sites[Letter(0, i)]) for i in range(a.inf_count)]
    choices = []
    for i in range(a.inf_count):
        perms = list(itertools.permutations(range(nz[i])))
        choices.append(perms)
        choices.append(perms)
    for j in (0, 1):
        # fix the first side of each group polygon to kill rotations
        choices.append([(0,) + q for q in itertools.permutations(range(1, 4))])
    for pick in itertools.product(*choices):
        fb = FatgraphBuilder(a, r.order)
        for labels in polys:
            fb.add(polygon(labels))
        k = 0
        for i in range(a.inf_count):
            rects = [fb.add(rectangle(i)) for _ in range(nz[i])]
            plus, minus = pick[k], pick[k + 1]
            k += 2
            for t, site in zip(plus, sites[Letter(0, i)]):
                fb.glue(site, (rects[t], 3))
            for t, site in zip(minus, sites[Letter(0, i, True)]):
                fb.glue(site, (rects[t], 1))
        for j in (0, 1):
            g = fb.add(group_polygon(j, 4))
            for t, site in zip(pick[k], sites[Letter(1, j)]):
                fb.glue(site, (g, 2 * t + 1))
            k += 1
        f = fb.build()
        if len(connected_components(f)) == 1 and check_certificate(f, r).passed:
            return f
    raise RuntimeError("no gluing of the spine polygons passes the certificate")


def loops_fatgraph(tries: int = 100000):
    r = EXAMPLE
    words = [parse_word(t, r.alphabet) for t in LOOPS]
    for seed in range(tries):
        f = pinch(words, r.alphabet, seed=seed)
        if census(f).polygons == {2: 7, 3: 2}:
            return FatgraphBuilder.from_fatgraph(f).build(), seed
    raise RuntimeError("no pinching gives seven bigons and two triangles")


def main(out: Path) -> None:
    out.mkdir(parents=True, exist_ok=True)
    for name, r in [("example22", EXAMPLE), ("disk334", DISK), ("genus1_cone3", GENUS)]:
        (out / f"{name}.orb").write_text(format_orbifold(r))
    f = spine_fatgraph()
    (out / "fig_spine.fg").write_text(format_fatgraph(f))
    g, seed = loops_fatgraph()
    g = FatgraphBuilder.from_fatgraph(g)
    g.order = EXAMPLE.order
    (out / "fig_cyclic_fatgraph.fg").write_text(format_fatgraph(g.build()))
    print(f"spine: {len(boundary(f))} boundary components")
    print(f"loops: pinch seed {seed}")


if __name__ == "__main__":
    main(Path(sys.argv[1] if len(sys.argv) > 1 else "fixtures"))
