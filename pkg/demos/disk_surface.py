"""Build certified surfaces over the (3,3,4) disk orbifold.

    python demos/disk_surface.py [n_max]
"""

import sys
import time

from orbifat.certificate import check_certificate
from orbifat.fatgraph import boundary, census, covers
from orbifat.realization import Realization
from orbifat.stability import build_disk_surface
from orbifat.words import format_word, parse_word


def main(n_max: int = 3) -> None:
    r = Realization.from_text(0, (3, 3, 4), "c0 c1 c2")
    w = parse_word("c0 c1^2 c2 c1", r.alphabet)
    print(f"b = {format_word(r.boundary.letters)}")
    print(f"w = {format_word(w)}")
    for n in range(n_max + 1):
        t = time.perf_counter()
        s = build_disk_surface(r, w, n)
        f = s.fatgraph
        rep = check_certificate(f, r)
        deg = covers(boundary(f), s.target)
        cen = census(f)
        print(f"n={n}: w b^{s.exponent}  degree {deg}  pieces {len(f.pieces)}  "
              f"polygons {dict(sorted(cen.polygons.items()))}  "
              f"certificate {'PASS' if rep.passed else 'FAIL'}  "
              f"{time.perf_counter() - t:.2f}s")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 3)
