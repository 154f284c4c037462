"""Certified surfaces over genus-one orbifolds, with and without a cone point.

Even offsets give degree lcm(o_j); odd offsets need two sheets and double it.

    python demos/genus_surface.py
"""

from orbifat.certificate import check_certificate
from orbifat.fatgraph import boundary, covers, surface_summary
from orbifat.realization import Realization
from orbifat.stability import attach_A_modules, build_genus_surface, build_Yprime_genus
from orbifat.words import format_word, parse_word

CASES = [
    (Realization.from_text(2, (3,), "z0 Z1 c0 Z0 z1"), "z0 c0 Z0 c0"),
    (Realization.from_text(2, (), "z0 Z1 Z0 z1"), "z0 z0 z1 Z0 Z0 Z1"),
]


def main() -> None:
    r, text = CASES[0]
    w = parse_word(text, r.alphabet)
    y = attach_A_modules(build_Yprime_genus(r, w, pad_b2=False), r)
    print(f"unpadded intermediate reads w b^{y.exponent}")
    for r, text in CASES:
        w = parse_word(text, r.alphabet)
        print(f"\nb = {format_word(r.boundary.letters)}, w = {text}")
        for n in range(4):
            s = build_genus_surface(r, w, n)
            f = s.fatgraph
            g = surface_summary(f)
            ok = check_certificate(f, r).passed
            print(f"n={n}: w b^{s.exponent}  degree {covers(boundary(f), s.target)}  "
                  f"genus {g.genus}  boundary {g.boundary_components}  "
                  f"certificate {'PASS' if ok else 'FAIL'}")


if __name__ == "__main__":
    main()
