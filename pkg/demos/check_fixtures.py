"""Run the certificate and boundary reader on the shipped figure fixtures.

    python demos/check_fixtures.py
"""

from pathlib import Path

from orbifat.certificate import check_certificate
from orbifat.fatgraph import boundary, census, parse_fatgraph
from orbifat.realization import Realization

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def main() -> None:
    r = Realization.from_text(2, (4, 4, 4), "c1 c2 z0 Z1 c0 Z0 z1")
    spine = parse_fatgraph((FIXTURES / "fig_spine.fg").read_text())
    print("fig_spine.fg")
    for line in check_certificate(spine, r).lines():
        print(f"  {line}")
    loops = parse_fatgraph((FIXTURES / "fig_cyclic_fatgraph.fg").read_text())
    print("fig_cyclic_fatgraph.fg")
    for line in boundary(loops).format():
        print(f"  {line}")
    for line in census(loops).format():
        print(f"  {line}")


if __name__ == "__main__":
    main()
