"""The immersion certificate for complete fatgraphs.

A fatgraph passes when every polygon is small (no repeated edge label),
every polygon's cyclic label order agrees with the realization's cyclic
order, and every boundary component is hyperbolic.  Passing is sufficient
for an immersion with geodesic boundary; failing proves nothing.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .cyclic import incompatibility_witness
from .fatgraph import Fatgraph, FatgraphError, boundary, validate
from .realization import Realization
from .words import ElementClass, Letter, classify


class IncompleteFatgraph(FatgraphError):
    pass


@dataclass(frozen=True)
class PolygonVerdict:
    index: int
    repeated: Letter | None = None
    witness: tuple | None = None

    @property
    def ok(self) -> bool:
        return self.repeated is None and self.witness is None

    def line(self) -> str:
        if self.repeated is not None:
            tag = f"notsmall:{self.repeated}"
        elif self.witness is not None:
            tag = "incompat:" + ",".join(map(str, self.witness))
        else:
            tag = "pass"
        return f"polygon {self.index} {tag}"


@dataclass(frozen=True)
class CertificateReport:
    polygons: tuple[PolygonVerdict, ...]
    boundary_classes: tuple[ElementClass, ...]

    @property
    def passed(self) -> bool:
        return (all(v.ok for v in self.polygons)
                and all(c is ElementClass.HYPERBOLIC for c in self.boundary_classes))

    @property
    def failures(self) -> list[str]:
        out = [v.line() for v in self.polygons if not v.ok]
        out += [f"boundary {k} {c.value}" for k, c in enumerate(self.boundary_classes)
                if c is not ElementClass.HYPERBOLIC]
        return out

    def lines(self) -> list[str]:
        out = [v.line() for v in self.polygons]
        out += [f"boundary {k} {c.value}" for k, c in enumerate(self.boundary_classes)]
        out.append("certificate: " + ("PASS" if self.passed else "FAIL"))
        return out

    def format(self) -> str:
        return "\n".join(self.lines()) + "\n"


def polygon_verdict(index: int, labels, r: Realization) -> PolygonVerdict:
    counts = Counter(labels)
    rep = next((x for x in labels if counts[x] > 1), None)
    if rep is not None:
        return PolygonVerdict(index, repeated=rep)
    return PolygonVerdict(index, witness=incompatibility_witness(labels, r.order))


def check_certificate(f: Fatgraph, r: Realization) -> CertificateReport:
    """Check the certificate; the fatgraph must be valid and complete."""
    problems = validate(f, r.alphabet)
    if problems:
        raise FatgraphError("invalid fatgraph: " + "; ".join(problems[:5]))
    if not f.is_complete():
        raise IncompleteFatgraph("the certificate applies to complete fatgraphs only")
    verdicts = tuple(polygon_verdict(p, pc.labels, r) for p, pc in f.polygons())
    classes = tuple(classify(wd, r) for wd in boundary(f).words())
    return CertificateReport(verdicts, classes)
