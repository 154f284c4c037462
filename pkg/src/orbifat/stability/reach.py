"""Which exponents of b the builders can reach for a given word."""

from __future__ import annotations

from ..realization import Realization
from .disk import disk_plan
from .genus import genus_base
from .numbertheory import reachable_sums


def achievable_exponents(r: Realization, w, up_to: int) -> set[int]:
    """Exponents ``m <= up_to`` with a certified surface bounding ``w b^m``.

    Disk: the Y' exponent plus every padding sum with distinct neighbours.
    Genus: every integer from the base exponent on.
    """
    if r.is_disk:
        p, inst = disk_plan(r, w)
        m0 = p.total_exponent
        if up_to < m0:
            return set()
        ok = reachable_sums(inst.xs, up_to - m0)
        return {m0 + v for v, hit in enumerate(ok) if hit}
    m0 = genus_base(r, w).total_exponent
    return set(range(m0, up_to + 1))
