import random
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from orbifat.cyclic import CyclicOrder
from orbifat.realization import Realization, standard_z_order
from orbifat.words import GenAlphabet, Letter, c, free_reduce, z

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"

settings.register_profile("default", deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture
def fixtures_dir():
    return FIXTURES


def example22():
    return Realization.from_text(2, (4, 4, 4), "c1 c2 z0 Z1 c0 Z0 z1")


def disk334():
    return Realization.from_text(0, (3, 3, 4), "c0 c1 c2")


def genus_cone3():
    return Realization.from_text(2, (3,), "z0 Z1 c0 Z0 z1")


def torus():
    return Realization.from_text(2, (), "z0 Z1 Z0 z1")


def realization_from_seed(seed: int, max_inf=4, max_fin=4, max_order=6) -> Realization:
    """A random valid realization: standard z order with cone points spliced in."""
    rng = random.Random(seed)
    inf = rng.choice([i for i in (0, 2, 4) if i <= max_inf])
    lo = 3 if inf == 0 else 0
    fin = tuple(rng.randint(2, max_order) for _ in range(rng.randint(lo, max_fin)))
    syms = list(standard_z_order(inf))
    for j in range(len(fin)):
        syms.insert(rng.randint(0, len(syms)), c(j))
    return Realization(GenAlphabet(inf, fin), CyclicOrder(syms))


realizations = st.integers(0, 10**6).map(realization_from_seed)


def letters_of(a: GenAlphabet) -> list[Letter]:
    return a.symbols()


@st.composite
def words(draw, a: GenAlphabet, max_len=12, min_len=0):
    syms = letters_of(a)
    return tuple(draw(st.lists(st.sampled_from(syms), min_size=min_len, max_size=max_len)))


@st.composite
def realization_and_word(draw, max_len=12, balanced=None):
    """A realization and a reduced word; ``balanced`` forces zero z sums on genus."""
    r = draw(realizations)
    a = r.alphabet
    fix_z = (balanced if balanced is not None else not r.is_disk) and a.inf_count
    w = list(draw(words(a, max_len // 2 if fix_z else max_len)))
    if fix_z:
        for i in range(a.inf_count):
            s = sum(1 if x == z(i) else -1 if x == z(i, -1) else 0 for x in w)
            fix = z(i, -1) if s > 0 else z(i)
            for _ in range(abs(s)):
                w.insert(draw(st.integers(0, len(w))), fix)
    return r, free_reduce(w, a)
