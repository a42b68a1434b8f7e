import sys
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

from affhecke import BernAlgebra, IMAlgebra, build_root_datum

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")

DATA = [(t, lat) for t in ("A1", "A2", "B2") for lat in ("sc", "ad")]


@pytest.fixture(scope="session")
def algebras():
    """Memoized ``(rd, im, bern)`` per ``(type, lattice)``."""
    cache = {}

    def get(t, lat="sc", budget=40):
        key = (t, lat, budget)
        if key not in cache:
            rd = build_root_datum(t, lat)
            im = IMAlgebra(rd, budget=budget)
            cache[key] = (rd, im, BernAlgebra(rd, im=im))
        return cache[key]

    return get
