import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))

from crtour import enumerate_tournaments

settings.register_profile(
    "crtour",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("crtour")


@pytest.fixture(scope="session")
def classes():
    """Isomorphism-class representatives by order, up to 6."""
    return {
        n: tuple(enumerate_tournaments(n, classes=True)) for n in range(1, 7)
    }


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    # first kernel calls trigger jit compilation; keep that out of any
    # timed assertion
    from crtour import gen_ln, max_subtournament_det, canonical_encoding
    from crtour.kernels import first_minor_above, perm_aut_count

    t = gen_ln(4)
    max_subtournament_det(t)
    first_minor_above(t.skew, 1)
    canonical_encoding(t)
    perm_aut_count(t.skew)
