import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from tgrs.gf import GF

settings.register_profile(
    "repo",
    deadline=None,
    derandomize=True,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("repo")

SMALL_FIELDS = [(2, 1), (2, 3), (2, 4), (3, 1), (3, 2), (3, 3), (5, 1), (5, 2), (7, 1), (7, 2), (11, 1), (13, 1)]


@st.composite
def fields(draw, choices=SMALL_FIELDS):
    p, h = draw(st.sampled_from(choices))
    return GF(p, h)


@st.composite
def elements(draw, F, nonzero=False):
    lo = 1 if nonzero else 0
    return F.from_int(draw(st.integers(lo, F.q - 1)))


@st.composite
def field_and_points(draw, min_n=2, max_n=8, choices=SMALL_FIELDS):
    F = draw(fields([c for c in choices if c[0] ** c[1] >= min_n]))
    n = draw(st.integers(min_n, min(max_n, F.q)))
    vals = draw(st.lists(st.integers(0, F.q - 1), min_size=n, max_size=n, unique=True))
    mult = draw(st.lists(st.integers(1, F.q - 1), min_size=n, max_size=n))
    return F, [F.from_int(a) for a in vals], [F.from_int(b) for b in mult]


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import VERDICTS
    except ImportError:
        return
    if not VERDICTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(VERDICTS):
        terminalreporter.write_line(VERDICTS[num])
