import numpy as np
import pytest
from hypothesis import strategies as st

from symdiv import Distribution

# exact zeros exercise the conventions; subnormal masses only exercise overflow
_weight = st.one_of(st.just(0.0), st.floats(1e-6, 1.0))
_positive_weight = st.floats(1e-3, 1.0)


def _normalize(weights):
    w = np.asarray(weights, dtype=float)
    return Distribution(w / w.sum())


@st.composite
def distributions(draw, min_size=1, max_size=6, allow_zeros=True):
    n = draw(st.integers(min_size, max_size))
    w = draw(st.lists(_weight if allow_zeros else _positive_weight, min_size=n, max_size=n))
    if sum(w) == 0.0:
        w[0] = 1.0
    return _normalize(w)


@st.composite
def distribution_pairs(draw, min_size=2, max_size=6, allow_zeros=True):
    n = draw(st.integers(min_size, max_size))
    out = []
    for _ in range(2):
        w = draw(st.lists(_weight if allow_zeros else _positive_weight, min_size=n, max_size=n))
        if sum(w) == 0.0:
            w[0] = 1.0
        out.append(_normalize(w))
    return tuple(out)


@pytest.fixture
def rng():
    return np.random.default_rng(20140114)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
