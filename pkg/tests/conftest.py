from __future__ import annotations

from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from mpoly.exactnum import make_params

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


def small_rationals(max_num: int = 9, max_den: int = 5, nonzero: bool = False):
    s = st.builds(
        Fraction,
        st.integers(-max_num, max_num),
        st.integers(1, max_den),
    )
    return s.filter(bool) if nonzero else s


@st.composite
def params_strategy(draw, positive_only: bool = False, max_shift: int = 3):
    """Pole-free parameter bundles: ``a >= 1`` keeps every ``a + i + m`` positive."""
    a = draw(st.integers(1, 4))
    q = draw(small_rationals(nonzero=True))
    L = draw(st.lists(small_rationals(max_num=4, max_den=3, nonzero=True), min_size=1, max_size=2))
    orders = [1, 2, 3] if positive_only else [1, 2, 3, -1, -2]
    k = draw(st.sampled_from(orders))
    m = draw(st.integers(0, max_shift))
    return make_params(a, q, L, k, m)


# the five-point sample
SAMPLE = [
    (1, 1, ["1"]),
    (2, 1, ["1"]),
    (1, "1/2", ["2"]),
    (3, 2, ["1/2", "3"]),
    (-3, 1, ["1"]),
]


# --- acceptance verdict lines ------------------------------------------------

import pytest  # noqa: E402


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(module.RESULTS):
        terminalreporter.write_line(module.RESULTS[number])
