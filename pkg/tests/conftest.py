from fractions import Fraction

import pytest
from gmpy2 import mpq
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from dunkl_monogenics.dunkl import DunklSetting
from dunkl_monogenics.poly import Poly, monomials
from dunkl_monogenics.roots import build_group

settings.register_profile(
    "default", max_examples=25, deadline=None,
    suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def make_setting(group, kappa, eps=-1):
    return DunklSetting(build_group(group, [mpq(Fraction(k)) for k in kappa]), eps)


@pytest.fixture(params=[-1, 1], ids=["eps-", "eps+"])
def eps(request):
    return request.param


@pytest.fixture
def z2_2(eps):
    return make_setting("z2^2", ["1/2", "1/3"], eps)


@pytest.fixture
def z2_3(eps):
    return make_setting("z2^3", ["1/2", "1/3", "1/4"], eps)


@pytest.fixture
def b2(eps):
    return make_setting("b2", ["1/2", "1/3"], eps)


rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6).map(
    lambda f: mpq(f.numerator, f.denominator))


@st.composite
def polys(draw, nvars, max_degree=3, homogeneous=None):
    degs = [homogeneous] if homogeneous is not None else range(max_degree + 1)
    pool = [e for n in degs for e in monomials(nvars, n)]
    chosen = draw(st.lists(st.sampled_from(pool), min_size=1, max_size=4, unique=True))
    return Poly(nvars, {e: draw(rationals) for e in chosen})


# -- acceptance summary ----------------------------------------------------------------

_CRITERIA = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, text): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is not None and rep.when == "call":
        _CRITERIA.append((mark.args[0], mark.args[1], rep.passed))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n, text, ok in sorted(_CRITERIA):
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {text}")
