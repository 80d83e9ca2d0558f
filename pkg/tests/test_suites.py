import pytest

from dunkl_monogenics.suites import SUITES, run_suite, suite_names

from .conftest import make_setting


@pytest.mark.parametrize("name", list(SUITES))
def test_each_suite_passes_in_two_dimensions(name, z2_2):
    reports = run_suite(name, z2_2, 3)
    assert reports
    assert all(r.ok for r in reports), "\n".join(r.line() for r in reports if not r.ok)


@pytest.mark.parametrize("eps", [-1, 1])
def test_all_in_one_dimension(eps):
    s = make_setting("z2^1", ["1/2"], eps)
    reports = run_suite("all", s, 4)
    assert all(r.ok for r in reports)


def test_abelian_constants_skipped_for_non_abelian_groups(b2):
    (r,) = run_suite("section5-constants", b2, 2)
    assert r.ok and r.checked == 0 and "skipped" in r.note


def test_unknown_suite(z2_2):
    with pytest.raises(KeyError):
        run_suite("nope", z2_2, 1)
    assert suite_names()[-1] == "all"


def test_classical_limit():
    s = make_setting("z2^3", ["0", "0", "0"])
    for name in ("osp12", "dirac-symmetries", "bases"):
        assert all(r.ok for r in run_suite(name, s, 3))
