import pytest

from subreg.errors import SuiteMismatch
from subreg.systems import chain_44, cycle, dihedral, thmD_triangle, thmE, triangle_334, triangle_456
from subreg.verify import Case, suite_assoc, suite_basedring, suite_thmA, suite_thmB, suite_thmC, suite_thmD, suite_thmE, tap_report


def test_case_reporting():
    c = Case("demo")
    c.record(True)
    c.record(False, lambda: "x=1")
    c.record(False, "never shown")
    assert not c.passed
    assert c.line(3) == "not ok 3 - demo (3 checked, 2 failed; first: x=1)"
    assert tap_report([Case("a")])[0] == "1..1"


def test_small_suites_pass():
    for cases in (
        suite_assoc(triangle_456(), max_len=5, samples=200),
        suite_basedring(chain_44(), max_len=5, samples=200),
        suite_thmA(cycle(3), max_len=4),
        suite_thmB(triangle_334(), max_len=4),
        suite_thmC(dihedral(6)),
        suite_thmD(thmD_triangle(), max_sum=4, max_len=8),
        suite_thmE(thmE(2), max_len=2),
    ):
        assert all(c.passed for c in cases), tap_report(cases)


def test_seed_determinism():
    a = tap_report(suite_assoc(triangle_456(), samples=50, seed=3))
    b = tap_report(suite_assoc(triangle_456(), samples=50, seed=3))
    assert a == b


@pytest.mark.parametrize("suite, d", [
    (suite_thmA, triangle_456()),
    (suite_thmB, chain_44()),
    (suite_thmC, thmD_triangle()),
    (suite_thmD, triangle_334()),
    (suite_thmE, triangle_334()),
])
def test_mismatch(suite, d):
    with pytest.raises(SuiteMismatch):
        suite(d)
