import pytest

from hodgelocus import FieldSpec, JacobianRing, parse_poly, variables
from hodgelocus.cycles import ci_class_rep, make_ci_hypersurface

P31 = 2**31 - 1
P30 = 1073741827  # smallest prime above 2^30


@pytest.fixture(scope="session")
def gf():
    return FieldSpec.prime()


@pytest.fixture(scope="session")
def qq():
    return FieldSpec.rational()


@pytest.fixture(scope="session")
def fermat_quintic_ring(gf):
    return JacobianRing(parse_poly("x0^5 + x1^5 + x2^5 + x3^5", field=gf))


@pytest.fixture(scope="session")
def line_quintic(gf):
    """A seeded smooth quintic x0*Q0 + x1*Q1 and its line class."""
    x = variables(1, gf)
    ci = make_ci_hypersurface([x[0], x[1]], d=5, seed=11)
    return ci, ci_class_rep(ci)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("tests.test_acceptance")
    lines = mod.summary_lines() if mod else []
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
