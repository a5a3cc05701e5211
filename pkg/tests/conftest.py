import pytest

from projvf import Derivation, Ideal, VarContext, parse_poly


@pytest.fixture(scope="session")
def p4():
    return VarContext(("x0", "x1", "x2", "x3", "x4"))


@pytest.fixture(scope="session")
def p4c():
    return VarContext(("x0", "x1", "x2", "x3", "x4"), ("a", "c"))


@pytest.fixture(scope="session")
def p3():
    return VarContext(("x0", "x1", "x2", "x3"))


@pytest.fixture(scope="session")
def quadric(p4):
    return parse_poly("x0^2 + x1^2 + x2^2 + x3*x4", p4)


@pytest.fixture(scope="session")
def quadric_field(p4):
    return Derivation.diagonal(p4, (0, 0, 0, 1, -1))


@pytest.fixture(scope="session")
def quadric_curve(p4):
    return Ideal.spanned_by(
        p4, (parse_poly("x0^2 + x1^2 + x2^2", p4), parse_poly("x3", p4), parse_poly("x4", p4))
    )
