import random

import pytest
from hypothesis import given, settings, strategies as st

from projvf import (
    InputError,
    VarContext,
    coefficient_of,
    evaluate,
    homogeneous_degree,
    monomials_of_degree,
    order_key,
    parse_poly,
    partial_derivative,
    substitute,
)
from support import rand_homogeneous, rand_poly

P4 = VarContext(("x0", "x1", "x2", "x3", "x4"))
P4C = VarContext(("x0", "x1", "x2", "x3", "x4"), ("a", "c"))
SMALL = VarContext(("x0", "x1", "x2"))
QUADRIC = parse_poly("x0^2 + x1^2 + x2^2 + x3*x4", P4)


def small_polys(ctx=SMALL):
    return st.builds(
        lambda seed: rand_poly(random.Random(seed), ctx, max_degree=3, max_terms=4),
        st.integers(0, 10**9),
    )


class TestContext:
    def test_requires_two_projective_variables(self):
        with pytest.raises(InputError):
            VarContext(("x0",))

    def test_rejects_duplicate_names(self):
        with pytest.raises(InputError):
            VarContext(("x0", "x1"), ("x0",))

    def test_rejects_bad_names(self):
        with pytest.raises(InputError):
            VarContext(("x0", "2y"))

    def test_unknown_variable(self):
        with pytest.raises(InputError):
            SMALL.index("z9")


class TestArithmetic:
    def test_add_cancels(self):
        x0, x1 = SMALL.variable("x0"), SMALL.variable("x1")
        assert (x0 + x1) + (x0 - x1) == 2 * x0

    def test_add_identity_and_inverse(self):
        p = parse_poly("x0^2 - 3*x1", SMALL)
        assert p + SMALL.zero() == p
        assert QUADRIC + (-QUADRIC) == P4.zero()

    def test_product_of_conjugates(self):
        x0, x1 = SMALL.variable("x0"), SMALL.variable("x1")
        assert (x0 + x1) * (x0 - x1) == x0**2 - x1**2

    def test_single_monomial_product(self):
        assert P4.variable("x3") * P4.variable("x4") == parse_poly("x3*x4", P4)

    def test_mul_identity(self):
        p = parse_poly("x0^2 - x1*x2 + 7", SMALL)
        assert p * SMALL.one() == p

    def test_context_mismatch(self):
        with pytest.raises(InputError):
            SMALL.variable("x0") + P4.variable("x0")

    def test_pow(self):
        x0 = SMALL.variable("x0")
        assert (x0 + 1) ** 3 == x0**3 + 3 * x0**2 + 3 * x0 + 1
        assert (x0 + 1) ** 0 == SMALL.one()


class TestDerivative:
    def test_product_monomial(self):
        assert partial_derivative(parse_poly("x3*x4", P4), "x3") == P4.variable("x4")

    def test_quadric_gradient_component(self):
        assert partial_derivative(QUADRIC, "x4") == P4.variable("x3")

    def test_constant_in_that_variable(self):
        assert partial_derivative(parse_poly("x1^3", P4), "x0") == P4.zero()

    def test_parameter_targets_allowed(self):
        p = parse_poly("c*x0 + a^2", P4C)
        assert partial_derivative(p, "a") == 2 * P4C.variable("a")

    def test_unknown_variable(self):
        with pytest.raises(InputError):
            partial_derivative(QUADRIC, "zz")

    @given(small_polys(), small_polys(), st.sampled_from(SMALL.projective))
    @settings(max_examples=60)
    def test_leibniz_rule(self, p, q, var):
        lhs = partial_derivative(p * q, var)
        rhs = partial_derivative(p, var) * q + p * partial_derivative(q, var)
        assert lhs == rhs

    @given(st.integers(0, 10**9), st.integers(1, 4))
    @settings(max_examples=60)
    def test_euler_identity(self, seed, degree):
        p = rand_homogeneous(random.Random(seed), SMALL, degree)
        total = SMALL.zero()
        for v in SMALL.projective:
            total = total + SMALL.variable(v) * partial_derivative(p, v)
        assert total == degree * p


class TestCoefficientOf:
    def test_plain(self):
        p = parse_poly("x0^2 + 3*x3*x4", P4)
        assert coefficient_of(p, P4.monomial({"x3": 1, "x4": 1})) == 3

    def test_parameter_passthrough(self):
        p = parse_poly("c*x3^2*x4 + x0^3", P4C)
        assert coefficient_of(p, P4C.monomial({"x3": 2, "x4": 1})) == P4C.variable("c")

    def test_absent_monomial(self):
        assert coefficient_of(QUADRIC, P4.monomial({"x3": 2})) == P4.zero()

    def test_rejects_parameter_monomial(self):
        with pytest.raises(InputError):
            coefficient_of(parse_poly("c*x0", P4C), P4C.monomial({"c": 1}))

    @given(st.integers(0, 10**9))
    @settings(max_examples=60)
    def test_reconstruction(self, seed):
        ctx = VarContext(("x0", "x1"), ("a",))
        p = rand_poly(random.Random(seed), ctx, max_degree=3, max_terms=5, projective_only=False)
        total = ctx.zero()
        seen = {m[: ctx.nproj] + (0,) * len(ctx.parameters) for m in p.monomials()}
        for m in seen:
            total = total + coefficient_of(p, m).mul_term(m, 1)
        assert total == p


class TestHomogeneity:
    def test_quadric(self):
        assert homogeneous_degree(QUADRIC) == 2

    def test_inhomogeneous(self):
        assert homogeneous_degree(parse_poly("x0 + x1^2", P4)) is None

    def test_zero_polynomial(self):
        assert homogeneous_degree(P4.zero()) == "any"

    def test_parameters_are_degree_zero(self):
        assert homogeneous_degree(parse_poly("c*x3^2*x4 + x0^3", P4C)) == 3


class TestEvaluate:
    def test_point_on_quadric(self):
        point = {"x0": 0, "x1": 0, "x2": 0, "x3": 0, "x4": 1}
        assert evaluate(QUADRIC, point) == 0

    def test_point_off_quadric(self):
        point = {"x0": 1, "x1": 0, "x2": 0, "x3": 0, "x4": 0}
        assert evaluate(QUADRIC, point) == 1

    def test_missing_assignment(self):
        with pytest.raises(InputError):
            evaluate(QUADRIC, {"x0": 1})

    @given(st.integers(0, 10**9), st.integers(1, 3))
    @settings(max_examples=40)
    def test_positive_degree_vanishes_at_origin(self, seed, degree):
        p = rand_homogeneous(random.Random(seed), SMALL, degree)
        assert evaluate(p, {v: 0 for v in SMALL.names}) == 0


class TestSubstitute:
    def test_partial_evaluation_keeps_parameters(self):
        p = parse_poly("c*x3^2*x4 + a*x0", P4C)
        got = substitute(p, {name: 0 for name in ("x0", "x1", "x2", "x3")} | {"x4": 1})
        assert got == P4C.zero()

    def test_linear_change(self):
        x0, x1 = SMALL.variable("x0"), SMALL.variable("x1")
        p = x0**2
        assert substitute(p, {"x0": x0 + x1}) == x0**2 + 2 * x0 * x1 + x1**2


class TestOrderAndPrinting:
    def test_grevlex_examples(self):
        m_x0sq = P4.monomial({"x0": 2})
        m_x1sq = P4.monomial({"x1": 2})
        m_x3x4 = P4.monomial({"x3": 1, "x4": 1})
        assert order_key(m_x0sq) > order_key(m_x1sq) > order_key(m_x3x4)

    def test_canonical_string(self):
        assert str(QUADRIC) == "x0^2 + x1^2 + x2^2 + x3*x4"
        assert str(parse_poly("x1 - x0", P4)) == "-x0 + x1"
        assert str(P4.zero()) == "0"
        assert str(parse_poly("c*x3^2*x4", P4C)) == "c*x3^2*x4"

    def test_iteration_is_sorted(self):
        p = parse_poly("x3*x4 + x0^2 + x2^2 + x1^2", P4)
        keys = [order_key(m) for m, _ in p.items()]
        assert keys == sorted(keys, reverse=True)

    @given(small_polys())
    @settings(max_examples=100)
    def test_print_parse_round_trip(self, p):
        assert parse_poly(str(p), SMALL) == p

    @given(small_polys(VarContext(("x0", "x1"), ("a", "c"))))
    @settings(max_examples=60)
    def test_round_trip_with_parameters(self, p):
        assert parse_poly(str(p), VarContext(("x0", "x1"), ("a", "c"))) == p


class TestRingAxioms:
    @given(small_polys(), small_polys(), small_polys())
    @settings(max_examples=60)
    def test_associativity_and_distributivity(self, p, q, r):
        assert (p + q) + r == p + (q + r)
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r


def test_monomials_of_degree_count():
    # 15 = number of degree-2 monomials in five variables
    assert len(monomials_of_degree(P4, 2)) == 15
    listed = monomials_of_degree(P4, 2)
    assert len(set(listed)) == 15
    keys = [order_key(m) for m in listed]
    assert keys == sorted(keys, reverse=True)
