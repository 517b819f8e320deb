#include <doctest.h>

#include "lpgeom/error.hpp"
#include "lpgeom/flat_model.hpp"
#include "lpgeom/parser.hpp"
#include "lpgeom/random.hpp"

using namespace lpg;
using namespace lpg::flat;

namespace {

Vector constant_vector(std::initializer_list<long> v) {
    Vector out;
    for (long x : v) out.emplace_back(x);
    return out;
}

quadric::QuadricCoefficients numeric_quadric(Rng& rng, unsigned n, bool symmetric, ExprMatrix* raw = nullptr) {
    std::vector<Expression> a;
    for (unsigned i = 0; i < n; ++i) a.emplace_back(rng.rational(5, 3));
    ExprMatrix A(n, n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i; j < n; ++j) A(i, j) = A(j, i) = Expression(rng.rational(5, 3));
    if (!symmetric) {
        // Break symmetry in a random off-diagonal entry.
        unsigned i = static_cast<unsigned>(rng.below(n - 1));
        A(i, i + 1) = A(i, i + 1) + Expression(rng.range(1, 4));
        if (raw) *raw = A;
        return quadric::QuadricCoefficients(Expression(0), a, ExprMatrix(n, n, Expression(0)));
    }
    return quadric::QuadricCoefficients(Expression(rng.rational(5, 3)), a, A);
}

} // namespace

TEST_CASE("contact form at a line") {
    SymplecticSpace s(1);
    const auto& c = s.chart();
    std::vector<Rational> ex0{1, 0, 0, 0}, ey0{0, 0, 1, 0}, two{2, 0, 0, 0}, zero{0, 0, 0, 0};
    CHECK(contact_form_at_line(ex0, s) == parse_form("d(y0)", c));
    CHECK(contact_form_at_line(ey0, s) == parse_form("-d(x0)", c));
    CHECK(contact_form_at_line(two, s) == parse_form("2*d(y0)", c));
    CHECK_THROWS_AS(contact_form_at_line(zero, s), Error);
}

TEST_CASE("varpi is nondegenerate") {
    for (unsigned n = 1; n <= 3; ++n) {
        SymplecticSpace s(n);
        CHECK_FALSE(wedge_power(s.varpi(), n + 1).is_zero());
    }
}

TEST_CASE("lagrangian examples") {
    SymplecticSpace s2(2);
    LinearSubspace E(s2, {constant_vector({1, 0, 0, 0, 0, 0}), constant_vector({0, 1, 0, 0, 0, 0}),
                          constant_vector({0, 0, 1, 0, 0, 0})});
    CHECK(is_lagrangian(E));

    SymplecticSpace s1(1);
    LinearSubspace xy(s1, {constant_vector({1, 0, 0, 0}), constant_vector({0, 0, 1, 0})});
    CHECK_FALSE(is_lagrangian(xy));

    LinearSubspace line(s2, {constant_vector({1, 0, 0, 0, 0, 0})});
    CHECK_THROWS_AS(is_lagrangian(line), Error);
    CHECK_THROWS_AS(LinearSubspace(s1, {constant_vector({1, 0, 0, 0}), constant_vector({2, 0, 0, 0})}), Error);
}

TEST_CASE("quadric to lagrangian examples") {
    SymplecticSpace s(2);
    ExprMatrix zero(2, 2, Expression(0));
    quadric::QuadricCoefficients q0(Expression(0), {Expression(0), Expression(0)}, zero);
    LinearSubspace E(s, {constant_vector({1, 0, 0, 0, 0, 0}), constant_vector({0, 1, 0, 0, 0, 0}),
                         constant_vector({0, 0, 1, 0, 0, 0})});
    CHECK(quadric_to_lagrangian(q0, s) == E);

    quadric::QuadricCoefficients qi(Expression(0), {Expression(0), Expression(0)}, identity_matrix(2));
    LinearSubspace expect(s, {constant_vector({1, 0, 0, 0, 0, 0}), constant_vector({0, 1, 0, 0, 1, 0}),
                              constant_vector({0, 0, 1, 0, 0, 1})});
    auto plane = quadric_to_lagrangian(qi, s);
    CHECK(plane == expect);
    CHECK(is_lagrangian(plane));

    auto c = make_chart("x", {"x1", "x2"});
    auto osc = quadric::osculating_quadric(parse_expression("x1*x1*x2", c), std::vector<Rational>{1, 1});
    CHECK(is_lagrangian(quadric_to_lagrangian(osc, s)));
}

TEST_CASE("graph planes are lagrangian iff A is symmetric") {
    Rng rng(3);
    SymplecticSpace s(3);
    for (int trial = 0; trial < 10; ++trial) {
        auto q = numeric_quadric(rng, 3, true);
        CHECK(is_lagrangian(quadric_to_lagrangian(q, s)));
        ExprMatrix raw;
        auto base = numeric_quadric(rng, 3, false, &raw);
        CHECK_FALSE(is_lagrangian(graph_plane(s, base.a0(), base.a(), raw)));
    }
}

TEST_CASE("quadric_to_lagrangian is injective on coefficients") {
    Rng rng(8);
    SymplecticSpace s(2);
    for (int trial = 0; trial < 10; ++trial) {
        auto q1 = numeric_quadric(rng, 2, true);
        auto q2 = numeric_quadric(rng, 2, true);
        CHECK((q1 == q2) == (quadric_to_lagrangian(q1, s) == quadric_to_lagrangian(q2, s)));
        CHECK(quadric_to_lagrangian(q1, s) == quadric_to_lagrangian(q1, s));
    }
}

TEST_CASE("chart identity") {
    for (unsigned n = 1; n <= 3; ++n) {
        auto r = verify_chart_identity(n);
        CHECK(r.pass);
        CHECK(r.residual.is_zero());
        CHECK(r.contact_nondegenerate);
    }
}

TEST_CASE("incidence examples") {
    quadric::QuadricCoefficients qi(Expression(0), {Expression(0), Expression(0)}, identity_matrix(2));
    auto r0 = quadric_plane_incidence(qi, std::vector<Expression>{Expression(0), Expression(0)});
    CHECK(r0.pass);
    CHECK(r0.point == constant_vector({1, 0, 0, 0, 0, 0}));
    CHECK(quadric_plane_incidence(qi, std::vector<Expression>{Expression(1), Expression(0)}).pass);

    // Generic symbolic coefficients and point.
    auto c = make_chart("g", {}, {"a0", "a1", "a2", "a11", "a12", "a22", "s1", "s2"});
    auto e = [&](const char* s) { return parse_expression(s, c); };
    ExprMatrix A(2, 2);
    A(0, 0) = e("a11");
    A(0, 1) = A(1, 0) = e("a12");
    A(1, 1) = e("a22");
    quadric::QuadricCoefficients q(e("a0"), {e("a1"), e("a2")}, A);
    auto r = quadric_plane_incidence(q, std::vector<Expression>{e("s1"), e("s2")});
    CHECK(r.pass);
    SymplecticSpace s(2);
    CHECK(quadric_to_lagrangian(q, s).contains(r.point));
    CHECK(is_lagrangian(quadric_to_lagrangian(q, s)));
}
