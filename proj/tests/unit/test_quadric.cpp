#include <doctest.h>

#include <algorithm>

#include "lpgeom/error.hpp"
#include "lpgeom/parser.hpp"
#include "lpgeom/quadric.hpp"
#include "lpgeom/random.hpp"

using namespace lpg;
using namespace lpg::quadric;

namespace {

ChartPtr xchart(unsigned n) {
    std::vector<std::string> v;
    for (unsigned i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
    return make_chart("x", v);
}

std::vector<Expression> coordinates(const ChartPtr& c) {
    std::vector<Expression> x;
    for (std::size_t i = 0; i < c->dimension(); ++i) x.push_back(Expression::symbol(c, i));
    return x;
}

QuadricFamily family_of(const ChartPtr& c, const char* a0, std::vector<const char*> a, std::vector<const char*> A) {
    const std::size_t n = a.size();
    std::vector<Expression> av;
    for (auto s : a) av.push_back(parse_expression(s, c));
    ExprMatrix Am(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) Am(i, j) = parse_expression(A[i * n + j], c);
    return QuadricFamily{c, QuadricCoefficients(parse_expression(a0, c), av, Am)};
}

} // namespace

TEST_CASE("osculating quadric examples") {
    auto c = xchart(2);
    std::vector<Rational> x0{1, 1};
    auto q = osculating_quadric(parse_expression("x1*x1*x2", c), x0);
    CHECK(q.A()(0, 0) == Expression(2));
    CHECK(q.A()(0, 1) == Expression(2));
    CHECK(q.A()(1, 1).is_zero());
    CHECK(q.a()[0] == Expression(-2));
    CHECK(q.a()[1] == Expression(-1));
    CHECK(q.a0() == Expression(1));

    auto s = osculating_quadric(parse_expression("1/2*(x1*x1 + x2*x2)", c), std::vector<Rational>{3, Rational(-1, 2)});
    CHECK(s.a0().is_zero());
    CHECK(s.a()[0].is_zero());
    CHECK(s.a()[1].is_zero());
    CHECK(s.A() == identity_matrix(2));

    // p_ij = a_ij and p_i = a_i + Σ a_ij x^j at x0.
    std::vector<Expression> xe{Expression(1), Expression(1)};
    auto p = q.p_at(xe);
    CHECK(p[0] == Expression(2));
    CHECK(p[1] == Expression(1));
    CHECK(q.u_at(xe) == Expression(1));
}

TEST_CASE("osculating family examples") {
    auto c = xchart(2);
    auto fam = osculating_family(parse_expression("x1*x1*x2", c));
    CHECK(fam.coefficients.A()(0, 0) == parse_expression("2*x2", c));
    CHECK(fam.coefficients.A()(0, 1) == parse_expression("2*x1", c));
    CHECK(fam.coefficients.A()(1, 1).is_zero());
    auto flat = osculating_family(parse_expression("1/2*(x1*x1 + x2*x2)", c));
    CHECK(flat.coefficients.a0().is_zero());
    CHECK(flat.coefficients.A() == identity_matrix(2, c));
}

TEST_CASE("symmetry is enforced") {
    ExprMatrix A(2, 2, Expression(0));
    A(0, 1) = Expression(1);
    CHECK_THROWS_AS(QuadricCoefficients(Expression(0), {Expression(0), Expression(0)}, A), Error);
}

TEST_CASE("null vector examples") {
    auto c = xchart(2);
    auto fam = osculating_family(parse_expression("x1*x1*x2 + x2*x2*x2", c));
    CHECK(null_vector_check(fam, coordinates(c)).pass);

    auto constant = family_of(c, "3", {"1", "2"}, {"1", "0", "0", "1"});
    CHECK(null_vector_check(constant, std::vector<Expression>{parse_expression("x1*x2", c), Expression(7)}).pass);

    auto t = make_chart("t", {"t1", "t2"});
    auto bad = family_of(t, "t1", {"0", "0"}, {"1", "0", "0", "1"});
    auto r = null_vector_check(bad, std::vector<Expression>{parse_expression("t1*t2", t), parse_expression("t2", t)});
    CHECK_FALSE(r.pass);
    CHECK(r.residuals[0] == parse_form("2*d(t1)", t));
    CHECK(r.residuals[1].is_zero());
}

TEST_CASE("symmetric differential examples") {
    auto t = make_chart("t", {"t"});
    auto fam = family_of(t, "t", {"0", "0"}, {"t", "0", "0", "t"});
    auto s = symmetric_differential(fam);
    CHECK(s.to_string() == "2*d(t)^3");
    CHECK(s.degree() == 3);

    auto rank_def = family_of(t, "t", {"0", "0"}, {"1", "0", "0", "1"});
    CHECK(symmetric_differential(rank_def).is_zero());

    auto c = xchart(2);
    CHECK(symmetric_differential(osculating_family(parse_expression("x1*x1*x2", c))).is_zero());
}

TEST_CASE("symmetric differential matches a brute-force permutation expansion") {
    // Oracle: Leibniz formula over all permutations.
    auto t = make_chart("t", {"s", "t"});
    auto fam = family_of(t, "s*t", {"s", "t*t"}, {"s", "t", "t", "s*s"});
    auto m = differential_matrix(fam);
    const std::size_t N = m.rows();
    std::vector<std::size_t> perm(N);
    for (std::size_t i = 0; i < N; ++i) perm[i] = i;
    SymmetricDifferential total(t);
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = i + 1; j < N; ++j)
                if (perm[i] > perm[j]) ++inversions;
        SymmetricDifferential term(t);
        term.add_term(Monomial(), Expression(inversions % 2 ? -1 : 1));
        for (std::size_t i = 0; i < N; ++i) term = term * SymmetricDifferential::from_one_form(m(i, perm[i]));
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(symmetric_differential(fam) == total);
    CHECK_FALSE(total.is_zero());
}

TEST_CASE("developable examples") {
    auto c = xchart(2);
    auto f = parse_expression("x1*x1*x2 - 3*x2*x2 + x1", c);
    auto dev = developable_from_family(osculating_family(f), coordinates(c));
    CHECK(dev.u == f);
    CHECK(dev.p[0] == f.derivative("x1"));
    CHECK(dev.p[1] == f.derivative("x2"));

    auto constant = family_of(c, "0", {"0", "0"}, {"1", "0", "0", "1"});
    auto half = developable_from_family(constant, coordinates(c));
    CHECK(half.u == parse_expression("1/2*x1*x1 + 1/2*x2*x2", c));

    std::vector<Expression> singular{parse_expression("x1", c), parse_expression("2*x1", c)};
    CHECK_THROWS_AS(developable_from_family(constant, singular), Error);
    auto t = make_chart("t", {"t1", "t2"});
    auto bad = family_of(t, "t1", {"0", "0"}, {"1", "0", "0", "1"});
    CHECK_THROWS_AS(developable_from_family(bad, coordinates(t)), Error);
}

TEST_CASE("property: round trip, null vector, vanishing differential, 2-jet match") {
    Rng rng(404);
    for (unsigned n = 1; n <= 3; ++n) {
        auto c = xchart(n);
        for (int trial = 0; trial < 4; ++trial) {
            auto f = random_polynomial(rng, c, n, 4, 5);
            auto fam = osculating_family(f);
            auto x = coordinates(c);
            CHECK(null_vector_check(fam, x).pass);
            CHECK(symmetric_differential(fam).is_zero());
            auto dev = developable_from_family(fam, x);
            CHECK(dev.u == f);
            for (unsigned i = 0; i < n; ++i) CHECK(dev.p[i] == f.derivative(i));

            std::vector<Rational> x0;
            for (unsigned i = 0; i < n; ++i) x0.push_back(rng.rational(4, 3));
            auto q = osculating_quadric(f, x0);
            // The quadric as a function of x must share f's value, gradient, Hessian at x0.
            auto g = q.u_at(x);
            std::vector<Expression> at;
            for (auto& v : x0) at.emplace_back(v);
            auto ev = [&](const Expression& e) { return e.substitute(at, nullptr); };
            CHECK(ev(g) == ev(f));
            for (unsigned i = 0; i < n; ++i) {
                CHECK(ev(g.derivative(i)) == ev(f.derivative(i)));
                for (unsigned k = 0; k < n; ++k) CHECK(ev(g.derivative(i).derivative(k)) == ev(f.derivative(i).derivative(k)));
            }
        }
    }
}
