#include <doctest.h>

#include <algorithm>

#include "lpgeom/error.hpp"
#include "lpgeom/form.hpp"
#include "lpgeom/matrix.hpp"
#include "lpgeom/parser.hpp"
#include "lpgeom/random.hpp"

using namespace lpg;

namespace {

ChartPtr jet2() {
    return make_chart("jet", {"x1", "x2", "u", "p1", "p2", "p11", "p12", "p22"});
}

DifferentialForm F(const ChartPtr& c, const char* s) { return parse_form(s, c); }
Expression E(const ChartPtr& c, const char* s) { return parse_expression(s, c); }

// Evaluates at a rational point; the oracle for equality checks.
Rational eval(const Expression& e, const std::vector<Rational>& point) {
    std::vector<Expression> images;
    for (const auto& q : point) images.emplace_back(q);
    return e.substitute(images, nullptr).constant_value();
}

} // namespace

TEST_CASE("rational literals and normalization") {
    auto c = jet2();
    CHECK(E(c, "x1/x1").is_one());
    CHECK(E(c, "6/4") == Expression(Rational(3, 2)));
    CHECK(E(c, "(x1*x1 - 1)/(x1 - 1)") == E(c, "x1 + 1"));
    CHECK(E(c, "(x1*x2 - x2)/(2*x1 - 2)") == E(c, "1/2*x2"));
    CHECK(E(c, "1/x1 + 1/x2") == E(c, "(x1 + x2)/(x1*x2)"));
    CHECK(E(c, "x1/x2").to_string() == "x1/x2");
    CHECK(E(c, "(x1 + 1)/(x1*x2)").to_string() == "(x1 + 1)/(x1*x2)");
}

TEST_CASE("polynomial gcd recovers a planted common factor") {
    Rng rng(11);
    auto c = make_chart("c", {"a", "b", "e"});
    for (int trial = 0; trial < 25; ++trial) {
        auto g = random_polynomial(rng, c, 3, 2, 3).numerator();
        auto p = random_polynomial(rng, c, 3, 2, 3).numerator();
        auto q = random_polynomial(rng, c, 3, 2, 3).numerator();
        if (g.is_zero() || p.is_zero() || q.is_zero()) continue;
        auto h = gcd(g * p, g * q);
        CHECK(exact_divide(h, g.monic()).has_value());
        CHECK(exact_divide(g * p, h).has_value());
        CHECK(exact_divide(g * q, h).has_value());
    }
}

TEST_CASE("parse examples") {
    auto c = jet2();
    auto theta0 = F(c, "d(u) - p1*d(x1) - p2*d(x2)");
    DifferentialForm expect = DifferentialForm::differential(c, "u") -
                              E(c, "p1") * DifferentialForm::differential(c, "x1") -
                              E(c, "p2") * DifferentialForm::differential(c, "x2");
    CHECK(theta0 == expect);
    CHECK(F(c, "d(x1) /\\ d(x1)").is_zero());
    CHECK(F(c, "d(x1*x2)") == F(c, "x2*d(x1) + x1*d(x2)"));
}

TEST_CASE("parse errors") {
    auto c = jet2();
    CHECK_THROWS_AS(F(c, "x1 +"), ParseError);
    CHECK_THROWS_AS(F(c, "(x1"), ParseError);
    CHECK_THROWS_AS(F(c, "d(x1)*d(x2)"), ParseError);
    CHECK_THROWS_AS(F(c, "x1/d(x2)"), ParseError);
    try {
        F(c, "x1 + $");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 5);
    }
    try {
        F(c, "x1 + q7");
        FAIL("expected unknown symbol");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnknownSymbol);
    }
    try {
        F(c, "x1/(x2 - x2)");
        FAIL("expected division by zero");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DivisionByZero);
    }
}

TEST_CASE("wedge examples") {
    auto c = jet2();
    auto dx1 = DifferentialForm::differential(c, "x1");
    auto dx2 = DifferentialForm::differential(c, "x2");
    CHECK(wedge(dx1, dx1).is_zero());
    CHECK(wedge(dx1, dx2) == -wedge(dx2, dx1));
    CHECK(wedge(F(c, "x1*d(x2)"), F(c, "x2*d(x1)")) == F(c, "-x1*x2*d(x1) /\\ d(x2)"));
    CHECK(DifferentialForm::term(c, {1, 0}, Expression(1)) == -wedge(dx1, dx2));
}

TEST_CASE("exterior derivative examples") {
    auto c = jet2();
    CHECK(exterior_derivative(F(c, "d(u) - p1*d(x1) - p2*d(x2)")) ==
          F(c, "(d(x1) /\\ d(p1)) + (d(x2) /\\ d(p2))"));
    CHECK(exterior_derivative(exterior_derivative(F(c, "x1*x2*u"))).is_zero());
    CHECK(exterior_derivative(F(c, "x1*x1*p12")) == F(c, "2*x1*p12*d(x1) + x1*x1*d(p12)"));
}

TEST_CASE("pullback examples") {
    auto jet = jet2();
    auto base = make_chart("base", {"x1", "x2"});
    // f = x1^2 x2
    Substitution s{base, {}};
    s.images.emplace("x1", E(base, "x1"));
    s.images.emplace("x2", E(base, "x2"));
    s.images.emplace("u", E(base, "x1*x1*x2"));
    s.images.emplace("p1", E(base, "2*x1*x2"));
    s.images.emplace("p2", E(base, "x1*x1"));
    s.images.emplace("p11", E(base, "2*x2"));
    s.images.emplace("p12", E(base, "2*x1"));
    s.images.emplace("p22", E(base, "0"));
    CHECK(pullback(F(jet, "d(u) - p1*d(x1) - p2*d(x2)"), s).is_zero());
    CHECK(pullback(F(jet, "d(p1) - p11*d(x1) - p12*d(x2)"), s).is_zero());
    CHECK(pullback(F(jet, "d(p11)"), s) == F(base, "2*d(x2)"));
    CHECK(pullback(F(jet, "d(x1)"), s) == F(base, "d(x1)"));

    Substitution missing{base, {}};
    missing.images.emplace("x1", E(base, "x1"));
    CHECK_THROWS_AS(pullback(F(jet, "d(x1)"), missing), Error);
}

TEST_CASE("interior product examples") {
    auto c = make_chart("sym", {"x0", "x1", "y0", "y1"});
    auto varpi = F(c, "(d(x0) /\\ d(y0)) + (d(x1) /\\ d(y1))");
    CHECK(interior_product(VectorField::coordinate(c, 0), varpi) == F(c, "d(y0)"));
    CHECK(interior_product(VectorField::coordinate(c, 2), varpi) == F(c, "-d(x0)"));
    CHECK(interior_product(VectorField::coordinate(c, 0), F(c, "x1")).is_zero());

    auto plane = make_chart("plane", {"x1", "x2"});
    VectorField v(plane, {E(plane, "0"), E(plane, "x1")});
    CHECK(interior_product(v, F(plane, "d(x1) /\\ d(x2)")) == F(plane, "-x1*d(x1)"));
}

TEST_CASE("reduce modulo and rank") {
    auto c = jet2();
    std::vector<DifferentialForm> gens{F(c, "d(u) - p1*d(x1) - p2*d(x2)"), F(c, "d(p1) - p11*d(x1) - p12*d(x2)")};
    CHECK(rank_of_one_forms(gens) == 2);
    CHECK(reduce_modulo(F(c, "d(u)"), gens) == F(c, "p1*d(x1) + p2*d(x2)"));
    CHECK(reduce_modulo(wedge(gens[0], F(c, "d(x2)")), gens).is_zero());
    std::vector<DifferentialForm> dependent{F(c, "d(u)"), F(c, "x1*d(u)")};
    CHECK(rank_of_one_forms(dependent) == 1);
}

TEST_CASE("matrix algebra") {
    auto c = make_chart("c", {"s", "t"});
    ExprMatrix m(2, 2);
    m(0, 0) = E(c, "s");
    m(0, 1) = E(c, "1");
    m(1, 0) = E(c, "t");
    m(1, 1) = E(c, "s + t");
    CHECK(determinant(m) == E(c, "s*s + s*t - t"));
    CHECK(m * inverse(m) == identity_matrix(2, c));
    ExprMatrix sing(2, 2);
    sing(0, 0) = E(c, "s");
    sing(0, 1) = E(c, "t");
    sing(1, 0) = E(c, "2*s");
    sing(1, 1) = E(c, "2*t");
    CHECK(determinant(sing).is_zero());
    CHECK(rank(sing) == 1);
    CHECK_THROWS_AS(inverse(sing), Error);
}

TEST_CASE("chart mismatch") {
    auto a = make_chart("a", {"x"});
    auto b = make_chart("b", {"x"});
    CHECK_THROWS_AS(E(a, "x") + E(b, "x"), Error);
    CHECK_THROWS_AS(wedge(F(a, "d(x)"), F(b, "d(x)")), Error);
    CHECK_THROWS_AS(make_chart("bad", {"x", "x"}), Error);
    CHECK_THROWS_AS(make_chart("bad", {"d"}), Error);
}

TEST_CASE("property: d squared vanishes and Leibniz holds") {
    Rng rng(2024);
    auto c = make_chart("r", {"a1", "a2", "a3", "a4", "a5", "a6"});
    for (int trial = 0; trial < 40; ++trial) {
        const unsigned ka = static_cast<unsigned>(rng.range(0, 2));
        const unsigned kb = static_cast<unsigned>(rng.range(0, 2));
        auto a = random_form(rng, c, ka, 3, 3);
        auto b = random_form(rng, c, kb, 3, 3);
        CHECK(exterior_derivative(exterior_derivative(a)).is_zero());
        auto lhs = exterior_derivative(wedge(a, b));
        auto rhs = wedge(exterior_derivative(a), b);
        auto second = wedge(a, exterior_derivative(b));
        rhs = ka % 2 ? rhs - second : rhs + second;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("property: pullback commutes with d and wedge") {
    Rng rng(7);
    auto target = make_chart("t", {"y1", "y2", "y3", "y4"});
    auto source = make_chart("s", {"z1", "z2", "z3"});
    for (int trial = 0; trial < 20; ++trial) {
        Substitution s{source, {}};
        for (auto& v : target->variables()) s.images.emplace(v, random_polynomial(rng, source, 3, 2, 3));
        auto a = random_form(rng, target, static_cast<unsigned>(rng.range(0, 2)), 2, 3);
        auto b = random_form(rng, target, 1, 2, 2);
        CHECK(pullback(exterior_derivative(a), s) == exterior_derivative(pullback(a, s)));
        CHECK(pullback(wedge(a, b), s) == wedge(pullback(a, s), pullback(b, s)));
    }
}

TEST_CASE("property: parse of print is the identity") {
    Rng rng(99);
    auto c = make_chart("r", {"a1", "a2", "a3"}, {"k"});
    for (int trial = 0; trial < 40; ++trial) {
        auto f = random_form(rng, c, static_cast<unsigned>(rng.range(0, 3)), 3, 4);
        auto g = random_polynomial(rng, c, 4, 2, 3);
        if (!g.is_zero() && rng.coin()) f *= Expression(1) / g;
        CHECK(parse_form(f.to_string(), c) == f);
    }
}

TEST_CASE("property: expression equality agrees with evaluation") {
    Rng rng(5);
    auto c = make_chart("r", {"a1", "a2", "a3"});
    for (int trial = 0; trial < 30; ++trial) {
        auto p = random_polynomial(rng, c, 3, 3, 4);
        auto q = random_polynomial(rng, c, 3, 2, 3);
        auto r = random_polynomial(rng, c, 3, 2, 3);
        if (q.is_zero() || r.is_zero()) continue;
        // (p/q) * (q*r) / r and p agree symbolically; the oracle checks by evaluation.
        auto lhs = (p / q) * (q * r) / r;
        CHECK(lhs == p);
        auto other = p + Expression(1);
        CHECK_FALSE(lhs == other);
        const unsigned points = std::max(lhs.degree(), other.degree()) + 1;
        bool separated = false;
        for (unsigned k = 0; k < points + 4; ++k) {
            std::vector<Rational> pt{rng.rational(9, 4), rng.rational(9, 4), rng.rational(9, 4)};
            Rational qv = eval(q, pt), rv = eval(r, pt);
            if (qv == 0 || rv == 0) continue;
            CHECK(eval(lhs, pt) == eval(p, pt));
            if (eval(lhs, pt) != eval(other, pt)) separated = true;
        }
        CHECK(separated);
    }
}

TEST_CASE("property: determinant and inverse agree with the permutation expansion") {
    Rng rng(29);
    auto c = make_chart("c", {"x", "y"});
    for (int trial = 0; trial < 6; ++trial) {
        const std::size_t n = 2 + trial % 2;
        ExprMatrix m(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t s = 0; s < n; ++s) {
                m(r, s) = random_polynomial(rng, c, 2, 2, 3);
                if (rng.below(3) == 0) {
                    const Expression den = random_polynomial(rng, c, 2, 1, 2);
                    if (!den.is_zero()) m(r, s) = m(r, s) / den;
                }
            }
        std::vector<std::size_t> perm(n);
        for (std::size_t i = 0; i < n; ++i) perm[i] = i;
        Expression leibniz;
        do {
            std::size_t inversions = 0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (perm[i] > perm[j]) ++inversions;
            Expression t(inversions % 2 ? -1 : 1);
            for (std::size_t i = 0; i < n; ++i) t *= m(i, perm[i]);
            leibniz += t;
        } while (std::next_permutation(perm.begin(), perm.end()));
        CHECK(determinant(m) == leibniz);
        if (leibniz.is_zero()) {
            CHECK_THROWS_AS(inverse(m), Error);
        } else {
            CHECK(inverse(m) * m == identity_matrix(n, c));
        }
    }
    ExprMatrix singular(2, 2, Expression(1));
    CHECK(determinant(singular).is_zero());
    CHECK_THROWS_AS(inverse(singular), Error);
}
