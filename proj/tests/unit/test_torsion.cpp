#include <doctest.h>

#include "lpgeom/error.hpp"
#include "lpgeom/parser.hpp"
#include "lpgeom/torsion.hpp"

using namespace lpg;
using namespace lpg::torsion;

namespace {

GaugeParameters random_gauge(Rng& rng, unsigned n) {
    GaugeParameters g = GaugeParameters::zero(n);
    g.p = Expression(rng.rational(4, 2));
    for (unsigned i = 0; i < n; ++i) {
        g.c[i] = Expression(rng.rational(4, 2));
        for (unsigned j = 0; j < n; ++j) {
            g.c2.at({i, j}) = Expression(rng.rational(4, 2));
            for (unsigned k = j; k < n; ++k) g.c3.at({i, j, k}) = g.c3.at({i, k, j}) = Expression(rng.rational(4, 2));
        }
    }
    return g;
}

} // namespace

TEST_CASE("apply_gauge examples") {
    Rng rng(5);
    auto T = random_torsion(rng, 2);
    CHECK(apply_gauge(T, GaugeParameters::zero(2)) == T);

    GaugeParameters g = GaugeParameters::zero(2);
    g.c[0] = Expression(1);
    auto out = apply_gauge(TorsionTensor(2), g);
    CHECK(out.t0t(0, 0, 0) == Expression(-1));
    CHECK(out.t0t(0, 1, 1) == Expression(Rational(-1, 2)));
    CHECK(out.t0t(1, 0, 1) == Expression(Rational(-1, 2)));
    CHECK(out.t0t(0, 1, 0).is_zero());
    CHECK(out.t0t(1, 1, 1).is_zero());
    CHECK(out.t0t(1, 1, 0).is_zero());
}

TEST_CASE("apply_gauge is affine: the negated gauge undoes it") {
    Rng rng(6);
    for (unsigned n = 2; n <= 3; ++n) {
        auto T = random_torsion(rng, n);
        auto g = random_gauge(rng, n);
        auto moved = apply_gauge(T, g);
        CHECK(apply_gauge(moved, -g) == T);
    }
}

TEST_CASE("symmetry violations are reported") {
    TorsionTensor T(2);
    T.raw_t0t().at({0, 1, 0}) = Expression(1);
    CHECK_THROWS_AS(T.validate(), Error);
    CHECK_THROWS_AS(apply_gauge(T, GaugeParameters::zero(2)), Error);
    TorsionTensor U(2);
    CHECK_THROWS_AS(U.set_tt(0, 0, 1, 1, Expression(1)), Error);
    GaugeParameters g = GaugeParameters::zero(2);
    g.c3.at({0, 0, 1}) = Expression(1);
    CHECK_THROWS_AS(apply_gauge(U, g), Error);
}

TEST_CASE("first normalization examples") {
    auto zero = solve_first_normalization(TorsionTensor(2));
    CHECK(zero.gauge == GaugeParameters::zero(2));
    CHECK(zero.pass());

    TorsionTensor T(2);
    T.set_t0t(0, 0, 0, Expression(5));
    auto r = solve_first_normalization(T);
    GaugeParameters expect = GaugeParameters::zero(2);
    expect.c[0] = Expression(5);
    CHECK(r.gauge == expect);
    CHECK(r.normalized.t0t(0, 0, 0).is_zero());
    CHECK(r.pass());
    CHECK(r.free_parameters == std::vector<std::string>{"p"});
}

TEST_CASE("property: first normalization holds for random torsion") {
    Rng rng(14);
    for (unsigned n = 2; n <= 3; ++n)
        for (int trial = 0; trial < 5; ++trial) {
            auto T = random_torsion(rng, n);
            CHECK_FALSE(first_normalization_defects(T).empty());
            auto r = solve_first_normalization(T);
            CHECK(r.pass());
            // Idempotence.
            auto again = solve_first_normalization(r.normalized);
            CHECK(again.gauge == GaugeParameters::zero(n));
            // The symbolic residual change neither disturbs nor moves anything.
            auto c = make_chart("gauge", {}, {"p"});
            auto cert = residual_gauge_preserves(r.normalized, parse_expression("p", c));
            CHECK(cert.pass);
            CHECK(cert.unchanged);
            CHECK(residual_gauge_preserves(r.normalized, Expression(3)).pass);
            CHECK_THROWS_AS(residual_gauge_preserves(T, Expression(3)), Error);
        }
}

TEST_CASE("the p freedom only shifts T_ij,kl") {
    // Without the compensating c^i_j the change p alone moves T_ii,ii by p.
    TorsionTensor T(2);
    GaugeParameters g = GaugeParameters::zero(2);
    g.p = Expression(3);
    auto out = apply_gauge(T, g);
    CHECK(out.t0T(0, 0, 0, 0) == Expression(3));
    CHECK(out.t0T(0, 1, 0, 1) == Expression(Rational(3, 2)));
}

TEST_CASE("second normalization examples") {
    auto zero = solve_second_normalization(PTensor(2));
    CHECK(zero.gauge == SecondGaugeParameters::zero(2));

    PTensor P(2);
    P.set_pjk(0, 0, 0, Expression(4));
    auto r = solve_second_normalization(P);
    CHECK(r.gauge.h[0] == Expression(-4));
    CHECK(r.gauge.h[1].is_zero());
    CHECK(r.pass());

    PTensor Q(2);
    Q.set_pj(0, 0, Expression(3));
    Q.set_pj(1, 1, Expression(1));
    CHECK(solve_second_normalization(Q).gauge.t == Expression(-4));
}

TEST_CASE("property: second normalization holds for random P") {
    Rng rng(15);
    auto c = make_chart("gauge", {}, {"p"});
    for (unsigned n = 2; n <= 3; ++n)
        for (int trial = 0; trial < 5; ++trial) {
            auto P = random_p_tensor(rng, n);
            auto r = solve_second_normalization(P);
            CHECK(r.pass());
            CHECK(solve_second_normalization(r.normalized).gauge == SecondGaugeParameters::zero(n));
            auto cert = residual_second_gauge_preserves(r.normalized, parse_expression("p", c));
            CHECK(cert.pass);
            CHECK(cert.unchanged);
            // p without the matching t breaks the trace condition.
            auto moved = apply_second_gauge(r.normalized, SecondGaugeParameters::zero(n), parse_expression("p", c));
            CHECK_FALSE(second_normalization_defects(moved).empty());
        }
}
