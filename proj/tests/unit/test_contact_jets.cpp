#include <doctest.h>

#include "lpgeom/contact_jets.hpp"
#include "lpgeom/error.hpp"
#include "lpgeom/parser.hpp"
#include "lpgeom/random.hpp"

using namespace lpg;
using namespace lpg::jets;

TEST_CASE("jet chart layout") {
    JetChart j(2);
    CHECK(j.chart()->dimension() == 1 + 2 + 2 + 3);
    CHECK(j.chart()->symbol(j.p(2, 1)) == "p12");
    CHECK(j.p(1, 2) == j.p(2, 1));
    JetChart j3(3);
    CHECK(j3.chart()->dimension() == 1 + 3 + 3 + 6);
    CHECK(j3.chart()->symbol(j3.p(3, 3)) == "p33");
    CHECK(j3.chart()->symbol(j3.p(2, 3)) == "p23");
    CHECK_THROWS_AS(JetChart(0), Error);
}

TEST_CASE("contact ideal examples") {
    PathSystem flat{JetChart(2)};
    auto ideal = contact_ideal(flat);
    const auto& c = flat.jet().chart();
    CHECK(ideal.Theta(0, 1) == parse_form("d(p12)", c));
    CHECK(ideal.theta0 == parse_form("d(u) - p1*d(x1) - p2*d(x2)", c));

    PathSystem one{JetChart(1)};
    auto i1 = contact_ideal(one);
    const auto& c1 = one.jet().chart();
    CHECK(i1.theta0 == parse_form("d(u) - p1*d(x1)", c1));
    CHECK(i1.theta[0] == parse_form("d(p1) - p11*d(x1)", c1));
    CHECK(i1.Theta(0, 0) == parse_form("d(p11)", c1));

    PathSystem bent{JetChart(2)};
    bent.set_F(1, 1, 1, parse_expression("x2", bent.jet().chart()));
    CHECK(contact_ideal(bent).Theta(0, 0) == parse_form("d(p11) - x2*d(x1)", bent.jet().chart()));
}

TEST_CASE("F is symmetric in its first pair") {
    PathSystem s{JetChart(2)};
    s.set_F(1, 2, 1, parse_expression("u", s.jet().chart()));
    CHECK(s.F(2, 1, 1) == s.F(1, 2, 1));
    CHECK(s.F(1, 1, 2).is_zero());
}

TEST_CASE("frobenius examples") {
    for (unsigned n = 1; n <= 3; ++n) {
        PathSystem flat{JetChart(n)};
        CHECK(frobenius_check(flat, contact_ideal(flat)).pass);
    }
    PathSystem bad{JetChart(2)};
    const auto& c = bad.jet().chart();
    bad.set_F(1, 1, 1, parse_expression("x2", c));
    auto r = frobenius_check(bad, contact_ideal(bad));
    CHECK_FALSE(r.pass);
    CHECK(r.generator == "Theta11");
    auto dx12 = parse_form("d(x1) /\\ d(x2)", c);
    CHECK((r.residue == dx12 || r.residue == -dx12));

    PathSystem ok{JetChart(2)};
    ok.set_F(1, 1, 1, parse_expression("x1", ok.jet().chart()));
    CHECK(frobenius_check(ok, contact_ideal(ok)).pass);
}

TEST_CASE("frobenius agrees with generic ideal reduction") {
    // Oracle: reduce d(generator) modulo all generators by row reduction.
    Rng rng(31);
    for (int trial = 0; trial < 6; ++trial) {
        PathSystem s{JetChart(2)};
        const auto& c = s.jet().chart();
        for (unsigned i = 1; i <= 2; ++i)
            for (unsigned j = i; j <= 2; ++j)
                for (unsigned k = 1; k <= 2; ++k)
                    if (rng.coin()) s.set_F(i, j, k, random_polynomial(rng, c, 2, 2, 2));
        auto ideal = contact_ideal(s);
        auto fast = frobenius_check(s, ideal);
        auto gens = ideal.generators();
        bool all_zero = true;
        for (std::size_t g = 0; g < gens.size(); ++g) {
            auto slow = reduce_modulo(exterior_derivative(gens[g]), gens);
            CHECK(slow == fast.residues[g]);
            all_zero = all_zero && slow.is_zero();
        }
        CHECK(all_zero == fast.pass);
    }
}

TEST_CASE("structure congruences and contact condition") {
    for (unsigned n = 1; n <= 3; ++n) {
        auto sys = PathSystem::generic(n);
        auto ideal = contact_ideal(sys);
        CHECK(structure_congruences(ideal).pass());
        CHECK_FALSE(contact_volume(sys.jet()).is_zero());
    }
    // Only (i,j)-symmetric F breaks the second congruence.
    PathSystem s{JetChart(2)};
    s.set_F(1, 1, 2, parse_expression("1", s.jet().chart()));
    auto res = structure_congruences(contact_ideal(s));
    CHECK(res.theta0_residue.is_zero());
    CHECK_FALSE(res.theta_residues[0].is_zero());
}

TEST_CASE("lift examples") {
    PathSystem s{JetChart(2)};
    auto base = s.jet().base_chart();
    auto sub = lift_hypersurface(parse_expression("x1*x2", base), s);
    CHECK(sub.images.at("p1") == parse_expression("x2", base));
    CHECK(sub.images.at("p2") == parse_expression("x1", base));
    CHECK(sub.images.at("p12").is_one());
    CHECK(sub.images.at("p11").is_zero());
    CHECK(sub.images.at("p22").is_zero());

    auto half = lift_hypersurface(parse_expression("1/2*(x1*x1 + x2*x2)", base), s);
    CHECK(half.images.at("p1") == parse_expression("x1", base));
    CHECK(half.images.at("p11").is_one());
    CHECK(half.images.at("p12").is_zero());

    auto ideal = contact_ideal(s);
    auto cubic = lift_hypersurface(parse_expression("x1*x1*x2", base), s);
    CHECK(pullback(ideal.theta[0], cubic).is_zero());
}

TEST_CASE("property: lifts annihilate theta and Theta measures the third derivative") {
    Rng rng(77);
    for (unsigned n = 1; n <= 3; ++n) {
        PathSystem s{JetChart(n)};
        auto base = s.jet().base_chart();
        auto ideal = contact_ideal(s);
        for (int trial = 0; trial < 5; ++trial) {
            auto f = random_polynomial(rng, base, n, 4, 5);
            auto sub = lift_hypersurface(f, s);
            CHECK(pullback(ideal.theta0, sub).is_zero());
            for (unsigned i = 0; i < n; ++i) CHECK(pullback(ideal.theta[i], sub).is_zero());
            for (unsigned i = 1; i <= n; ++i)
                for (unsigned j = i; j <= n; ++j) {
                    DifferentialForm expect(base);
                    auto fij = f.derivative("x" + std::to_string(i)).derivative("x" + std::to_string(j));
                    for (unsigned k = 1; k <= n; ++k)
                        expect += fij.derivative("x" + std::to_string(k)) *
                                  DifferentialForm::differential(base, k - 1);
                    CHECK(pullback(ideal.Theta(i - 1, j - 1), sub) == expect);
                }
            // Quadratic f solves the flat system.
            auto q = random_polynomial(rng, base, n, 2, 4);
            auto qs = lift_hypersurface(q, s);
            for (const auto& g : ideal.generators()) CHECK(pullback(g, qs).is_zero());
        }
    }
}
