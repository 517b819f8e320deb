#include <doctest.h>

#include <algorithm>

#include "lpgeom/cartan.hpp"
#include "lpgeom/error.hpp"
#include "lpgeom/parser.hpp"

using namespace lpg;
using namespace lpg::cartan;

namespace {

ConnectionBlocks random_blocks(Rng& rng, const ChartPtr& c, unsigned n) {
    auto f = [&] { return random_form(rng, c, 1, 1, 2); };
    ConnectionBlocks b = ConnectionBlocks::zero(n, c);
    b.theta0 = f();
    b.rho = f();
    b.psi = f();
    for (unsigned i = 0; i < n; ++i) {
        b.theta[i] = f();
        b.omega[i] = f();
        b.beta[i] = f();
        b.mu[i] = f();
        for (unsigned j = 0; j < n; ++j) {
            b.alpha(i, j) = f();
            if (j >= i) {
                b.Theta(i, j) = b.Theta(j, i) = f();
                b.gamma(i, j) = b.gamma(j, i) = f();
            }
        }
    }
    return b;
}

bool has(const std::vector<std::string>& v, const std::string& s) { return std::find(v.begin(), v.end(), s) != v.end(); }

} // namespace

TEST_CASE("assemble_phi examples") {
    auto c = make_chart("xy", {"x", "u", "p1", "p2", "x2"});
    CHECK(is_zero(assemble_phi(ConnectionBlocks::zero(2, c)).matrix()));

    ConnectionBlocks b = ConnectionBlocks::zero(2, c);
    b.theta0 = parse_form("d(u) - p1*d(x) - p2*d(x2)", c);
    b.theta[0] = parse_form("d(p1)", c);
    b.theta[1] = parse_form("d(p2)", c);
    auto phi = assemble_phi(b);
    CHECK(phi.eta()(0, 0) == b.theta0 * Expression(2));
    CHECK(phi.eta()(0, 1) == b.theta[0]);
    CHECK(phi.eta()(2, 0) == b.theta[1]);
    CHECK(phi.eta()(1, 1).is_zero());
    CHECK(is_zero(phi.phi()));
    CHECK(is_zero(phi.pi()));

    // Mode-specific slots.
    ConnectionBlocks r = ConnectionBlocks::zero(1, c);
    r.rho = parse_form("d(x)", c);
    r.psi = parse_form("d(u)", c);
    r.mu[0] = parse_form("d(p1)", c);
    r.alpha(0, 0) = parse_form("d(p2)", c);
    auto cl = assemble_phi(r, Mode::Classical), nm = assemble_phi(r, Mode::Normal);
    CHECK(cl(0, 0) == parse_form("-1/2*d(x)", c));
    CHECK(cl(1, 1) == parse_form("1/2*d(x) - d(p2)", c));
    CHECK(cl(0, 2) == parse_form("-1/4*d(u)", c));
    CHECK(cl(0, 3) == parse_form("1/2*d(p1)", c));
    CHECK(nm(0, 0) == parse_form("-d(x)", c));
    CHECK(nm(1, 1) == parse_form("d(p2)", c));
    CHECK(nm(0, 2) == parse_form("d(u)", c));
    CHECK(nm(0, 3) == parse_form("-1/2*d(p1)", c));
}

TEST_CASE("assemble_phi errors") {
    auto c = make_chart("c", {"x", "y"});
    ConnectionBlocks b = ConnectionBlocks::zero(2, c);
    b.Theta(0, 1) = parse_form("d(x)", c);
    CHECK_THROWS_AS(assemble_phi(b), Error);
    b.Theta(1, 0) = b.Theta(0, 1);
    CHECK_NOTHROW(assemble_phi(b));
    b.gamma(1, 0) = parse_form("d(y)", c);
    CHECK_THROWS_AS(assemble_phi(b), Error);
    ConnectionBlocks d = ConnectionBlocks::zero(1, c);
    d.rho = parse_form("d(x) /\\ d(y)", c);
    CHECK_THROWS_AS(assemble_phi(d), Error);
}

TEST_CASE("property: assembled forms and their curvature lie in sp") {
    Rng rng(61);
    auto c = make_chart("c", {"a", "b", "e"});
    for (unsigned n = 1; n <= 2; ++n)
        for (int trial = 0; trial < 3; ++trial) {
            auto b = random_blocks(rng, c, n);
            for (Mode m : {Mode::Classical, Mode::Normal}) {
                auto phi = assemble_phi(b, m);
                CHECK(in_sp(phi));
                CHECK(in_sp(curvature(phi)));
            }
        }
    // sp_defect detects a matrix outside sp.
    FormMatrix bad = zero_forms(4, 4, c);
    bad(0, 0) = parse_form("d(a)", c);
    CHECK_FALSE(in_sp(SpForm(bad)));
}

TEST_CASE("curvature examples") {
    auto c = make_chart("c", {"x1", "x2"});
    ExprMatrix C(4, 4, Expression(0));
    // phi = [[1,2],[0,3]], pi = [[0,1],[1,0]], eta = [[5,0],[0,0]].
    C(0, 0) = Expression(1), C(0, 1) = Expression(2), C(1, 1) = Expression(3);
    C(0, 3) = C(1, 2) = Expression(1);
    C(2, 0) = Expression(5);
    C(2, 2) = Expression(-1), C(3, 2) = Expression(-2), C(3, 3) = Expression(-3);
    FormMatrix dx1 = zero_forms(4, 4, c), x1dx2 = zero_forms(4, 4, c), expect = zero_forms(4, 4, c);
    for (int r = 0; r < 4; ++r)
        for (int s = 0; s < 4; ++s) {
            dx1(r, s) = C(r, s) * parse_form("d(x1)", c);
            x1dx2(r, s) = C(r, s) * parse_form("x1*d(x2)", c);
            expect(r, s) = C(r, s) * parse_form("d(x1) /\\ d(x2)", c);
        }
    CHECK(in_sp(SpForm(dx1)));
    CHECK(is_zero(curvature(SpForm(dx1)).matrix()));
    CHECK(curvature(SpForm(x1dx2)).matrix() == expect);
}

TEST_CASE("maurer_cartan_form examples") {
    auto c = make_chart("c", {"x", "y"});
    CHECK(is_zero(maurer_cartan_form(identity_matrix(4), c).matrix()));

    ExprMatrix g = identity_matrix(4);
    ExprMatrix S(2, 2);
    S(0, 0) = parse_expression("x*x", c);
    S(0, 1) = S(1, 0) = parse_expression("x*y", c);
    S(1, 1) = parse_expression("y", c);
    g.set_block(2, 0, S);
    auto phi = maurer_cartan_form(g, c);
    CHECK(is_zero(phi.phi()));
    CHECK(is_zero(phi.pi()));
    CHECK(phi.eta() == differential(S));
    CHECK(is_zero(curvature(phi).matrix()));

    ExprMatrix bad = identity_matrix(4);
    bad(0, 0) = parse_expression("x", c);
    CHECK_THROWS_AS(maurer_cartan_form(bad, c), Error);
    CHECK_THROWS_AS(maurer_cartan_form(identity_matrix(3), c), Error);
}

TEST_CASE("property: Maurer-Cartan forms are flat and match the general inverse") {
    Rng rng(73);
    auto c = make_chart("c", {"x", "y"});
    for (unsigned n = 1; n <= 2; ++n)
        for (int trial = 0; trial < 3; ++trial) {
            auto g = random_symplectic(rng, c, n);
            auto phi = maurer_cartan_form(g, c);
            CHECK(in_sp(phi));
            CHECK(is_zero(curvature(phi).matrix()));
            // Oracle: g^{-1} dg through Gauss-Jordan.
            CHECK(phi.matrix() == wedge(inverse(g), differential(g)));
        }
}

TEST_CASE("property: Bianchi identity") {
    Rng rng(19);
    auto c = make_chart("c", {"x", "y", "z"});
    for (unsigned n = 1; n <= 2; ++n)
        for (int trial = 0; trial < 3; ++trial) {
            auto phi = random_sp_form(rng, c, n);
            auto W = curvature(phi);
            CHECK(is_zero(bianchi_defect(phi, W)));
        }
}

TEST_CASE("flat model blocks: zero curvature, identities hold") {
    for (unsigned n = 1; n <= 2; ++n) {
        jets::PathSystem sys{jets::JetChart(n)};
        auto b = flat_blocks(jets::contact_ideal(sys));
        for (Mode m : {Mode::Classical, Mode::Normal}) {
            auto W = curvature(assemble_phi(b, m));
            CHECK(is_zero(W.matrix()));
            auto report = check_curvature_identities(W, b);
            CHECK(report.pass());
            CHECK(report.checks.size() == 6);
        }
    }
}

TEST_CASE("perturbed flat model: exactly the hand-derived identities fail") {
    // gamma_11 += c x1 dx2 with c = 3. By direct expansion
    // Omega_gamma_11 = 3 dx1^dx2 and Omega_phi row 2 = 3 x1 dx2 ^ (theta1, Theta11, Theta12),
    // so the first column of Omega_phi, identity.theta and identity.omega fail.
    jets::PathSystem sys{jets::JetChart(2)};
    const auto& jc = sys.jet();
    const ChartPtr& c = jc.chart();
    auto ideal = jets::contact_ideal(sys);
    auto b = flat_blocks(ideal);
    b.gamma(0, 0) = parse_form("3*x1*d(x2)", c);
    auto W = curvature(assemble_phi(b));
    CHECK(W.pi()(1, 1) == parse_form("3*(d(x1) /\\ d(x2))", c));
    CHECK(W.phi()(1, 0) == wedge(parse_form("3*x1*d(x2)", c), ideal.theta[0]));
    auto report = check_curvature_identities(W, b);
    auto failed = report.failed();
    std::sort(failed.begin(), failed.end());
    CHECK(failed == std::vector<std::string>{"identity.omega", "identity.theta", "shape.phi"});
    for (const auto& check : report.checks)
        if (!check.pass) CHECK_FALSE(check.residuals.empty());
}

TEST_CASE("shape-preserving perturbation fixes the sign of the second identity") {
    // gamma_11 += c theta1 leaves the first column of Omega_phi zero, but
    // Omega_alpha and Omega_gamma become nonzero.
    jets::PathSystem sys{jets::JetChart(2)};
    const ChartPtr& c = sys.jet().chart();
    auto ideal = jets::contact_ideal(sys);
    auto b = flat_blocks(ideal);
    b.gamma(0, 0) = ideal.theta[0] * Expression(2);
    auto W = curvature(assemble_phi(b));
    CHECK_FALSE(is_zero(W.matrix()));
    auto report = check_curvature_identities(W, b);
    CHECK(report.pass());

    // The same sum with +Omega_alpha^T ^ omega does not vanish here.
    const auto Wf = W.phi();
    DifferentialForm plus(c);
    plus += wedge(W.pi()(1, 1), ideal.theta[0]) + wedge(W.pi()(1, 2), ideal.theta[1]);
    for (unsigned k = 0; k < 2; ++k) plus += wedge(-Wf(1, k + 1), ideal.omega[k]);
    CHECK_FALSE(plus.is_zero());
}

TEST_CASE("identity check rejects a degenerate coframe") {
    jets::PathSystem sys{jets::JetChart(1)};
    auto b = flat_blocks(jets::contact_ideal(sys));
    auto W = curvature(assemble_phi(b));
    b.omega[0] = b.theta0;
    CHECK_THROWS_AS(check_curvature_identities(W, b), Error);
}
