#include "lpgeom/acceptance.hpp"

#include "lpgeom/cartan.hpp"
#include "lpgeom/contact_jets.hpp"
#include "lpgeom/error.hpp"
#include "lpgeom/flat_model.hpp"
#include "lpgeom/quadric.hpp"
#include "lpgeom/rep.hpp"
#include "lpgeom/torsion.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>

namespace lpg::acceptance {

using io::VerificationReport;

namespace {

// Counts trials and keeps the first failure as the residual.
class Tally {
public:
    void record(bool ok, const std::string& what) {
        ++trials_;
        if (!ok && first_.empty()) first_ = what;
        if (!ok) ++failures_;
    }
    void into(VerificationReport& r, const std::string& name) const {
        std::string residual;
        if (failures_) residual = std::to_string(failures_) + "/" + std::to_string(trials_) + " failed; first: " + first_;
        r.add_check(name, failures_ == 0, residual);
        r.add_result(name + ".trials", std::to_string(trials_));
    }

private:
    int trials_ = 0;
    int failures_ = 0;
    std::string first_;
};

std::string seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", s);
    return buf;
}

// ------------------------------------------------------------ 1

void exterior_kernel(VerificationReport& r, Rng& rng) {
    auto source = make_chart("k3", {"z1", "z2", "z3"});
    Tally dd, leibniz, pull;
    int nonzero = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto vars = static_cast<unsigned>(rng.range(1, 8));
        std::vector<std::string> names;
        for (unsigned i = 1; i <= vars; ++i) names.push_back("y" + std::to_string(i));
        const auto target = make_chart("k" + std::to_string(vars), names);
        const auto top = std::min(4u, vars);
        const auto ka = static_cast<unsigned>(rng.range(0, top));
        const auto kb = static_cast<unsigned>(rng.range(0, top - std::min(ka, top)));
        const auto a = random_form(rng, target, ka, 4, 3);
        const auto b = random_form(rng, target, kb, 4, 3);
        nonzero += !wedge(a, b).is_zero();
        const auto tag = "trial " + std::to_string(trial) + ": a = " + a.to_string();

        dd.record(exterior_derivative(exterior_derivative(a)).is_zero(), tag);

        auto rhs = wedge(exterior_derivative(a), b);
        const auto second = wedge(a, exterior_derivative(b));
        rhs = ka % 2 ? rhs - second : rhs + second;
        leibniz.record(exterior_derivative(wedge(a, b)) == rhs, tag);

        Substitution s{source, {}};
        for (const auto& v : target->variables()) s.images.emplace(v, random_polynomial(rng, source, 3, 2, 2, 3));
        pull.record(pullback(exterior_derivative(a), s) == exterior_derivative(pullback(a, s)), tag);
    }
    r.add_result("nonzero_products", std::to_string(nonzero));
    dd.into(r, "d_squared_zero");
    leibniz.into(r, "graded_leibniz");
    pull.into(r, "pullback_commutes_with_d");
}

// ------------------------------------------------------------ 2

void contact_structure(VerificationReport& r, Rng&) {
    for (unsigned n = 1; n <= 3; ++n) {
        const auto tag = "n" + std::to_string(n);
        const auto vol = jets::contact_volume(jets::JetChart(n));
        r.add_check("contact_nondegenerate." + tag, !vol.is_zero(), "theta0 /\\ (d theta0)^n = 0");
        const auto sys = jets::PathSystem::generic(n);
        const auto cong = jets::structure_congruences(jets::contact_ideal(sys));
        std::string residual;
        if (!cong.theta0_residue.is_zero()) residual += "theta0: " + cong.theta0_residue.to_string() + "; ";
        for (std::size_t i = 0; i < cong.theta_residues.size(); ++i)
            if (!cong.theta_residues[i].is_zero())
                residual += "theta" + std::to_string(i + 1) + ": " + cong.theta_residues[i].to_string() + "; ";
        r.add_check("structure_congruences." + tag, cong.pass(), residual);
    }
}

// ------------------------------------------------------------ 3

void frobenius(VerificationReport& r, Rng&) {
    auto run_case = [](const char* F111) {
        jets::PathSystem sys{jets::JetChart(2)};
        if (F111) sys.set_F(1, 1, 1, Expression::symbol(sys.jet().chart(), F111));
        return jets::frobenius_check(sys, jets::contact_ideal(sys));
    };
    const auto zero = run_case(nullptr);
    r.add_check("zero_system_passes", zero.pass, zero.generator + ": " + zero.residue.to_string());

    const auto bad = run_case("x2");
    const ChartPtr& c = bad.residue.chart() ? bad.residue.chart() : jets::JetChart(2).chart();
    const auto dx12 = wedge(DifferentialForm::differential(c, "x1"), DifferentialForm::differential(c, "x2"));
    const bool exact = bad.residue == dx12 || bad.residue == -dx12;
    r.add_check("x2_fails", !bad.pass, "the system passed");
    r.add_check("x2_residual_is_dx1_dx2", exact, bad.residue.to_string());
    r.add_result("x2_residual", bad.generator + ": " + bad.residue.to_string());

    const auto ok = run_case("x1");
    r.add_check("x1_passes", ok.pass, ok.generator + ": " + ok.residue.to_string());
}

// ------------------------------------------------------------ 4

void round_trip(VerificationReport& r, Rng& rng) {
    Tally dev, nv, sd;
    for (int trial = 0; trial < 20; ++trial) {
        const unsigned n = trial % 2 ? 3 : 2;
        const auto base = jets::JetChart(n).base_chart();
        const auto f = random_polynomial(rng, base, n, 4, 5);
        const auto tag = "f = " + f.to_string();
        const auto fam = quadric::osculating_family(f);
        std::vector<Expression> X;
        for (std::size_t i = 0; i < n; ++i) X.push_back(Expression::symbol(fam.parameters, i));

        bool same = false;
        try {
            const auto d = quadric::developable_from_family(fam, X);
            same = d.u == f.rebind(fam.parameters);
            for (unsigned i = 0; i < n; ++i) same = same && d.p[i] == f.derivative(i).rebind(fam.parameters);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::Precondition) throw;
        }
        dev.record(same, tag);
        nv.record(quadric::null_vector_check(fam, X).pass, tag);
        sd.record(quadric::symmetric_differential(fam).is_zero(), tag);
    }
    dev.into(r, "developable_reproduces_f_and_gradient");
    nv.into(r, "null_vector_identity");
    sd.into(r, "symmetric_differential_zero");
}

// ------------------------------------------------------------ 5

ExprMatrix random_square(Rng& rng, unsigned n, bool symmetric) {
    ExprMatrix A(n, n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            if (symmetric && j < i) {
                A(i, j) = A(j, i);
                continue;
            }
            A(i, j) = Expression(rng.rational(6, 4));
        }
    return A;
}

void flat_model(VerificationReport& r, Rng& rng) {
    for (unsigned n = 1; n <= 3; ++n) {
        const auto id = flat::verify_chart_identity(n);
        r.add_check("chart_identity.n" + std::to_string(n), id.pass, id.residual.to_string());
    }

    Tally sym, nonsym;
    for (int trial = 0; trial < 60; ++trial) {
        const bool symmetric = trial < 50;
        // n = 1 has no off-diagonal pair to break.
        const auto n = static_cast<unsigned>(rng.range(symmetric ? 1 : 2, 3));
        const Expression a0(rng.rational(6, 4));
        std::vector<Expression> a;
        for (unsigned i = 0; i < n; ++i) a.emplace_back(rng.rational(6, 4));
        auto A = random_square(rng, n, symmetric);
        if (!symmetric && A(0, 1) == A(1, 0)) A(0, 1) = A(1, 0) + Expression(1);
        const unsigned m = n;
        const flat::SymplecticSpace sp(n);
        std::string tag = "A = [";
        for (unsigned i = 0; i < m; ++i)
            for (unsigned j = 0; j < m; ++j) tag += (i + j ? ", " : "") + A(i, j).to_string();
        tag += "]";
        if (symmetric) {
            const quadric::QuadricCoefficients q(a0, a, A);
            sym.record(flat::is_lagrangian(flat::quadric_to_lagrangian(q, sp)), tag);
        } else {
            nonsym.record(!flat::is_lagrangian(flat::graph_plane(sp, a0, a, A)), tag);
        }
    }
    sym.into(r, "lagrangian.symmetric");
    nonsym.into(r, "lagrangian.nonsymmetric_rejected");

    const auto g = make_chart("g", {}, {"a0", "a1", "a2", "a11", "a12", "a22", "s1", "s2"});
    auto s = [&](const char* name) { return Expression::symbol(g, name); };
    ExprMatrix A(2, 2);
    A(0, 0) = s("a11");
    A(0, 1) = A(1, 0) = s("a12");
    A(1, 1) = s("a22");
    const quadric::QuadricCoefficients q(s("a0"), {s("a1"), s("a2")}, A);
    const std::vector<Expression> x0{s("s1"), s("s2")};
    const auto inc = flat::quadric_plane_incidence(q, x0);
    std::string residual;
    for (const auto& v : inc.residual) residual += v.to_string() + " ";
    r.add_check("incidence.generic_n2", inc.pass, residual);
}

// ------------------------------------------------------------ 6

cartan::ConnectionBlocks random_blocks(Rng& rng, const ChartPtr& c, unsigned n) {
    auto f = [&] { return random_form(rng, c, 1, 1, 2); };
    auto b = cartan::ConnectionBlocks::zero(n, c);
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

void cartan_forms(VerificationReport& r, Rng& rng) {
    const unsigned n = 2;
    const auto c = make_chart("c", {"x", "y", "z"});
    Tally sp, mc, bianchi;
    for (int trial = 0; trial < 10; ++trial) {
        const auto b = random_blocks(rng, c, n);
        for (auto mode : {cartan::Mode::Classical, cartan::Mode::Normal})
            sp.record(cartan::in_sp(cartan::assemble_phi(b, mode)), "random blocks, trial " + std::to_string(trial));
    }
    const auto c2 = make_chart("c2", {"x", "y"});
    for (int trial = 0; trial < 20; ++trial) {
        const auto g = cartan::random_symplectic(rng, c2, n);
        const auto phi = cartan::maurer_cartan_form(g, c2);
        sp.record(cartan::in_sp(phi), "Maurer-Cartan trial " + std::to_string(trial));
        mc.record(is_zero(cartan::curvature(phi).matrix()), "trial " + std::to_string(trial));
    }
    for (int trial = 0; trial < 20; ++trial) {
        const auto phi = cartan::random_sp_form(rng, c, n);
        sp.record(cartan::in_sp(phi), "random sp form trial " + std::to_string(trial));
        bianchi.record(is_zero(cartan::bianchi_defect(phi, cartan::curvature(phi))), "trial " + std::to_string(trial));
    }

    jets::PathSystem sys{jets::JetChart(n)};
    const auto ideal = jets::contact_ideal(sys);
    auto blocks = cartan::flat_blocks(ideal);
    for (auto mode : {cartan::Mode::Classical, cartan::Mode::Normal}) {
        const auto phi = cartan::assemble_phi(blocks, mode);
        sp.record(cartan::in_sp(phi), "flat blocks");
        const auto report = cartan::check_curvature_identities(cartan::curvature(phi), blocks);
        const char* tag = mode == cartan::Mode::Classical ? "classical" : "normal";
        std::string failed;
        for (const auto& f : report.failed()) failed += f + " ";
        r.add_check(std::string("identities.flat.") + tag, report.pass(), failed);
    }
    sp.into(r, "sp_membership");
    mc.into(r, "maurer_cartan_flat");
    bianchi.into(r, "bianchi");

    // gamma_11 += 3 x1 dx2: exactly these identities break.
    blocks.gamma(0, 0) = blocks.gamma(0, 0) +
                         DifferentialForm::differential(sys.jet().chart(), "x2") * (Expression(3) * sys.jet().x_expr(1));
    const auto report =
        cartan::check_curvature_identities(cartan::curvature(cartan::assemble_phi(blocks)), blocks);
    auto failed = report.failed();
    std::sort(failed.begin(), failed.end());
    const std::vector<std::string> expected{"identity.omega", "identity.theta", "shape.phi"};
    std::string listed;
    for (const auto& f : failed) listed += (listed.empty() ? "" : ", ") + f;
    r.add_result("perturbed.failed", "[" + listed + "]");
    bool residuals = true;
    for (const auto& check : report.checks) residuals = residuals && (check.pass || !check.residuals.empty());
    r.add_check("identities.perturbed_reported", failed == expected && residuals,
                "failed [" + listed + "], expected [identity.omega, identity.theta, shape.phi]");
}

// ------------------------------------------------------------ 7

void torsion_normalization(VerificationReport& r, Rng& rng) {
    const auto p = Expression::symbol(make_chart("gauge", {}, {"p"}), "p");
    Tally first, residual, second, residual2;
    for (int trial = 0; trial < 50; ++trial) {
        const unsigned n = trial % 2 ? 3 : 2;
        const auto T = torsion::random_torsion(rng, n);
        const auto sol = torsion::solve_first_normalization(T);
        const auto normalized = torsion::apply_gauge(T, sol.gauge);
        const auto defects = torsion::first_normalization_defects(normalized);
        const auto tag = "trial " + std::to_string(trial) +
                         (defects.empty() ? "" : ": " + defects.front().name + " = " + defects.front().value.to_string());
        first.record(defects.empty() && normalized == sol.normalized, tag);
        if (defects.empty()) {
            const auto cert = torsion::residual_gauge_preserves(normalized, p);
            residual.record(cert.pass && cert.unchanged, "trial " + std::to_string(trial));
        }

        const auto P = torsion::random_p_tensor(rng, n);
        const auto sol2 = torsion::solve_second_normalization(P);
        const auto normalized2 = torsion::apply_second_gauge(P, sol2.gauge);
        const auto defects2 = torsion::second_normalization_defects(normalized2);
        second.record(defects2.empty(), "trial " + std::to_string(trial) +
                                            (defects2.empty() ? "" : ": " + defects2.front().name));
        if (defects2.empty()) {
            const auto cert = torsion::residual_second_gauge_preserves(normalized2, p);
            residual2.record(cert.pass && cert.unchanged, "trial " + std::to_string(trial));
        }
    }
    first.into(r, "first_normalization");
    residual.into(r, "first_residual_gauge");
    second.into(r, "second_normalization");
    residual2.into(r, "second_residual_gauge");
}

// ------------------------------------------------------------ 8

void representations(VerificationReport& r, Rng& rng) {
    for (unsigned n = 2; n <= 3; ++n) {
        for (const auto& c : rep::verify_decompositions(n)) {
            const auto name = "decomposition.n" + std::to_string(n) + "." + c.name;
            r.add_result(name, c.ledger);
            r.add_check(name, c.pass, "ledger " + c.ledger);
        }
    }
    // Ledgers pinned for n = 2.
    std::vector<std::string> n2;
    for (const auto& c : rep::verify_decompositions(2)) n2.push_back(c.ledger);
    for (const std::string want : {"6 = 5+1", "50 = 35+10+5", "40 = 20+4+16"}) {
        const bool found = std::find(n2.begin(), n2.end(), want) != n2.end();
        r.add_check("ledger.n2." + want.substr(0, want.find(' ')), found, "'" + want + "' not among the computed ledgers");
    }

    for (unsigned n = 2; n <= 3; ++n) {
        const auto tag = ".n" + std::to_string(n);
        rep::VPieceProjector P(n);
        r.add_check("projector.idempotent" + tag, P.idempotent(), "P*P != P");
        r.add_check("projector.rank" + tag, P.rank() == 2 * n, "rank " + std::to_string(P.rank()));
        Tally eq;
        for (int trial = 0; trial < 10; ++trial) {
            const auto X = rep::random_sp_element(rng, n);
            std::vector<Rational> t(P.dimension());
            for (auto& v : t) v = rng.rational(4, 3);
            eq.record(P.apply(P.act(X, t)) == P.act(X, P.apply(t)), "trial " + std::to_string(trial));
        }
        eq.into(r, "projector.equivariant" + tag);
    }

    const auto a = rep::so_minimal_dims(4);
    r.add_result("so5.next", std::to_string(a.next));
    r.add_result("so5.complement", std::to_string(a.complement));
    r.add_check("lemma.n4.next_exceeds_2n", a.next == 10 && a.next > 8, "next " + std::to_string(a.next));
    r.add_check("lemma.n4.complement_below_n_plus_1", a.complement == 3 && a.complement < 5,
                "complement " + std::to_string(a.complement));
    r.add_check("lemma.n4.audit", a.pass(), "so_minimal_dims(4) flags do not all hold");
}

using Runner = void (*)(VerificationReport&, Rng&);

Runner runner(int id) {
    static const Runner table[] = {exterior_kernel, contact_structure, frobenius,     round_trip,
                                   flat_model,      cartan_forms,      torsion_normalization, representations};
    if (id < 1 || id > 8) throw Error(ErrorKind::InvalidArgument, "criteria are numbered 1 to 8 (9 is determinism)");
    return table[id - 1];
}

} // namespace

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> list{
        {1, "exterior kernel", 30},          {2, "contact structure", 30},  {3, "frobenius certification", 0},
        {4, "osculating round trip", 120},   {5, "flat model", 0},          {6, "cartan forms", 120},
        {7, "torsion normalization", 60},    {8, "representation theory", 60}, {9, "determinism", 0},
    };
    return list;
}

VerificationReport run(int id, std::uint64_t seed) {
    const Runner f = runner(id);
    const auto& c = criteria()[static_cast<std::size_t>(id - 1)];
    VerificationReport r;
    r.subject = "criterion " + std::to_string(id) + " (" + c.title + ")";
    r.add_result("seed", std::to_string(seed));
    Rng rng(seed + static_cast<std::uint64_t>(id));
    const auto start = std::chrono::steady_clock::now();
    f(r, rng);
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.timings.emplace_back("total", elapsed);
    if (c.limit_seconds > 0) {
        r.add_result("limit_seconds", seconds(c.limit_seconds));
        // The residual only appears on failure, keeping passing reports stable.
        const bool ok = elapsed < c.limit_seconds;
        r.add_check("runtime", ok, ok ? "" : seconds(elapsed) + " s");
    }
    return r;
}

std::string structured(const std::vector<VerificationReport>& reports) {
    std::string out;
    for (const auto& r : reports) out += io::emit_report(r, io::ReportFormat::Structured);
    return out;
}

VerificationReport determinism(std::uint64_t seed, const std::string& reference) {
    VerificationReport r;
    r.subject = "criterion 9 (determinism)";
    r.add_result("seed", std::to_string(seed));
    const auto start = std::chrono::steady_clock::now();
    std::vector<VerificationReport> again;
    for (int id = 1; id <= 8; ++id) again.push_back(run(id, seed));
    const auto second = structured(again);
    r.timings.emplace_back("total", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    r.add_result("bytes", std::to_string(second.size()));
    std::string residual;
    if (second != reference) {
        std::istringstream a(reference), b(second);
        std::string la, lb;
        int line = 1;
        while (true) {
            const bool ga = static_cast<bool>(std::getline(a, la));
            const bool gb = static_cast<bool>(std::getline(b, lb));
            if (!ga || !gb || la != lb) {
                residual = "line " + std::to_string(line) + ": '" + (ga ? la : "<end>") + "' vs '" + (gb ? lb : "<end>") + "'";
                break;
            }
            ++line;
        }
    }
    r.add_check("structured_reports_identical", second == reference, residual);
    return r;
}

std::vector<VerificationReport> run_all(std::uint64_t seed) {
    std::vector<VerificationReport> out;
    for (int id = 1; id <= 8; ++id) out.push_back(run(id, seed));
    out.push_back(determinism(seed, structured(out)));
    return out;
}

} // namespace lpg::acceptance
