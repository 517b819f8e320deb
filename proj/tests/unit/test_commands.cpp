#include <doctest.h>

#include "lpgeom/commands.hpp"
#include "lpgeom/error.hpp"
#include "lpgeom/parser.hpp"

using namespace lpg;
using namespace lpg::commands;

namespace {

const io::CheckResult* find_check(const io::VerificationReport& r, const std::string& name) {
    for (const auto& c : r.checks)
        if (c.name == name) return &c;
    return nullptr;
}

std::string result(const io::VerificationReport& r, const std::string& key) {
    for (const auto& [k, v] : r.results)
        if (k == key) return v;
    return {};
}

io::Problem load(const std::string& text) { return io::load_problem(io::Document::parse(text, true)); }

} // namespace

TEST_CASE("input helpers") {
    CHECK(parse_function("x1*x3 + 1").chart()->dimension() == 3);
    CHECK(parse_function("5").chart()->dimension() == 1);
    CHECK(parse_function("x1", 2).chart()->name() == "base2");
    auto c = parse_function("x1 + x2").chart();
    CHECK(parse_vector("identity", c).size() == 2);
    CHECK(parse_vector("[x2, 1/2]", c)[1] == Expression(Rational(1, 2)));
    CHECK(parse_point("[1, -2/3]") == std::vector<Rational>{1, Rational(-2, 3)});
    CHECK_THROWS_AS(parse_point("x1"), Error);
}

TEST_CASE("frobenius command") {
    auto flat = frobenius(std::get<jets::PathSystem>(load("format_version = 1; n = 2")));
    CHECK(flat.pass());
    auto bad = frobenius(std::get<jets::PathSystem>(load("format_version = 1; n = 2; F[1][1][1] = x2")));
    CHECK_FALSE(bad.pass());
    const auto* c = find_check(bad, "frobenius.Theta11");
    REQUIRE(c);
    CHECK_FALSE(c->pass);
    CHECK(c->residual.find("d(x1) /\\ d(x2)") != std::string::npos);
}

TEST_CASE("quadric commands") {
    const auto f = parse_function("x1*x1*x2 + 3*x2 - x1*x2*x2*x2");
    auto osc = osculate(f, {1, 2});
    CHECK(osc.pass());
    CHECK_THROWS_AS(osculate(f, {1}), Error);

    auto fam_report = family(f);
    CHECK(fam_report.pass());
    // The family written by `family` reads back and passes the other commands.
    auto fam = std::get<quadric::QuadricFamily>(io::load_problem(io::emit_report(fam_report, io::ReportFormat::Structured)));
    const auto X = parse_vector("identity", fam.parameters);
    CHECK(nullcheck(fam, X).pass());
    CHECK(symdiff(fam).pass());
    auto dev = developable(fam, X);
    CHECK(dev.pass());
    CHECK(result(dev, "u") == f.rebind(fam.parameters).to_string());

    // A wrong null vector fails row by row and the developable reports why.
    std::vector<Expression> zero(2, Expression(0));
    CHECK_FALSE(nullcheck(fam, zero).pass());
    auto bad_dev = developable(fam, zero);
    CHECK_FALSE(bad_dev.pass());
    CHECK_FALSE(bad_dev.checks.front().residual.empty());

    // A one-parameter family with non-vanishing symmetric differential.
    auto line = std::get<quadric::QuadricFamily>(
        load("format_version = 1; kind = quadric_family; n = 1; params = [t]; a0 = t; a[1] = t"));
    CHECK_FALSE(symdiff(line).pass());
}

TEST_CASE("flat model commands") {
    for (unsigned n = 1; n <= 3; ++n) CHECK(flat_verify(n).pass());
    io::PlaneProblem lag{1, {{1, 0, 0, 0}, {0, 1, 0, 0}}};
    CHECK(lagrangian(lag).pass());
    io::PlaneProblem sym{1, {{1, 0, 0, 0}, {0, 0, 1, 0}}};
    auto r = lagrangian(sym);
    CHECK_FALSE(r.pass());
    CHECK(r.checks.front().residual.find("varpi(b[1],b[2]) = 1") != std::string::npos);
    auto q = std::get<quadric::QuadricFamily>(
        load("format_version = 1; kind = quadric_family; n = 2; chart = point; a0 = 1; A[1][2] = 3; A[2][1] = 3"));
    CHECK(lagrangian(q).pass());
}

TEST_CASE("cartan commands") {
    auto flat = std::get<io::BlocksProblem>(load("format_version = 1; kind = blocks; n = 2; preset = flat"));
    CHECK(identities(flat).pass());
    CHECK(commands::curvature(flat).pass());
    auto bent = std::get<io::BlocksProblem>(
        load("format_version = 1; kind = blocks; n = 2; preset = flat; gamma[1][1] = x1*d(x1)"));
    auto id = identities(bent);
    CHECK_FALSE(id.pass());
    CHECK(find_check(id, "sp_membership")->pass);

    Rng rng(5);
    auto chart = make_chart("ab", {"a", "b"});
    CHECK(maurer_cartan(io::MatrixProblem{cartan::random_symplectic(rng, chart, 1), chart}).pass());
    auto not_sp = maurer_cartan(io::MatrixProblem{identity_matrix(4) + identity_matrix(4), chart});
    CHECK_FALSE(not_sp.pass());
    CHECK(not_sp.checks.size() == 1);
}

TEST_CASE("torsion commands") {
    Rng rng(9);
    for (unsigned n = 2; n <= 3; ++n) {
        auto t = normalize_torsion(torsion::random_torsion(rng, n));
        CHECK(t.pass());
        CHECK(t.checks.size() == 6);
        CHECK(result(t, "free_parameters") == "[p]");
        auto p = normalize_p(torsion::random_p_tensor(rng, n));
        CHECK(p.pass());
        CHECK(p.checks.size() == 4);
    }
}

TEST_CASE("representation commands") {
    CHECK(rep_dims(2).pass());
    CHECK(result(rep_dims(2, "2,1"), "sp(2)[2,1]") == "35");
    CHECK_THROWS_AS(rep_dims(2, "1"), Error);
    auto d = rep_decompose(2, "2,0", "0,1");
    CHECK(d.pass());
    CHECK(result(d, "ledger") == "50 = 35+10+5");
    for (unsigned n = 2; n <= 3; ++n) CHECK(rep_verify(n, 1).pass());
    auto audit = lemma_audit(4);
    CHECK(audit.pass());
    CHECK(result(audit, "next") == "10");
    CHECK(result(audit, "complement") == "3");
    auto small = lemma_audit(2);
    CHECK(small.checks.empty());
    CHECK(result(small, "applies") == "false");
}

TEST_CASE("second normalization gauge prints in lowest terms") {
    auto P = std::get<torsion::PTensor>(load("format_version = 1; kind = p_tensor; n = 2; Pj[1][1] = 2; Pj[2][2] = 5"));
    // t = -(2/n) (2 + 5) = -7.
    CHECK(result(normalize_p(P), "t") == "-7");
    CHECK(Expression(Rational(-14, 2)).to_string() == "-7");
}

TEST_CASE("residual gauge on documents with parameters") {
    auto T = std::get<torsion::TorsionTensor>(
        load("format_version = 1; kind = torsion; n = 2; parameters = [p, q]; T0t[1][1][1] = p*q"));
    auto r = normalize_torsion(T);
    CHECK(r.pass());
    CHECK(result(r, "c[1]") == "p*q");
}
