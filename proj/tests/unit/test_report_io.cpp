#include <doctest.h>

#include "lpgeom/error.hpp"
#include "lpgeom/parser.hpp"
#include "lpgeom/report_io.hpp"

using namespace lpg;
using namespace lpg::io;

namespace {

void check_round_trip(const Problem& p) {
    const std::string text = emit(p);
    INFO(text);
    const Problem back = load_problem(text);
    CHECK(same_problem(p, back));
    CHECK(emit(back) == text);
}

std::string error_text(const std::string& doc) {
    try {
        load_problem(doc);
    } catch (const Error& e) {
        return e.what();
    }
    return {};
}

} // namespace

TEST_CASE("document parsing") {
    auto doc = Document::parse("# comment\nformat_version = 1\n\nkind = plane\n  n =  2  \nexpr = x1 + 1\n");
    CHECK(doc.require("n") == "2");
    CHECK(doc.require("expr") == "x1 + 1");
    CHECK(doc.line_of("kind") == 4);
    CHECK(Document::parse("format_version = 1; n = 3", true).require("n") == "3");

    CHECK_THROWS_AS(Document::parse("n = 2\n"), Error);
    CHECK_THROWS_AS(Document::parse("format_version = 2\nn = 2\n"), Error);
    try {
        Document::parse("format_version = 1\nn = 2\nn = 3\n");
        FAIL("duplicate accepted");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(Document::parse("format_version = 1\nnonsense\n"), ParseError);

    auto split = split_indexed_key("T0t[1,2][3]");
    REQUIRE(split);
    CHECK(split->first == "T0t");
    CHECK(split->second == std::vector<unsigned>{1, 2, 3});
    CHECK_FALSE(split_indexed_key("plain"));
    CHECK_FALSE(split_indexed_key("check[1].name"));
    CHECK(parse_list("[a, b2 ,c]") == std::vector<std::string>{"a", "b2", "c"});
    CHECK(parse_list("[]").empty());
    CHECK_THROWS_AS(parse_list("a, b"), Error);
}

TEST_CASE("a path system document with only n is the zero system") {
    auto p = load_problem("format_version = 1\nn = 2\n");
    REQUIRE(std::holds_alternative<jets::PathSystem>(p));
    const auto& sys = std::get<jets::PathSystem>(p);
    for (unsigned i = 1; i <= 2; ++i)
        for (unsigned j = 1; j <= 2; ++j)
            for (unsigned k = 1; k <= 2; ++k) CHECK(sys.F(i, j, k).is_zero());
}

TEST_CASE("loader errors name the field") {
    const std::string asym = error_text(
        "format_version = 1\nkind = quadric_family\nn = 2\nparams = [t1, t2]\nA[1][2] = t1\nA[2][1] = t2\n");
    CHECK(asym.find("A[1][2]") != std::string::npos);
    CHECK(asym.find("A[2][1]") != std::string::npos);

    CHECK(error_text("format_version = 1\nn = 2\nF[1][1][3] = 1\n").find("F[1][1][3] (line 3)") != std::string::npos);
    CHECK(error_text("format_version = 1\nn = 2\nG = 1\n").find("unknown key G") != std::string::npos);
    CHECK(error_text("format_version = 1\nn = 2\nF[1][1][1] = y7\n").find("F[1][1][1]") != std::string::npos);
    CHECK(error_text("format_version = 1\nn = 2\nF[1][2][1] = x1\nF[2][1][1] = x2\n").find("F[2][1][1]") !=
          std::string::npos);
    CHECK(error_text("format_version = 1\nkind = torsion\nn = 2\nT0t[1][2][1] = 1\n").find("T0t[2][1][1]") !=
          std::string::npos);
    CHECK(error_text("format_version = 1\nkind = nothing\nn = 2\n").find("unknown document kind") !=
          std::string::npos);
    CHECK(error_text("format_version = 1\nn = 0\n").find("positive integer") != std::string::npos);
    CHECK_THROWS_AS(load_problem_file("/nonexistent/problem.lpg"), Error);
}

TEST_CASE("property: emit then load is the identity") {
    Rng rng(31);
    for (unsigned n = 1; n <= 3; ++n) {
        // Path systems, with and without parameters.
        auto generic = jets::PathSystem::generic(n);
        check_round_trip(generic);
        jets::PathSystem sys{jets::JetChart(n)};
        for (int t = 0; t < 4; ++t) {
            const auto i = static_cast<unsigned>(rng.range(1, n)), j = static_cast<unsigned>(rng.range(1, n)),
                       k = static_cast<unsigned>(rng.range(1, n));
            sys.set_F(i, j, k, random_polynomial(rng, sys.jet().chart(), sys.jet().chart()->symbol_count(), 2, 3));
        }
        check_round_trip(sys);

        // Families of osculating quadrics.
        auto base = jets::JetChart(n).base_chart();
        check_round_trip(quadric::osculating_family(random_polynomial(rng, base, n, 4, 4)));

        // Connection blocks in both modes.
        io::BlocksProblem b{cartan::flat_blocks(jets::contact_ideal(generic)), cartan::Mode::Normal};
        b.blocks.gamma(0, 0) = b.blocks.gamma(0, 0) + b.blocks.theta[0] * Expression(3);
        b.blocks.rho = random_form(rng, generic.jet().chart(), 1, 1, 2);
        check_round_trip(b);
        b.mode = cartan::Mode::Classical;
        check_round_trip(b);
    }
    for (unsigned n = 2; n <= 3; ++n) {
        check_round_trip(torsion::random_torsion(rng, n));
        check_round_trip(torsion::random_p_tensor(rng, n));
        auto gauge = make_chart("coefficients", {}, {"p"});
        torsion::TorsionTensor T(n);
        T.set_t0T(0, 1, 0, 1, parse_expression("p/2 - 1", gauge));
        check_round_trip(T);
    }
    auto chart = make_chart("ab", {"a", "b"});
    check_round_trip(SpFormProblem{cartan::random_sp_form(rng, chart, 1)});
    check_round_trip(MatrixProblem{cartan::random_symplectic(rng, chart, 1), chart});
    PlaneProblem plane{1, {{1, 0, 0, 0}, {0, Rational(1, 2), 0, -3}}};
    check_round_trip(plane);
}

TEST_CASE("blocks presets and overrides") {
    auto p = load_problem("format_version = 1\nkind = blocks\nn = 2\npreset = flat\ngamma[1][1] = 3*x1*d(x2)\n");
    const auto& b = std::get<BlocksProblem>(p).blocks;
    CHECK(b.theta0.to_string() == "-p1*d(x1) - p2*d(x2) + d(u)");
    CHECK(b.gamma(0, 0).to_string() == "3*x1*d(x2)");
    CHECK(error_text("format_version = 1\nkind = blocks\nn = 2\nTheta[1][2] = d(x1)\n").find("Theta") !=
          std::string::npos);
}

TEST_CASE("report rendering") {
    VerificationReport empty;
    empty.subject = "nothing";
    const auto doc = emit_report(empty, ReportFormat::Structured);
    CHECK(doc.find("checks = 0") != std::string::npos);
    CHECK(load_report(doc).checks.empty());
    CHECK(load_report(doc).pass());

    // Frobenius failure for F111 = x2 carries the residual 2-form.
    auto sys = std::get<jets::PathSystem>(load_problem("format_version = 1\nn = 2\nF[1][1][1] = x2\n"));
    const auto fr = jets::frobenius_check(sys, jets::contact_ideal(sys));
    VerificationReport r;
    r.subject = "frobenius";
    r.n = 2;
    r.chart = "jet2";
    r.add_check("zeta", true);
    r.add_check("frobenius." + fr.generator, fr.pass, fr.residue.to_string());
    r.add_result("generator", fr.generator);
    r.timings.emplace_back("total", 0.25);
    CHECK_THROWS_AS(r.add_check("bad", false, ""), Error);

    const auto text = emit_report(r, ReportFormat::Text);
    const auto structured = emit_report(r, ReportFormat::Structured);
    CHECK(structured.find("check[1].residual = " + fr.residue.to_string()) != std::string::npos);
    CHECK(fr.residue.to_string() == "(d(x1) /\\ d(x2))");
    // Sorted by name, timings only in text.
    CHECK(structured.find("check[2].name = zeta") != std::string::npos);
    CHECK(structured.find("0.25") == std::string::npos);
    CHECK(text.find("total: 0.250 s") != std::string::npos);
    CHECK(text.find("FAIL frobenius.") != std::string::npos);
    CHECK(text.find("PASS zeta") != std::string::npos);
    CHECK(text.find("verdict: FAIL") != std::string::npos);
    CHECK(structured.find("pass = false") != std::string::npos);

    auto back = load_report(structured);
    CHECK(back.subject == r.subject);
    CHECK(back.results == r.results);
    CHECK(emit_report(back, ReportFormat::Structured) == structured);
    CHECK(emit_report(r, ReportFormat::Structured) == structured);
}

TEST_CASE("a report carrying a document loads as that document") {
    auto family = quadric::osculating_family(parse_expression("x1*x1*x2", jets::JetChart(2).base_chart()));
    VerificationReport r;
    r.subject = "family";
    r.add_results(to_document(family));
    const auto loaded = load_problem(emit_report(r, ReportFormat::Structured));
    CHECK(same_problem(loaded, Problem(family)));
    VerificationReport bare;
    bare.subject = "x";
    CHECK_THROWS_AS(load_problem(emit_report(bare, ReportFormat::Structured)), Error);
}
