#include <doctest.h>

#include "lpgeom/lpgeom.h"

#include <string>

namespace {

std::string render(lpg_report* r, lpg_format f) {
    char* text = nullptr;
    REQUIRE(lpg_report_render(r, f, &text) == LPG_OK);
    std::string s = text;
    lpg_string_free(text);
    return s;
}

} // namespace

TEST_CASE("inline documents and verdicts") {
    lpg_problem* p = nullptr;
    REQUIRE(lpg_problem_load_text("format_version = 1; n = 2; F[1][1][1] = x2", 1, &p) == LPG_OK);
    CHECK(std::string(lpg_problem_kind(p)) == "path_system");
    lpg_report* r = nullptr;
    REQUIRE(lpg_frobenius(p, &r) == LPG_OK);
    CHECK(lpg_report_passed(r) == 0);
    CHECK(lpg_report_check_count(r) == 6);
    CHECK(render(r, LPG_FORMAT_STRUCTURED).find("check[1].residual = (d(x1) /\\ d(x2))") != std::string::npos);
    lpg_report_free(r);

    // Wrong document kind for the command.
    r = nullptr;
    CHECK(lpg_identities(p, &r) == LPG_ERR_INVALID_ARGUMENT);
    CHECK(r == nullptr);
    CHECK(std::string(lpg_last_error()).find("expected a blocks document, got path_system") != std::string::npos);
    lpg_problem_free(p);
}

TEST_CASE("error codes") {
    lpg_problem* p = nullptr;
    CHECK(lpg_problem_load_text("n = 2", 1, &p) == LPG_ERR_PARSE);
    CHECK(p == nullptr);
    CHECK(lpg_problem_load_file("/nonexistent/x.lpg", &p) == LPG_ERR_IO);
    CHECK(lpg_problem_load_text("format_version = 1; kind = quadric_family; n = 2; params = [t1, t2]; "
                                "A[1][2] = t1; A[2][1] = t2",
                                1, &p) == LPG_ERR_INVALID_ARGUMENT);
    lpg_report* r = nullptr;
    CHECK(lpg_osculate("x1 / 0", nullptr, &r) == LPG_ERR_DIVISION_BY_ZERO);
    CHECK(lpg_osculate("x1 + y", nullptr, &r) == LPG_ERR_PARSE);
    CHECK(lpg_flat_verify(0, &r) == LPG_ERR_INVALID_ARGUMENT);
    CHECK(lpg_accept(9, 1, &r) == LPG_ERR_INVALID_ARGUMENT);
    CHECK(lpg_frobenius(nullptr, &r) == LPG_ERR_INVALID_ARGUMENT);
    CHECK(lpg_flat_verify(1, nullptr) == LPG_ERR_INVALID_ARGUMENT);
    CHECK(std::string(lpg_status_name(LPG_ERR_CHART_MISMATCH)) == "chart mismatch");
}

TEST_CASE("validators used for inline-versus-file resolution") {
    CHECK(lpg_function_valid("x1*x2 + 1/3"));
    CHECK_FALSE(lpg_function_valid("problems/f.txt"));
    lpg_report* r = nullptr;
    REQUIRE(lpg_family("x1*x1*x2", &r) == LPG_OK);
    const std::string doc = render(r, LPG_FORMAT_STRUCTURED);
    lpg_report_free(r);
    lpg_problem* fam = nullptr;
    REQUIRE(lpg_problem_load_text(doc.c_str(), 0, &fam) == LPG_OK);
    CHECK(std::string(lpg_problem_kind(fam)) == "quadric_family");
    CHECK(lpg_vector_valid(fam, "identity"));
    CHECK(lpg_vector_valid(fam, "[x2, 1]"));
    CHECK_FALSE(lpg_vector_valid(fam, "[y, 1]"));
    REQUIRE(lpg_developable(fam, "identity", &r) == LPG_OK);
    CHECK(lpg_report_passed(r));
    lpg_report_free(r);
    lpg_problem_free(fam);
}

TEST_CASE("acceptance through the C interface is deterministic") {
    lpg_report *a = nullptr, *b = nullptr;
    REQUIRE(lpg_accept(3, 5, &a) == LPG_OK);
    REQUIRE(lpg_accept(3, 5, &b) == LPG_OK);
    CHECK(lpg_report_passed(a));
    CHECK(render(a, LPG_FORMAT_STRUCTURED) == render(b, LPG_FORMAT_STRUCTURED));
    lpg_report_free(a);
    lpg_report_free(b);
}
