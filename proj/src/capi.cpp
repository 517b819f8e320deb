#include "lpgeom/lpgeom.h"

#include "lpgeom/acceptance.hpp"
#include "lpgeom/commands.hpp"
#include "lpgeom/error.hpp"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

struct lpg_problem {
    lpg::io::Problem value;
    std::string kind;
};

struct lpg_report {
    lpg::io::VerificationReport value;
};

namespace {

thread_local std::string last_error;

lpg_status status_of(lpg::ErrorKind kind) {
    using lpg::ErrorKind;
    switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::UnknownSymbol:
    case ErrorKind::Format: return LPG_ERR_PARSE;
    case ErrorKind::DivisionByZero: return LPG_ERR_DIVISION_BY_ZERO;
    case ErrorKind::ChartMismatch: return LPG_ERR_CHART_MISMATCH;
    case ErrorKind::Precondition: return LPG_ERR_PRECONDITION;
    case ErrorKind::Io: return LPG_ERR_IO;
    case ErrorKind::InvalidArgument:
    case ErrorKind::SymmetryViolation:
    case ErrorKind::Degenerate: return LPG_ERR_INVALID_ARGUMENT;
    }
    return LPG_ERR_INTERNAL;
}

template <class F>
lpg_status guarded(F&& body) {
    try {
        last_error.clear();
        body();
        return LPG_OK;
    } catch (const lpg::Error& e) {
        last_error = e.what();
        return status_of(e.kind());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return LPG_ERR_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return LPG_ERR_INTERNAL;
    }
}

void require_out(const void* out) {
    if (!out) throw lpg::Error(lpg::ErrorKind::InvalidArgument, "null output pointer");
}

void require_text(const char* text, const char* what) {
    if (!text) throw lpg::Error(lpg::ErrorKind::InvalidArgument, std::string("missing ") + what);
}

template <class T>
const T& expect(const lpg_problem* p, const char* kind) {
    if (!p) throw lpg::Error(lpg::ErrorKind::InvalidArgument, "null problem");
    const T* v = std::get_if<T>(&p->value);
    if (!v)
        throw lpg::Error(lpg::ErrorKind::InvalidArgument,
                         std::string("expected a ") + kind + " document, got " + p->kind);
    return *v;
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

lpg_problem* wrap(lpg::io::Problem p) {
    auto* out = new lpg_problem{std::move(p), {}};
    out->kind = lpg::io::kind_name(out->value);
    return out;
}

template <class F>
lpg_status report_call(lpg_report** out, F&& make) {
    return guarded([&] {
        require_out(out);
        *out = nullptr;
        const auto start = std::chrono::steady_clock::now();
        auto report = std::make_unique<lpg_report>(lpg_report{make()});
        if (report->value.timings.empty())
            report->value.timings.emplace_back(
                "total", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
        *out = report.release();
    });
}

} // namespace

extern "C" {

const char* lpg_last_error(void) { return last_error.c_str(); }

const char* lpg_status_name(lpg_status status) {
    switch (status) {
    case LPG_OK: return "ok";
    case LPG_ERR_PARSE: return "parse error";
    case LPG_ERR_INVALID_ARGUMENT: return "invalid argument";
    case LPG_ERR_CHART_MISMATCH: return "chart mismatch";
    case LPG_ERR_DIVISION_BY_ZERO: return "division by zero";
    case LPG_ERR_PRECONDITION: return "precondition failed";
    case LPG_ERR_IO: return "i/o error";
    case LPG_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

int lpg_format_version(void) { return lpg::io::kFormatVersion; }

lpg_status lpg_problem_load_text(const char* text, int inline_text, lpg_problem** out) {
    return guarded([&] {
        require_out(out);
        *out = nullptr;
        require_text(text, "document text");
        *out = wrap(lpg::io::load_problem(lpg::io::Document::parse(text, inline_text != 0)));
    });
}

lpg_status lpg_problem_load_file(const char* path, lpg_problem** out) {
    return guarded([&] {
        require_out(out);
        *out = nullptr;
        require_text(path, "path");
        *out = wrap(lpg::io::load_problem_file(path));
    });
}

const char* lpg_problem_kind(const lpg_problem* problem) { return problem ? problem->kind.c_str() : ""; }

lpg_status lpg_problem_emit(const lpg_problem* problem, char** out) {
    return guarded([&] {
        require_out(out);
        *out = nullptr;
        if (!problem) throw lpg::Error(lpg::ErrorKind::InvalidArgument, "null problem");
        *out = copy_string(lpg::io::emit(problem->value));
    });
}

void lpg_problem_free(lpg_problem* problem) { delete problem; }

int lpg_function_valid(const char* text) {
    if (!text) return 0;
    try {
        lpg::commands::parse_function(text);
        return 1;
    } catch (const std::exception&) {
        return 0;
    }
}

int lpg_vector_valid(const lpg_problem* family, const char* text) {
    if (!text) return 0;
    try {
        const auto& fam = expect<lpg::quadric::QuadricFamily>(family, "quadric_family");
        lpg::commands::parse_vector(text, fam.parameters);
        return 1;
    } catch (const std::exception&) {
        return 0;
    }
}

lpg_status lpg_frobenius(const lpg_problem* system, lpg_report** out) {
    return report_call(out, [&] {
        return lpg::commands::frobenius(expect<lpg::jets::PathSystem>(system, "path_system"));
    });
}

lpg_status lpg_osculate(const char* f, const char* at, lpg_report** out) {
    return report_call(out, [&] {
        require_text(f, "function");
        const auto fn = lpg::commands::parse_function(f);
        return lpg::commands::osculate(fn, at ? lpg::commands::parse_point(at) : std::vector<lpg::Rational>{});
    });
}

lpg_status lpg_family(const char* f, lpg_report** out) {
    return report_call(out, [&] {
        require_text(f, "function");
        return lpg::commands::family(lpg::commands::parse_function(f));
    });
}

lpg_status lpg_nullcheck(const lpg_problem* family, const char* X, lpg_report** out) {
    return report_call(out, [&] {
        const auto& fam = expect<lpg::quadric::QuadricFamily>(family, "quadric_family");
        require_text(X, "vector X");
        return lpg::commands::nullcheck(fam, lpg::commands::parse_vector(X, fam.parameters));
    });
}

lpg_status lpg_symdiff(const lpg_problem* family, lpg_report** out) {
    return report_call(out, [&] {
        return lpg::commands::symdiff(expect<lpg::quadric::QuadricFamily>(family, "quadric_family"));
    });
}

lpg_status lpg_developable(const lpg_problem* family, const char* V, lpg_report** out) {
    return report_call(out, [&] {
        const auto& fam = expect<lpg::quadric::QuadricFamily>(family, "quadric_family");
        require_text(V, "vector V");
        return lpg::commands::developable(fam, lpg::commands::parse_vector(V, fam.parameters));
    });
}

lpg_status lpg_flat_verify(unsigned n, lpg_report** out) {
    return report_call(out, [&] { return lpg::commands::flat_verify(n); });
}

lpg_status lpg_lagrangian(const lpg_problem* problem, lpg_report** out) {
    return report_call(out, [&] {
        if (problem && std::holds_alternative<lpg::io::PlaneProblem>(problem->value))
            return lpg::commands::lagrangian(std::get<lpg::io::PlaneProblem>(problem->value));
        return lpg::commands::lagrangian(expect<lpg::quadric::QuadricFamily>(problem, "quadric_family or plane"));
    });
}

lpg_status lpg_curvature(const lpg_problem* problem, lpg_report** out) {
    return report_call(out, [&] {
        if (problem && std::holds_alternative<lpg::io::BlocksProblem>(problem->value))
            return lpg::commands::curvature(std::get<lpg::io::BlocksProblem>(problem->value));
        return lpg::commands::curvature(expect<lpg::io::SpFormProblem>(problem, "sp_form or blocks").phi);
    });
}

lpg_status lpg_maurer_cartan(const lpg_problem* matrix, lpg_report** out) {
    return report_call(out, [&] {
        return lpg::commands::maurer_cartan(expect<lpg::io::MatrixProblem>(matrix, "matrix"));
    });
}

lpg_status lpg_identities(const lpg_problem* blocks, lpg_report** out) {
    return report_call(out, [&] {
        return lpg::commands::identities(expect<lpg::io::BlocksProblem>(blocks, "blocks"));
    });
}

lpg_status lpg_normalize_torsion(const lpg_problem* torsion, lpg_report** out) {
    return report_call(out, [&] {
        return lpg::commands::normalize_torsion(expect<lpg::torsion::TorsionTensor>(torsion, "torsion"));
    });
}

lpg_status lpg_normalize_p(const lpg_problem* p_tensor, lpg_report** out) {
    return report_call(out, [&] {
        return lpg::commands::normalize_p(expect<lpg::torsion::PTensor>(p_tensor, "p_tensor"));
    });
}

lpg_status lpg_rep_dims(unsigned n, const char* label, lpg_report** out) {
    return report_call(out, [&] { return lpg::commands::rep_dims(n, label ? label : ""); });
}

lpg_status lpg_rep_decompose(unsigned n, const char* a, const char* b, lpg_report** out) {
    return report_call(out, [&] {
        require_text(a, "first label");
        require_text(b, "second label");
        return lpg::commands::rep_decompose(n, a, b);
    });
}

lpg_status lpg_rep_verify(unsigned n, uint64_t seed, lpg_report** out) {
    return report_call(out, [&] { return lpg::commands::rep_verify(n, seed); });
}

lpg_status lpg_lemma_audit(unsigned n, lpg_report** out) {
    return report_call(out, [&] { return lpg::commands::lemma_audit(n); });
}

uint64_t lpg_accept_default_seed(void) { return lpg::acceptance::kDefaultSeed; }

lpg_status lpg_accept(int criterion, uint64_t seed, lpg_report** out) {
    return report_call(out, [&] { return lpg::acceptance::run(criterion, seed); });
}

lpg_status lpg_accept_all(uint64_t seed, lpg_report* out[9]) {
    return guarded([&] {
        require_out(out);
        for (int i = 0; i < 9; ++i) out[i] = nullptr;
        auto reports = lpg::acceptance::run_all(seed);
        for (int i = 0; i < 9; ++i) out[i] = new lpg_report{std::move(reports[static_cast<std::size_t>(i)])};
    });
}

int lpg_report_passed(const lpg_report* report) { return report && report->value.pass() ? 1 : 0; }

const char* lpg_report_subject(const lpg_report* report) { return report ? report->value.subject.c_str() : ""; }

double lpg_report_seconds(const lpg_report* report) {
    if (!report) return 0.0;
    for (const auto& [name, s] : report->value.timings)
        if (name == "total") return s;
    return 0.0;
}

size_t lpg_report_check_count(const lpg_report* report) { return report ? report->value.checks.size() : 0; }

lpg_status lpg_report_render(const lpg_report* report, lpg_format format, char** out) {
    return guarded([&] {
        require_out(out);
        *out = nullptr;
        if (!report) throw lpg::Error(lpg::ErrorKind::InvalidArgument, "null report");
        *out = copy_string(lpg::io::emit_report(report->value, format == LPG_FORMAT_STRUCTURED
                                                                   ? lpg::io::ReportFormat::Structured
                                                                   : lpg::io::ReportFormat::Text));
    });
}

void lpg_report_free(lpg_report* report) { delete report; }

void lpg_string_free(char* text) { std::free(text); }

} // extern "C"
