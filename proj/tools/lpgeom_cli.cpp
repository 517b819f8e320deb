// lpgeom command-line front end. Talks to the library only through lpgeom.h.
#include "lpgeom/lpgeom.h"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

namespace {

constexpr int kPass = 0;
constexpr int kFailed = 1;
constexpr int kInputError = 2;

struct Options {
    unsigned n = 0;
    std::string format = "text";
    uint64_t seed = lpg_accept_default_seed();
    std::string at;
    int criterion = 0;
};

// Thrown after a message has been printed.
struct InputError {};

[[noreturn]] void fail(const std::string& what) {
    std::cerr << "lpgeom: " << what << "\n";
    throw InputError{};
}

void check(lpg_status s, const std::string& context) {
    if (s != LPG_OK) fail(context + ": " + lpg_status_name(s) + ": " + lpg_last_error());
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    std::string s = ss.str();
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    return s;
}

bool is_file(const std::string& arg) {
    std::error_code ec;
    return std::filesystem::is_regular_file(arg, ec);
}

void warn_both(const std::string& arg) {
    std::cerr << "lpgeom: warning: '" << arg << "' names a file but also parses inline; using the inline value\n";
}

// Inline text or a file path; inline wins when both apply.
std::string resolve_text(const std::string& arg, const std::function<bool(const std::string&)>& valid) {
    const bool inline_ok = valid(arg);
    if (is_file(arg)) {
        if (inline_ok) {
            warn_both(arg);
            return arg;
        }
        return read_text(arg);
    }
    return arg;
}

struct Problem {
    lpg_problem* p = nullptr;
    Problem() = default;
    Problem(const Problem&) = delete;
    Problem& operator=(const Problem&) = delete;
    ~Problem() { lpg_problem_free(p); }
};

void load_problem(const std::string& arg, Problem& out) {
    lpg_problem* inline_p = nullptr;
    const lpg_status inline_status = lpg_problem_load_text(arg.c_str(), 1, &inline_p);
    const std::string inline_error = lpg_last_error();
    if (is_file(arg)) {
        if (inline_status == LPG_OK) {
            warn_both(arg);
            out.p = inline_p;
            return;
        }
        check(lpg_problem_load_file(arg.c_str(), &out.p), arg);
        return;
    }
    if (inline_status != LPG_OK)
        fail("'" + arg + "' is not a file and does not parse inline: " + lpg_status_name(inline_status) + ": " +
             inline_error);
    out.p = inline_p;
}

lpg_format output_format(const Options& o) {
    return o.format == "structured" ? LPG_FORMAT_STRUCTURED : LPG_FORMAT_TEXT;
}

int emit(lpg_report* report, const Options& o) {
    char* text = nullptr;
    const lpg_status s = lpg_report_render(report, output_format(o), &text);
    const int passed = lpg_report_passed(report);
    lpg_report_free(report);
    check(s, "render");
    std::fputs(text, stdout);
    lpg_string_free(text);
    return passed ? kPass : kFailed;
}

int run_report(const std::function<lpg_status(lpg_report**)>& call, const std::string& context, const Options& o) {
    lpg_report* report = nullptr;
    check(call(&report), context);
    return emit(report, o);
}

unsigned require_n(const Options& o, const char* command) {
    if (o.n == 0) fail(std::string(command) + " needs --n N with N >= 1");
    return o.n;
}

int accept(const Options& o) {
    if (o.criterion != 0) {
        return run_report([&](lpg_report** r) { return lpg_accept(o.criterion, o.seed, r); }, "accept", o);
    }
    lpg_report* reports[9] = {};
    check(lpg_accept_all(o.seed, reports), "accept");
    int failed = 0;
    for (lpg_report* r : reports) {
        failed += !lpg_report_passed(r);
        if (o.format == "structured") {
            char* text = nullptr;
            const lpg_status s = lpg_report_render(r, LPG_FORMAT_STRUCTURED, &text);
            if (s == LPG_OK) std::fputs(text, stdout);
            lpg_string_free(text);
        } else {
            std::printf("%s %s %.3f s\n", lpg_report_passed(r) ? "PASS" : "FAIL", lpg_report_subject(r),
                        lpg_report_seconds(r));
            if (!lpg_report_passed(r)) {
                char* text = nullptr;
                if (lpg_report_render(r, LPG_FORMAT_TEXT, &text) == LPG_OK) std::fputs(text, stdout);
                lpg_string_free(text);
            }
        }
        lpg_report_free(r);
    }
    return failed ? kFailed : kPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of Legendrian path geometry constructions."};
    app.name("lpgeom");
    app.require_subcommand(1);
    app.fallthrough();

    Options o;
    app.add_option("--n", o.n, "dimension n (>= 1)");
    app.add_option("--format", o.format, "report format")->check(CLI::IsMember({"text", "structured"}));
    app.add_option("--seed", o.seed, "seed for randomized checks");

    std::string a1, a2, a3;
    std::function<int()> action;

    auto one_doc = [&](const char* name, const char* help, const char* what,
                       lpg_status (*fn)(const lpg_problem*, lpg_report**)) {
        auto* cmd = app.add_subcommand(name, help);
        cmd->add_option(what, a1, "inline document (';' separates lines) or file")->required();
        cmd->callback([&, name, fn] {
            action = [&, name, fn] {
                Problem p;
                load_problem(a1, p);
                return run_report([&](lpg_report** r) { return fn(p.p, r); }, name, o);
            };
        });
    };

    one_doc("frobenius", "Frobenius test of a path system", "system", lpg_frobenius);
    one_doc("symdiff", "symmetric differential of a quadric family", "family", lpg_symdiff);
    one_doc("lagrangian", "is a quadric (constant coefficients) or plane Lagrangian", "input", lpg_lagrangian);
    one_doc("curvature", "curvature and Bianchi identity of an sp-valued form or blocks", "phi", lpg_curvature);
    one_doc("mc", "Maurer-Cartan form of a symplectic matrix", "g", lpg_maurer_cartan);
    one_doc("identities", "curvature identities of connection blocks", "phi", lpg_identities);
    one_doc("normalize-torsion", "first torsion normalization", "T", lpg_normalize_torsion);
    one_doc("normalize-p", "second normalization", "P", lpg_normalize_p);

    auto function_arg = [&](const std::string& arg) {
        return resolve_text(arg, [](const std::string& s) { return lpg_function_valid(s.c_str()) != 0; });
    };

    auto* osc = app.add_subcommand("osculate", "osculating quadric of u = f(x) at a point");
    osc->add_option("f", a1, "function of x1..xn, inline or file")->required();
    osc->add_option("--at", o.at, "point, e.g. 1,2/3 (default: origin)");
    osc->callback([&] {
        action = [&] {
            const std::string f = function_arg(a1);
            return run_report(
                [&](lpg_report** r) { return lpg_osculate(f.c_str(), o.at.empty() ? nullptr : o.at.c_str(), r); },
                "osculate", o);
        };
    });

    auto* fam = app.add_subcommand("family", "osculating family of f; the report loads as a quadric family");
    fam->add_option("f", a1, "function of x1..xn, inline or file")->required();
    fam->callback([&] {
        action = [&] {
            const std::string f = function_arg(a1);
            return run_report([&](lpg_report** r) { return lpg_family(f.c_str(), r); }, "family", o);
        };
    });

    auto family_and_vector = [&](const char* name, const char* help, const char* vec,
                                 lpg_status (*fn)(const lpg_problem*, const char*, lpg_report**)) {
        auto* cmd = app.add_subcommand(name, help);
        cmd->add_option("family", a1, "quadric family document, inline or file")->required();
        cmd->add_option(vec, a2, "[e1, ..., en] on the family parameters, 'identity', or a file")->required();
        cmd->callback([&, name, fn] {
            action = [&, name, fn] {
                Problem p;
                load_problem(a1, p);
                const std::string v =
                    resolve_text(a2, [&](const std::string& s) { return lpg_vector_valid(p.p, s.c_str()) != 0; });
                return run_report([&](lpg_report** r) { return fn(p.p, v.c_str(), r); }, name, o);
            };
        });
    };
    family_and_vector("nullcheck", "null-vector condition for X", "X", lpg_nullcheck);
    family_and_vector("developable", "developable hypersurface from a family and V", "V", lpg_developable);

    auto* flat = app.add_subcommand("flat", "flat model");
    flat->require_subcommand(1);
    flat->add_subcommand("verify", "chart identity, contact condition and generic incidence")->callback([&] {
        action = [&] {
            const unsigned n = require_n(o, "flat verify");
            return run_report([&](lpg_report** r) { return lpg_flat_verify(n, r); }, "flat verify", o);
        };
    });

    auto* rep = app.add_subcommand("rep", "sp(n) representations");
    rep->require_subcommand(1);
    auto* dims = rep->add_subcommand("dims", "Weyl dimensions of the fundamentals or of a label");
    dims->add_option("label", a1, "highest weight, e.g. 2,1");
    dims->callback([&] {
        action = [&] {
            const unsigned n = require_n(o, "rep dims");
            return run_report([&](lpg_report** r) { return lpg_rep_dims(n, a1.empty() ? nullptr : a1.c_str(), r); },
                              "rep dims", o);
        };
    });
    auto* dec = rep->add_subcommand("decompose", "tensor product of two labels");
    dec->add_option("a", a2, "first label")->required();
    dec->add_option("b", a3, "second label")->required();
    dec->callback([&] {
        action = [&] {
            const unsigned n = require_n(o, "rep decompose");
            return run_report([&](lpg_report** r) { return lpg_rep_decompose(n, a2.c_str(), a3.c_str(), r); },
                              "rep decompose", o);
        };
    });
    rep->add_subcommand("verify", "stated decompositions and the V-piece projector")->callback([&] {
        action = [&] {
            const unsigned n = require_n(o, "rep verify");
            return run_report([&](lpg_report** r) { return lpg_rep_verify(n, o.seed, r); }, "rep verify", o);
        };
    });

    app.add_subcommand("lemma-audit", "minimal SO(n+1) representation dimensions")->callback([&] {
        action = [&] {
            const unsigned n = require_n(o, "lemma-audit");
            return run_report([&](lpg_report** r) { return lpg_lemma_audit(n, r); }, "lemma-audit", o);
        };
    });

    auto* acc = app.add_subcommand("accept", "acceptance criteria 1-9");
    acc->add_option("--criterion", o.criterion, "run one criterion (1-8)")->check(CLI::Range(1, 8));
    acc->callback([&] { action = [&] { return accept(o); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        return action();
    } catch (const InputError&) {
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "lpgeom: " << e.what() << "\n";
        return kInputError;
    }
}
