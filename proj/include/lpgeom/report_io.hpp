#pragma once

#include "lpgeom/cartan.hpp"
#include "lpgeom/contact_jets.hpp"
#include "lpgeom/quadric.hpp"
#include "lpgeom/torsion.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace lpg::io {

inline constexpr int kFormatVersion = 1;

/// Flat `key = value` document. Lines starting with '#' are comments. Keys
/// are unique; values run to the end of the line, trimmed. Every document
/// carries `format_version` at its root; parse() rejects other versions.
class Document {
public:
    Document();

    // `inline_text` also splits on ';', for documents given on a command line.
    static Document parse(std::string_view text, bool inline_text = false);

    bool has(std::string_view key) const;
    const std::string* find(std::string_view key) const;
    // Throws Format naming the key.
    const std::string& require(std::string_view key) const;
    // 0 for keys added with set().
    std::size_t line_of(std::string_view key) const;
    const std::vector<std::pair<std::string, std::string>>& entries() const noexcept { return entries_; }

    // Replaces an existing value in place; values must be single-line.
    void set(const std::string& key, const std::string& value);

    // Keys with `prefix` stripped, for documents nested under one prefix.
    Document subdocument(std::string_view prefix) const;

    std::string to_string() const;

private:
    std::vector<std::pair<std::string, std::string>> entries_;
    std::vector<std::size_t> lines_;
};

/// `name[1][2]` or `name[1,2]` -> ("name", {1, 2}); nullopt for plain keys.
std::optional<std::pair<std::string, std::vector<unsigned>>> split_indexed_key(std::string_view key);
/// `[a, b, c]` -> {"a", "b", "c"}.
std::vector<std::string> parse_list(std::string_view text);
std::string format_list(const std::vector<std::string>& items);

struct BlocksProblem {
    cartan::ConnectionBlocks blocks;
    cartan::Mode mode = cartan::Mode::Classical;
};

struct SpFormProblem {
    cartan::SpForm phi;
};

/// A (2n+2)x(2n+2) matrix of functions, e.g. a group element.
struct MatrixProblem {
    ExprMatrix g;
    ChartPtr chart;
};

/// A subspace of R^{2n+2} given by basis vectors.
struct PlaneProblem {
    unsigned n = 1;
    std::vector<std::vector<Expression>> basis;
};

using Problem = std::variant<jets::PathSystem, quadric::QuadricFamily, torsion::TorsionTensor, torsion::PTensor,
                             BlocksProblem, SpFormProblem, MatrixProblem, PlaneProblem>;

/// Document kinds: path_system (the default), quadric_family, torsion,
/// p_tensor, blocks, sp_form, matrix, plane. A structured report whose
/// `result.kind` names one of these loads as that value.
/// Throws ParseError with a line number, Format for a bad header, and the
/// owning type's error (field path in the message) for invariant violations.
Problem load_problem(const Document& doc);
Problem load_problem(std::string_view text);
Problem load_problem_file(const std::filesystem::path& path);

std::string kind_name(const Problem& problem);

Document to_document(const jets::PathSystem& system);
Document to_document(const quadric::QuadricFamily& family);
Document to_document(const torsion::TorsionTensor& T);
Document to_document(const torsion::PTensor& P);
Document to_document(const BlocksProblem& blocks);
Document to_document(const SpFormProblem& phi);
Document to_document(const MatrixProblem& g);
Document to_document(const PlaneProblem& plane);
Document to_document(const Problem& problem);

std::string emit(const Problem& problem);

// Value equality used by the round-trip checks (charts compared structurally).
bool same_problem(const Problem& a, const Problem& b);

enum class ReportFormat { Text, Structured };

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string residual;
    friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct VerificationReport {
    std::string subject;
    unsigned n = 0;
    std::string chart;
    std::vector<CheckResult> checks;
    // Computed values, printed under `result.` in insertion order.
    std::vector<std::pair<std::string, std::string>> results;
    // Seconds; rendered in the text format only.
    std::vector<std::pair<std::string, double>> timings;

    // Throws InvalidArgument for a failed check with an empty residual. A
    // passing check keeps no residual.
    void add_check(std::string name, bool pass, std::string residual = {});
    void add_result(std::string key, std::string value);
    void add_results(const Document& doc);
    bool pass() const;
};

/// Checks are listed sorted by name.
std::string emit_report(const VerificationReport& report, ReportFormat format);
/// Inverse of the structured rendering (timings are not part of it).
VerificationReport load_report(std::string_view structured);

std::string read_file(const std::filesystem::path& path);

} // namespace lpg::io
