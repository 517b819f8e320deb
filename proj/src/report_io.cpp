#include "lpgeom/report_io.hpp"

#include "lpgeom/error.hpp"
#include "lpgeom/parser.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace lpg::io {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::optional<unsigned> parse_unsigned(std::string_view s) {
    unsigned v = 0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc() || ptr != end || s.empty()) return std::nullopt;
    return v;
}

std::string idx_key(const std::string& name, std::initializer_list<unsigned> index) {
    std::string s = name;
    for (unsigned i : index) s += "[" + std::to_string(i) + "]";
    return s;
}

} // namespace

// ---------------------------------------------------------------- Document

Document::Document() {
    entries_.emplace_back("format_version", std::to_string(kFormatVersion));
    lines_.push_back(0);
}

Document Document::parse(std::string_view text, bool inline_text) {
    Document doc;
    doc.entries_.clear();
    doc.lines_.clear();
    std::size_t line = 0, start = 0;
    while (start <= text.size()) {
        std::size_t stop = start;
        while (stop < text.size() && text[stop] != '\n' && !(inline_text && text[stop] == ';')) ++stop;
        ++line;
        const std::string_view raw = trim(text.substr(start, stop - start));
        start = stop + 1;
        if (raw.empty() || raw.front() == '#') continue;
        const auto eq = raw.find('=');
        if (eq == std::string_view::npos) throw ParseError("expected 'key = value'", 0, line);
        const std::string key(trim(raw.substr(0, eq)));
        if (key.empty() || key.find_first_of(" \t") != std::string::npos)
            throw ParseError("malformed key '" + key + "'", 0, line);
        if (doc.has(key)) throw ParseError("duplicate key '" + key + "'", 0, line);
        doc.entries_.emplace_back(key, std::string(trim(raw.substr(eq + 1))));
        doc.lines_.push_back(line);
    }
    const std::string* version = doc.find("format_version");
    if (!version) throw Error(ErrorKind::Format, "missing format_version");
    if (*version != std::to_string(kFormatVersion))
        throw Error(ErrorKind::Format, "unsupported format_version " + *version + " (this build reads " +
                                           std::to_string(kFormatVersion) + ")");
    return doc;
}

bool Document::has(std::string_view key) const { return find(key) != nullptr; }

const std::string* Document::find(std::string_view key) const {
    for (const auto& [k, v] : entries_)
        if (k == key) return &v;
    return nullptr;
}

const std::string& Document::require(std::string_view key) const {
    if (const auto* v = find(key)) return *v;
    throw Error(ErrorKind::Format, "missing key '" + std::string(key) + "'");
}

std::size_t Document::line_of(std::string_view key) const {
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i].first == key) return lines_[i];
    return 0;
}

void Document::set(const std::string& key, const std::string& value) {
    if (value.find('\n') != std::string::npos)
        throw Error(ErrorKind::InvalidArgument, "value of '" + key + "' spans several lines");
    for (auto& [k, v] : entries_)
        if (k == key) {
            v = value;
            return;
        }
    entries_.emplace_back(key, value);
    lines_.push_back(0);
}

Document Document::subdocument(std::string_view prefix) const {
    Document out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const auto& [k, v] = entries_[i];
        if (k.size() <= prefix.size() || k.compare(0, prefix.size(), prefix) != 0) continue;
        const std::string key = k.substr(prefix.size());
        if (key == "format_version") continue;
        out.entries_.emplace_back(key, v);
        out.lines_.push_back(lines_[i]);
    }
    return out;
}

std::string Document::to_string() const {
    std::string out;
    for (const auto& [k, v] : entries_) out += k + (v.empty() ? " =\n" : " = " + v + "\n");
    return out;
}

std::optional<std::pair<std::string, std::vector<unsigned>>> split_indexed_key(std::string_view key) {
    const auto open = key.find('[');
    if (open == std::string_view::npos || open == 0 || key.back() != ']') return std::nullopt;
    std::vector<unsigned> index;
    std::string_view rest = key.substr(open);
    while (!rest.empty()) {
        if (rest.front() != '[') return std::nullopt;
        const auto close = rest.find(']');
        if (close == std::string_view::npos) return std::nullopt;
        std::string_view inner = rest.substr(1, close - 1);
        while (true) {
            const auto comma = inner.find(',');
            const auto v = parse_unsigned(trim(inner.substr(0, comma)));
            if (!v) return std::nullopt;
            index.push_back(*v);
            if (comma == std::string_view::npos) break;
            inner = inner.substr(comma + 1);
        }
        rest = rest.substr(close + 1);
    }
    return std::make_pair(std::string(key.substr(0, open)), index);
}

std::vector<std::string> parse_list(std::string_view text) {
    text = trim(text);
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw Error(ErrorKind::Format, "expected a bracketed list, got '" + std::string(text) + "'");
    text = trim(text.substr(1, text.size() - 2));
    std::vector<std::string> out;
    if (text.empty()) return out;
    while (true) {
        const auto comma = text.find(',');
        const auto item = trim(text.substr(0, comma));
        if (item.empty()) throw Error(ErrorKind::Format, "empty list item");
        out.emplace_back(item);
        if (comma == std::string_view::npos) break;
        text = text.substr(comma + 1);
    }
    return out;
}

std::string format_list(const std::vector<std::string>& items) {
    std::string s = "[";
    for (std::size_t i = 0; i < items.size(); ++i) s += (i ? ", " : "") + items[i];
    return s + "]";
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// ---------------------------------------------------------------- loading

namespace {

/// Tracks which keys a loader consumed so leftovers can be reported.
class Reader {
public:
    explicit Reader(const Document& doc) : doc_(doc) { used_.insert("format_version"); }

    const Document& doc() const { return doc_; }

    const std::string* find(const std::string& key) {
        used_.insert(key);
        return doc_.find(key);
    }

    std::string where(const std::string& key) const {
        const auto line = doc_.line_of(key);
        return line ? key + " (line " + std::to_string(line) + ")" : key;
    }

    unsigned n() {
        const std::string* v = find("n");
        if (!v) throw Error(ErrorKind::Format, "missing key 'n'");
        const auto n = parse_unsigned(*v);
        if (!n || *n == 0) throw Error(ErrorKind::Format, where("n") + ": expected a positive integer, got '" + *v + "'");
        return *n;
    }

    std::vector<std::string> list(const std::string& key) {
        const std::string* v = find(key);
        if (!v) return {};
        try {
            return parse_list(*v);
        } catch (const Error& e) {
            throw Error(e.kind(), where(key) + ": " + e.what());
        }
    }

    // Calls f(key, name, index, value) for every indexed key whose name is in `names`.
    template <class F>
    void each_indexed(std::initializer_list<const char*> names, F&& f) {
        for (const auto& [key, value] : doc_.entries()) {
            auto split = split_indexed_key(key);
            if (!split) continue;
            if (std::none_of(names.begin(), names.end(), [&](const char* nm) { return split->first == nm; })) continue;
            used_.insert(key);
            guard(key, [&] { f(key, split->first, split->second, value); });
        }
    }

    template <class F>
    auto guard(const std::string& key, F&& f) -> decltype(f()) {
        try {
            return f();
        } catch (const Error& e) {
            throw Error(e.kind(), where(key) + ": " + e.what());
        }
    }

    void finish() const {
        for (const auto& [key, value] : doc_.entries())
            if (!used_.count(key)) throw Error(ErrorKind::Format, "unknown key " + where(key));
    }

private:
    const Document& doc_;
    std::set<std::string> used_;
};

void require_shape(const std::vector<unsigned>& index, std::initializer_list<unsigned> bounds) {
    if (index.size() != bounds.size())
        throw Error(ErrorKind::Format, "expected " + std::to_string(bounds.size()) + " indices");
    auto b = bounds.begin();
    for (unsigned i : index) {
        if (i < 1 || i > *b) throw Error(ErrorKind::Format, "index " + std::to_string(i) + " outside 1.." + std::to_string(*b));
        ++b;
    }
}

ChartPtr read_chart(Reader& r, const std::string& default_name) {
    std::string name = default_name;
    if (const auto* v = r.find("chart")) name = *v;
    return make_chart(name, r.list("variables"), r.list("parameters"));
}

void write_chart(Document& doc, const ChartPtr& chart) {
    if (!chart) return;
    doc.set("chart", chart->name());
    std::vector<std::string> vars(chart->variables().begin(), chart->variables().end());
    std::vector<std::string> params(chart->parameters().begin(), chart->parameters().end());
    doc.set("variables", format_list(vars));
    if (!params.empty()) doc.set("parameters", format_list(params));
}

// A chart without variables, for coefficient tensors; the null chart when unused.
void write_parameters(Document& doc, const ChartPtr& chart) {
    if (!chart) return;
    if (chart->dimension() != 0)
        throw Error(ErrorKind::InvalidArgument, "coefficients may depend on parameters only");
    std::vector<std::string> params(chart->parameters().begin(), chart->parameters().end());
    if (!params.empty()) doc.set("parameters", format_list(params));
}

ChartPtr chart_of_entries(const std::vector<Expression>& values) {
    ChartPtr c;
    for (const auto& v : values) c = common_chart(c, v.chart());
    return c;
}

// ---- path system

jets::PathSystem load_path_system(Reader& r) {
    const unsigned n = r.n();
    jets::PathSystem sys{jets::JetChart(n, r.list("parameters"))};
    std::map<std::vector<unsigned>, std::string> given;
    r.each_indexed({"F"}, [&](const std::string& key, const std::string&, const std::vector<unsigned>& ix,
                              const std::string& value) {
        require_shape(ix, {n, n, n});
        const Expression e = parse_expression(value, sys.jet().chart());
        const std::vector<unsigned> partner{ix[1], ix[0], ix[2]};
        if (auto it = given.find(partner); it != given.end() && !(sys.F(ix[1], ix[0], ix[2]) == e))
            throw Error(ErrorKind::SymmetryViolation,
                        key + " = " + e.to_string() + " differs from " + it->second + " = " +
                            sys.F(ix[1], ix[0], ix[2]).to_string());
        given[ix] = key;
        sys.set_F(ix[0], ix[1], ix[2], e);
    });
    return sys;
}

// ---- quadric family

quadric::QuadricFamily load_quadric_family(Reader& r) {
    const unsigned n = r.n();
    std::string name = "params";
    if (const auto* v = r.find("chart")) name = *v;
    const ChartPtr chart = make_chart(name, r.list("params"), r.list("constants"));
    const Expression zero = Expression::constant(chart, 0);
    Expression a0 = zero;
    std::vector<Expression> a(n, zero);
    ExprMatrix A(n, n, zero);
    if (const auto* v = r.find("a0")) a0 = r.guard("a0", [&] { return parse_expression(*v, chart); });
    r.each_indexed({"a", "A"}, [&](const std::string&, const std::string& nm, const std::vector<unsigned>& ix,
                                   const std::string& value) {
        if (nm == "a") {
            require_shape(ix, {n});
            a[ix[0] - 1] = parse_expression(value, chart);
        } else {
            require_shape(ix, {n, n});
            A(ix[0] - 1, ix[1] - 1) = parse_expression(value, chart);
        }
    });
    return quadric::QuadricFamily{chart, quadric::QuadricCoefficients(a0, a, A)};
}

// ---- torsion and P tensors

torsion::TorsionTensor load_torsion(Reader& r) {
    const unsigned n = r.n();
    const ChartPtr chart = make_chart("coefficients", {}, r.list("parameters"));
    torsion::TorsionTensor T(n);
    r.each_indexed({"T0t", "T0T", "Ttt", "TtT"}, [&](const std::string&, const std::string& nm,
                                                     const std::vector<unsigned>& ix, const std::string& value) {
        const Expression e = parse_expression(value, chart);
        std::vector<unsigned> z;
        for (unsigned i : ix) z.push_back(i - 1);
        if (nm == "T0t") {
            require_shape(ix, {n, n, n});
            T.raw_t0t().at({z[0], z[1], z[2]}) = e;
        } else if (nm == "T0T") {
            require_shape(ix, {n, n, n, n});
            T.raw_t0T().at({z[0], z[1], z[2], z[3]}) = e;
        } else if (nm == "Ttt") {
            require_shape(ix, {n, n, n, n});
            T.raw_tt().at({z[0], z[1], z[2], z[3]}) = e;
        } else {
            require_shape(ix, {n, n, n, n, n});
            T.raw_tT().at({z[0], z[1], z[2], z[3], z[4]}) = e;
        }
    });
    T.validate();
    return T;
}

torsion::PTensor load_p_tensor(Reader& r) {
    const unsigned n = r.n();
    const ChartPtr chart = make_chart("coefficients", {}, r.list("parameters"));
    torsion::PTensor P(n);
    r.each_indexed({"Pj", "Pjk", "Pcomma", "Pklm"}, [&](const std::string&, const std::string& nm,
                                                        const std::vector<unsigned>& ix, const std::string& value) {
        const Expression e = parse_expression(value, chart);
        std::vector<unsigned> z;
        for (unsigned i : ix) z.push_back(i - 1);
        if (nm == "Pj") {
            require_shape(ix, {n, n});
            P.raw_pj().at({z[0], z[1]}) = e;
        } else if (nm == "Pjk" || nm == "Pcomma") {
            require_shape(ix, {n, n, n});
            (nm == "Pjk" ? P.raw_pjk() : P.raw_pcomma()).at({z[0], z[1], z[2]}) = e;
        } else {
            require_shape(ix, {n, n, n, n});
            P.raw_pklm().at({z[0], z[1], z[2], z[3]}) = e;
        }
    });
    P.validate();
    return P;
}

// ---- connection blocks and matrices

ChartPtr read_chart_or_jet(Reader& r, unsigned n) {
    if (!r.doc().has("variables")) {
        r.find("chart");
        return jets::JetChart(n, r.list("parameters")).chart();
    }
    return read_chart(r, "chart");
}

cartan::Mode read_mode(Reader& r) {
    const auto* m = r.find("mode");
    if (!m || *m == "classical") return cartan::Mode::Classical;
    if (*m == "normal") return cartan::Mode::Normal;
    throw Error(ErrorKind::Format, r.where("mode") + ": expected classical or normal, got '" + *m + "'");
}

BlocksProblem load_blocks(Reader& r) {
    const unsigned n = r.n();
    BlocksProblem out;
    out.mode = read_mode(r);
    const ChartPtr chart = read_chart_or_jet(r, n);
    const std::string* preset = r.find("preset");
    if (!preset || *preset == "zero") {
        out.blocks = cartan::ConnectionBlocks::zero(n, chart);
    } else if (*preset == "flat") {
        if (chart->name() != "jet" + std::to_string(n))
            throw Error(ErrorKind::Format, r.where("preset") + ": the flat preset lives on the jet chart");
        const std::vector<std::string> params(chart->parameters().begin(), chart->parameters().end());
        out.blocks = cartan::flat_blocks(jets::contact_ideal(jets::PathSystem(jets::JetChart(n, params))));
    } else {
        throw Error(ErrorKind::Format, r.where("preset") + ": expected zero or flat, got '" + *preset + "'");
    }
    auto& b = out.blocks;
    auto scalar = [&](const char* key, DifferentialForm& slot) {
        if (const auto* v = r.find(key)) slot = r.guard(key, [&] { return parse_form(*v, chart); });
    };
    scalar("theta0", b.theta0);
    scalar("rho", b.rho);
    scalar("psi", b.psi);
    r.each_indexed({"theta", "omega", "beta", "mu", "Theta", "alpha", "gamma"},
                   [&](const std::string&, const std::string& nm, const std::vector<unsigned>& ix,
                       const std::string& value) {
                       const DifferentialForm f = parse_form(value, chart);
                       if (nm == "theta" || nm == "omega" || nm == "beta" || nm == "mu") {
                           require_shape(ix, {n});
                           auto& v = nm == "theta" ? b.theta : nm == "omega" ? b.omega : nm == "beta" ? b.beta : b.mu;
                           v[ix[0] - 1] = f;
                       } else {
                           require_shape(ix, {n, n});
                           auto& m = nm == "Theta" ? b.Theta : nm == "alpha" ? b.alpha : b.gamma;
                           m(ix[0] - 1, ix[1] - 1) = f;
                       }
                   });
    b.validate();
    return out;
}

SpFormProblem load_sp_form(Reader& r) {
    const unsigned n = r.n();
    const ChartPtr chart = read_chart_or_jet(r, n);
    const unsigned m = 2 * n + 2;
    FormMatrix phi(m, m, DifferentialForm(chart));
    r.each_indexed({"Phi"}, [&](const std::string&, const std::string&, const std::vector<unsigned>& ix,
                                const std::string& value) {
        require_shape(ix, {m, m});
        phi(ix[0] - 1, ix[1] - 1) = parse_form(value, chart);
    });
    return SpFormProblem{cartan::SpForm(std::move(phi))};
}

MatrixProblem load_matrix(Reader& r) {
    const unsigned n = r.n();
    const ChartPtr chart = read_chart_or_jet(r, n);
    const unsigned m = 2 * n + 2;
    ExprMatrix g(m, m, Expression::constant(chart, 0));
    r.each_indexed({"g"}, [&](const std::string&, const std::string&, const std::vector<unsigned>& ix,
                              const std::string& value) {
        require_shape(ix, {m, m});
        g(ix[0] - 1, ix[1] - 1) = parse_expression(value, chart);
    });
    return MatrixProblem{std::move(g), chart};
}

PlaneProblem load_plane(Reader& r) {
    const unsigned n = r.n();
    const ChartPtr chart = make_chart("coefficients", {}, r.list("parameters"));
    const unsigned m = 2 * n + 2;
    std::map<unsigned, std::vector<Expression>> rows;
    r.each_indexed({"basis"}, [&](const std::string&, const std::string&, const std::vector<unsigned>& ix,
                                  const std::string& value) {
        require_shape(ix, {m, m});
        auto& row = rows[ix[0]];
        if (row.empty()) row.assign(m, Expression::constant(chart, 0));
        row[ix[1] - 1] = parse_expression(value, chart);
    });
    PlaneProblem out{n, {}};
    for (auto& [k, row] : rows) {
        if (k != out.basis.size() + 1)
            throw Error(ErrorKind::Format, "basis vectors must be numbered 1.." + std::to_string(rows.size()));
        out.basis.push_back(std::move(row));
    }
    return out;
}

} // namespace

Problem load_problem(const Document& doc) {
    const std::string* kind = doc.find("kind");
    if (kind && *kind == "report") {
        const Document inner = doc.subdocument("result.");
        if (!inner.has("kind")) throw Error(ErrorKind::Format, "report carries no loadable result");
        return load_problem(inner);
    }
    Reader r(doc);
    r.find("kind");
    const std::string k = kind ? *kind : "path_system";
    Problem out = [&]() -> Problem {
        if (k == "path_system") return load_path_system(r);
        if (k == "quadric_family") return load_quadric_family(r);
        if (k == "torsion") return load_torsion(r);
        if (k == "p_tensor") return load_p_tensor(r);
        if (k == "blocks") return load_blocks(r);
        if (k == "sp_form") return load_sp_form(r);
        if (k == "matrix") return load_matrix(r);
        if (k == "plane") return load_plane(r);
        throw Error(ErrorKind::Format, "unknown document kind '" + k + "'");
    }();
    r.finish();
    return out;
}

Problem load_problem(std::string_view text) { return load_problem(Document::parse(text)); }

Problem load_problem_file(const std::filesystem::path& path) {
    const std::string text = read_file(path);
    try {
        return load_problem(text);
    } catch (const Error& e) {
        throw Error(e.kind(), path.string() + ": " + e.what());
    }
}

std::string kind_name(const Problem& problem) {
    static const char* names[] = {"path_system", "quadric_family", "torsion", "p_tensor",
                                  "blocks",      "sp_form",        "matrix",  "plane"};
    return names[problem.index()];
}

// ---------------------------------------------------------------- emitting

Document to_document(const jets::PathSystem& system) {
    Document doc;
    doc.set("kind", "path_system");
    const unsigned n = system.n();
    doc.set("n", std::to_string(n));
    const auto params = system.jet().chart()->parameters();
    if (!params.empty()) doc.set("parameters", format_list({params.begin(), params.end()}));
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = i; j <= n; ++j)
            for (unsigned k = 1; k <= n; ++k)
                if (!system.F(i, j, k).is_zero()) doc.set(idx_key("F", {i, j, k}), system.F(i, j, k).to_string());
    return doc;
}

Document to_document(const quadric::QuadricFamily& family) {
    Document doc;
    doc.set("kind", "quadric_family");
    const auto& q = family.coefficients;
    const auto n = static_cast<unsigned>(q.n());
    doc.set("n", std::to_string(n));
    const ChartPtr& c = family.parameters;
    doc.set("chart", c->name());
    doc.set("params", format_list({c->variables().begin(), c->variables().end()}));
    if (!c->parameters().empty()) doc.set("constants", format_list({c->parameters().begin(), c->parameters().end()}));
    if (!q.a0().is_zero()) doc.set("a0", q.a0().to_string());
    for (unsigned i = 1; i <= n; ++i)
        if (!q.a()[i - 1].is_zero()) doc.set(idx_key("a", {i}), q.a()[i - 1].to_string());
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = 1; j <= n; ++j)
            if (!q.A()(i - 1, j - 1).is_zero()) doc.set(idx_key("A", {i, j}), q.A()(i - 1, j - 1).to_string());
    return doc;
}

namespace {

void emit_tensor(Document& doc, const std::string& name, const torsion::DenseTensor& t) {
    const unsigned n = t.n(), rank = t.rank();
    std::vector<unsigned> ix(rank, 0);
    for (const auto& v : t.data()) {
        if (!v.is_zero()) {
            std::string key = name;
            for (unsigned i : ix) key += "[" + std::to_string(i + 1) + "]";
            doc.set(key, v.to_string());
        }
        // Row-major odometer, last index fastest.
        for (unsigned p = rank; p-- > 0;) {
            if (++ix[p] < n) break;
            ix[p] = 0;
        }
    }
}

std::vector<Expression> all_entries(std::initializer_list<const torsion::DenseTensor*> ts) {
    std::vector<Expression> out;
    for (const auto* t : ts) out.insert(out.end(), t->data().begin(), t->data().end());
    return out;
}

} // namespace

Document to_document(const torsion::TorsionTensor& T) {
    Document doc;
    doc.set("kind", "torsion");
    doc.set("n", std::to_string(T.n()));
    write_parameters(doc, chart_of_entries(all_entries({&T.raw_t0t(), &T.raw_t0T(), &T.raw_tt(), &T.raw_tT()})));
    emit_tensor(doc, "T0t", T.raw_t0t());
    emit_tensor(doc, "T0T", T.raw_t0T());
    emit_tensor(doc, "Ttt", T.raw_tt());
    emit_tensor(doc, "TtT", T.raw_tT());
    return doc;
}

Document to_document(const torsion::PTensor& P) {
    Document doc;
    doc.set("kind", "p_tensor");
    doc.set("n", std::to_string(P.n()));
    write_parameters(doc, chart_of_entries(all_entries({&P.raw_pj(), &P.raw_pjk(), &P.raw_pcomma(), &P.raw_pklm()})));
    emit_tensor(doc, "Pj", P.raw_pj());
    emit_tensor(doc, "Pjk", P.raw_pjk());
    emit_tensor(doc, "Pcomma", P.raw_pcomma());
    emit_tensor(doc, "Pklm", P.raw_pklm());
    return doc;
}

Document to_document(const BlocksProblem& problem) {
    Document doc;
    doc.set("kind", "blocks");
    const auto& b = problem.blocks;
    const unsigned n = b.n();
    doc.set("n", std::to_string(n));
    doc.set("mode", problem.mode == cartan::Mode::Classical ? "classical" : "normal");
    write_chart(doc, b.chart());
    auto scalar = [&](const char* key, const DifferentialForm& f) {
        if (!f.is_zero()) doc.set(key, f.to_string());
    };
    auto column = [&](const char* key, const std::vector<DifferentialForm>& v) {
        for (unsigned i = 1; i <= n; ++i)
            if (!v[i - 1].is_zero()) doc.set(idx_key(key, {i}), v[i - 1].to_string());
    };
    auto square = [&](const char* key, const FormMatrix& m) {
        for (unsigned i = 1; i <= n; ++i)
            for (unsigned j = 1; j <= n; ++j)
                if (!m(i - 1, j - 1).is_zero()) doc.set(idx_key(key, {i, j}), m(i - 1, j - 1).to_string());
    };
    scalar("theta0", b.theta0);
    column("theta", b.theta);
    square("Theta", b.Theta);
    column("omega", b.omega);
    scalar("rho", b.rho);
    square("alpha", b.alpha);
    column("beta", b.beta);
    column("mu", b.mu);
    square("gamma", b.gamma);
    scalar("psi", b.psi);
    return doc;
}

Document to_document(const SpFormProblem& problem) {
    Document doc;
    doc.set("kind", "sp_form");
    const auto& m = problem.phi.matrix();
    doc.set("n", std::to_string(problem.phi.n()));
    ChartPtr c;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) c = common_chart(c, m(i, j).chart());
    write_chart(doc, c);
    for (unsigned i = 1; i <= m.rows(); ++i)
        for (unsigned j = 1; j <= m.cols(); ++j)
            if (!m(i - 1, j - 1).is_zero()) doc.set(idx_key("Phi", {i, j}), m(i - 1, j - 1).to_string());
    return doc;
}

Document to_document(const MatrixProblem& problem) {
    Document doc;
    doc.set("kind", "matrix");
    const auto& g = problem.g;
    doc.set("n", std::to_string(g.rows() / 2 - 1));
    write_chart(doc, problem.chart);
    for (unsigned i = 1; i <= g.rows(); ++i)
        for (unsigned j = 1; j <= g.cols(); ++j)
            if (!g(i - 1, j - 1).is_zero()) doc.set(idx_key("g", {i, j}), g(i - 1, j - 1).to_string());
    return doc;
}

Document to_document(const PlaneProblem& plane) {
    Document doc;
    doc.set("kind", "plane");
    doc.set("n", std::to_string(plane.n));
    std::vector<Expression> all;
    for (const auto& v : plane.basis) all.insert(all.end(), v.begin(), v.end());
    write_parameters(doc, chart_of_entries(all));
    for (unsigned k = 1; k <= plane.basis.size(); ++k) {
        bool any = false;
        for (unsigned c = 1; c <= plane.basis[k - 1].size(); ++c)
            if (!plane.basis[k - 1][c - 1].is_zero()) {
                doc.set(idx_key("basis", {k, c}), plane.basis[k - 1][c - 1].to_string());
                any = true;
            }
        if (!any) throw Error(ErrorKind::InvalidArgument, "basis vector " + std::to_string(k) + " is zero");
    }
    return doc;
}

Document to_document(const Problem& problem) {
    return std::visit([](const auto& v) { return to_document(v); }, problem);
}

std::string emit(const Problem& problem) { return to_document(problem).to_string(); }

namespace {

bool same(const jets::PathSystem& a, const jets::PathSystem& b) {
    if (a.n() != b.n() || !same_chart(a.jet().chart(), b.jet().chart())) return false;
    for (unsigned i = 1; i <= a.n(); ++i)
        for (unsigned j = 1; j <= a.n(); ++j)
            for (unsigned k = 1; k <= a.n(); ++k)
                if (!(a.F(i, j, k) == b.F(i, j, k))) return false;
    return true;
}

bool same(const quadric::QuadricFamily& a, const quadric::QuadricFamily& b) {
    return same_chart(a.parameters, b.parameters) && a.coefficients == b.coefficients;
}

bool same(const torsion::TorsionTensor& a, const torsion::TorsionTensor& b) { return a == b; }
bool same(const torsion::PTensor& a, const torsion::PTensor& b) { return a == b; }

bool same(const BlocksProblem& x, const BlocksProblem& y) {
    const auto &a = x.blocks, &b = y.blocks;
    return x.mode == y.mode && a.theta0 == b.theta0 && a.theta == b.theta && a.Theta == b.Theta &&
           a.omega == b.omega && a.rho == b.rho && a.alpha == b.alpha && a.beta == b.beta && a.mu == b.mu &&
           a.gamma == b.gamma && a.psi == b.psi;
}

bool same(const SpFormProblem& a, const SpFormProblem& b) { return a.phi == b.phi; }
bool same(const MatrixProblem& a, const MatrixProblem& b) { return a.g == b.g; }
bool same(const PlaneProblem& a, const PlaneProblem& b) { return a.n == b.n && a.basis == b.basis; }

} // namespace

bool same_problem(const Problem& a, const Problem& b) {
    if (a.index() != b.index()) return false;
    return std::visit(
        [&](const auto& x) { return same(x, std::get<std::decay_t<decltype(x)>>(b)); }, a);
}

// ---------------------------------------------------------------- reports

void VerificationReport::add_check(std::string name, bool pass, std::string residual) {
    if (!pass && residual.empty())
        throw Error(ErrorKind::InvalidArgument, "failed check '" + name + "' needs a residual");
    if (residual.find('\n') != std::string::npos)
        throw Error(ErrorKind::InvalidArgument, "residual of '" + name + "' spans several lines");
    if (pass) residual.clear();
    checks.push_back(CheckResult{std::move(name), pass, std::move(residual)});
}

void VerificationReport::add_result(std::string key, std::string value) {
    if (value.find('\n') != std::string::npos)
        throw Error(ErrorKind::InvalidArgument, "result '" + key + "' spans several lines");
    results.emplace_back(std::move(key), std::move(value));
}

void VerificationReport::add_results(const Document& doc) {
    for (const auto& [k, v] : doc.entries())
        if (k != "format_version") add_result(k, v);
}

bool VerificationReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

namespace {

std::vector<CheckResult> sorted_checks(const VerificationReport& report) {
    auto checks = report.checks;
    std::stable_sort(checks.begin(), checks.end(),
                     [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    return checks;
}

} // namespace

std::string emit_report(const VerificationReport& report, ReportFormat format) {
    const auto checks = sorted_checks(report);
    if (format == ReportFormat::Structured) {
        Document doc;
        doc.set("kind", "report");
        doc.set("subject", report.subject);
        doc.set("n", std::to_string(report.n));
        doc.set("chart", report.chart);
        doc.set("pass", report.pass() ? "true" : "false");
        doc.set("checks", std::to_string(checks.size()));
        for (std::size_t i = 0; i < checks.size(); ++i) {
            const std::string p = "check[" + std::to_string(i + 1) + "].";
            doc.set(p + "name", checks[i].name);
            doc.set(p + "pass", checks[i].pass ? "true" : "false");
            if (!checks[i].residual.empty()) doc.set(p + "residual", checks[i].residual);
        }
        for (const auto& [k, v] : report.results) doc.set("result." + k, v);
        return doc.to_string();
    }
    std::string out = "subject: " + report.subject + "\n";
    if (report.n) out += "n: " + std::to_string(report.n) + "\n";
    if (!report.chart.empty()) out += "chart: " + report.chart + "\n";
    std::size_t failed = 0;
    if (!checks.empty()) out += "checks:\n";
    for (const auto& c : checks) {
        out += std::string("  ") + (c.pass ? "PASS " : "FAIL ") + c.name;
        if (!c.residual.empty()) out += "  residual: " + c.residual;
        out += "\n";
        failed += c.pass ? 0 : 1;
    }
    if (!report.results.empty()) out += "results:\n";
    for (const auto& [k, v] : report.results) out += "  " + k + " = " + v + "\n";
    if (!report.timings.empty()) out += "timings:\n";
    for (const auto& [k, secs] : report.timings) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3f s", secs);
        out += "  " + k + ": " + buf + "\n";
    }
    out += "verdict: " + std::string(report.pass() ? "PASS" : "FAIL") + " (" +
           std::to_string(checks.size() - failed) + "/" + std::to_string(checks.size()) + " checks passed)\n";
    return out;
}

VerificationReport load_report(std::string_view structured) {
    const Document doc = Document::parse(structured);
    if (doc.require("kind") != "report") throw Error(ErrorKind::Format, "not a report document");
    VerificationReport r;
    r.subject = doc.require("subject");
    r.chart = doc.require("chart");
    const auto n = parse_unsigned(doc.require("n"));
    const auto count = parse_unsigned(doc.require("checks"));
    if (!n || !count) throw Error(ErrorKind::Format, "report n and checks must be integers");
    r.n = *n;
    for (unsigned i = 1; i <= *count; ++i) {
        const std::string p = "check[" + std::to_string(i) + "].";
        const std::string& pass = doc.require(p + "pass");
        if (pass != "true" && pass != "false") throw Error(ErrorKind::Format, p + "pass must be true or false");
        const std::string* residual = doc.find(p + "residual");
        r.add_check(doc.require(p + "name"), pass == "true", residual ? *residual : "");
    }
    for (const auto& [k, v] : doc.entries())
        if (k.rfind("result.", 0) == 0) r.add_result(k.substr(7), v);
    if (doc.require("pass") != (r.pass() ? "true" : "false"))
        throw Error(ErrorKind::Format, "report verdict disagrees with its checks");
    return r;
}

} // namespace lpg::io
