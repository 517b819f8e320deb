#include "lpgeom/commands.hpp"

#include "lpgeom/error.hpp"
#include "lpgeom/flat_model.hpp"
#include "lpgeom/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace lpg::commands {

using io::VerificationReport;

namespace {

std::string_view strip_brackets(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.size() >= 2 && text.front() == '[' && text.back() == ']') text = text.substr(1, text.size() - 2);
    return text;
}

std::vector<std::string> split_commas(std::string_view text) {
    std::vector<std::string> out;
    text = strip_brackets(text);
    if (text.find_first_not_of(" \t") == std::string_view::npos) return out;
    // Commas inside parentheses belong to the item.
    int depth = 0;
    std::string cur;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

VerificationReport make(std::string subject, unsigned n, std::string chart = {}) {
    VerificationReport r;
    r.subject = std::move(subject);
    r.n = n;
    r.chart = std::move(chart);
    return r;
}

std::string join(const std::vector<std::string>& parts, const char* sep = "; ") {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
    return s;
}

std::string idx(const std::string& name, std::initializer_list<unsigned> index) {
    std::string s = name;
    for (unsigned i : index) s += "[" + std::to_string(i) + "]";
    return s;
}

std::vector<Expression> coordinates(const ChartPtr& c) {
    std::vector<Expression> x;
    for (std::size_t i = 0; i < c->dimension(); ++i) x.push_back(Expression::symbol(c, i));
    return x;
}

void add_form_matrix(VerificationReport& r, const std::string& name, const FormMatrix& m) {
    for (unsigned i = 1; i <= m.rows(); ++i)
        for (unsigned j = 1; j <= m.cols(); ++j)
            if (!m(i - 1, j - 1).is_zero()) r.add_result(idx(name, {i, j}), m(i - 1, j - 1).to_string());
}

std::string nonzero_entries(const std::string& name, const FormMatrix& m) {
    std::vector<std::string> parts;
    for (unsigned i = 1; i <= m.rows(); ++i)
        for (unsigned j = 1; j <= m.cols(); ++j)
            if (!m(i - 1, j - 1).is_zero()) parts.push_back(idx(name, {i, j}) + " = " + m(i - 1, j - 1).to_string());
    return join(parts);
}

std::string chart_name(const ChartPtr& c) { return c ? c->name() : std::string(); }

} // namespace

Expression parse_function(std::string_view text, unsigned n) {
    if (n == 0) {
        n = 1;
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (text[i] != 'x' || (i > 0 && (std::isalnum(static_cast<unsigned char>(text[i - 1])) || text[i - 1] == '_')))
                continue;
            std::size_t j = i + 1;
            unsigned k = 0;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) k = 10 * k + (text[j++] - '0');
            if (j > i + 1) n = std::max(n, k);
        }
    }
    return parse_expression(text, jets::JetChart(n).base_chart());
}

std::vector<Expression> parse_vector(std::string_view text, const ChartPtr& chart) {
    if (strip_brackets(text) == "identity") return coordinates(chart);
    std::vector<Expression> out;
    for (const auto& item : split_commas(text)) out.push_back(parse_expression(item, chart));
    return out;
}

std::vector<Rational> parse_point(std::string_view text) {
    std::vector<Rational> out;
    for (const auto& item : split_commas(text)) {
        const Expression e = parse_expression(item, nullptr);
        out.push_back(e.constant_value());
    }
    return out;
}

// ---------------------------------------------------------------- jets

VerificationReport frobenius(const jets::PathSystem& system) {
    auto r = make("frobenius", system.n(), system.jet().chart()->name());
    const auto ideal = jets::contact_ideal(system);
    const auto result = jets::frobenius_check(system, ideal);
    const auto names = ideal.generator_names();
    for (std::size_t k = 0; k < names.size(); ++k)
        r.add_check("frobenius." + names[k], result.residues[k].is_zero(),
                    result.residues[k].is_zero() ? "" : result.residues[k].to_string());
    return r;
}

// ---------------------------------------------------------------- quadrics

VerificationReport osculate(const Expression& f, const std::vector<Rational>& x0_in) {
    const ChartPtr& c = f.chart();
    if (!c) throw Error(ErrorKind::InvalidArgument, "osculate needs a function of x1..xn");
    const auto n = static_cast<unsigned>(c->dimension());
    std::vector<Rational> x0 = x0_in.empty() ? std::vector<Rational>(n, Rational(0)) : x0_in;
    if (x0.size() != n)
        throw Error(ErrorKind::InvalidArgument, "--at needs " + std::to_string(n) + " coordinates, got " +
                                                    std::to_string(x0.size()));
    auto r = make("osculate", n, c->name());
    const auto q = quadric::osculating_quadric(f, x0);

    // Single quadric: coefficients on a chart without variables.
    const ChartPtr point = make_chart("point", {}, {c->parameters().begin(), c->parameters().end()});
    std::vector<Expression> a;
    for (const auto& v : q.a()) a.push_back(v.rebind(point));
    ExprMatrix A(n, n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) A(i, j) = q.A()(i, j).rebind(point);
    r.add_results(io::to_document(quadric::QuadricFamily{point, quadric::QuadricCoefficients(q.a0().rebind(point), a, A)}));

    // The quadric's graph must share value, gradient and Hessian with f at x0.
    std::vector<Expression> at;
    for (const auto& v : x0) at.emplace_back(v);
    auto ev = [&](const Expression& e) { return e.substitute(at, nullptr); };
    const Expression g = q.u_at(coordinates(c));
    const Expression dv = ev(g) - ev(f);
    r.add_check("osculate.value", dv.is_zero(), dv.is_zero() ? "" : dv.to_string());
    std::vector<std::string> grad, hess;
    for (unsigned i = 0; i < n; ++i) {
        const Expression d = ev(g.derivative(i)) - ev(f.derivative(i));
        if (!d.is_zero()) grad.push_back(idx("d", {i + 1}) + " = " + d.to_string());
        for (unsigned k = 0; k < n; ++k) {
            const Expression h = ev(g.derivative(i).derivative(k)) - ev(f.derivative(i).derivative(k));
            if (!h.is_zero()) hess.push_back(idx("d", {i + 1, k + 1}) + " = " + h.to_string());
        }
    }
    r.add_check("osculate.gradient", grad.empty(), join(grad));
    r.add_check("osculate.hessian", hess.empty(), join(hess));
    return r;
}

VerificationReport family(const Expression& f) {
    if (!f.chart()) throw Error(ErrorKind::InvalidArgument, "family needs a function of x1..xn");
    const auto fam = quadric::osculating_family(f);
    auto r = make("family", static_cast<unsigned>(fam.coefficients.n()), fam.parameters->name());
    r.add_results(io::to_document(fam));
    const auto x = coordinates(fam.parameters);
    const auto nv = quadric::null_vector_check(fam, x);
    std::vector<std::string> rows;
    for (std::size_t k = 0; k < nv.residuals.size(); ++k)
        if (!nv.residuals[k].is_zero()) rows.push_back(idx("row", {static_cast<unsigned>(k)}) + " = " + nv.residuals[k].to_string());
    r.add_check("null_vector", nv.pass, join(rows));
    const auto sd = quadric::symmetric_differential(fam);
    r.add_check("symmetric_differential", sd.is_zero(), sd.is_zero() ? "" : sd.to_string());
    return r;
}

VerificationReport nullcheck(const quadric::QuadricFamily& fam, const std::vector<Expression>& X) {
    const auto n = static_cast<unsigned>(fam.coefficients.n());
    if (X.size() != n) throw Error(ErrorKind::InvalidArgument, "X needs " + std::to_string(n) + " entries");
    auto r = make("nullcheck", n, fam.parameters->name());
    const auto nv = quadric::null_vector_check(fam, X);
    for (std::size_t k = 0; k < nv.residuals.size(); ++k)
        r.add_check(idx("null_vector.row", {static_cast<unsigned>(k)}), nv.residuals[k].is_zero(),
                    nv.residuals[k].is_zero() ? "" : nv.residuals[k].to_string());
    return r;
}

VerificationReport symdiff(const quadric::QuadricFamily& fam) {
    auto r = make("symdiff", static_cast<unsigned>(fam.coefficients.n()), fam.parameters->name());
    const auto sd = quadric::symmetric_differential(fam);
    r.add_result("symmetric_differential", sd.to_string());
    r.add_check("symmetric_differential.vanishes", sd.is_zero(), sd.is_zero() ? "" : sd.to_string());
    return r;
}

VerificationReport developable(const quadric::QuadricFamily& fam, const std::vector<Expression>& V) {
    const auto n = static_cast<unsigned>(fam.coefficients.n());
    if (V.size() != n) throw Error(ErrorKind::InvalidArgument, "V needs " + std::to_string(n) + " entries");
    auto r = make("developable", n, fam.parameters->name());
    try {
        const auto dev = quadric::developable_from_family(fam, V);
        r.add_check("developable.conditions", true);
        r.add_result("u", dev.u.to_string());
        for (unsigned i = 1; i <= n; ++i) r.add_result(idx("p", {i}), dev.p[i - 1].to_string());
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::Precondition) throw;
        r.add_check("developable.conditions", false, e.what());
    }
    return r;
}

// ---------------------------------------------------------------- flat model

namespace {

// Quadric with one parameter per coefficient and a symbolic point s.
std::pair<quadric::QuadricCoefficients, std::vector<Expression>> generic_quadric(unsigned n) {
    std::vector<std::string> names{"a0"};
    for (unsigned i = 1; i <= n; ++i) names.push_back("a" + std::to_string(i));
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = i; j <= n; ++j) names.push_back("a" + std::to_string(i) + "_" + std::to_string(j));
    for (unsigned i = 1; i <= n; ++i) names.push_back("s" + std::to_string(i));
    const ChartPtr c = make_chart("generic", {}, names);
    auto sym = [&](const std::string& s) { return Expression::symbol(c, s); };
    std::vector<Expression> a, s;
    ExprMatrix A(n, n);
    for (unsigned i = 1; i <= n; ++i) {
        a.push_back(sym("a" + std::to_string(i)));
        s.push_back(sym("s" + std::to_string(i)));
        for (unsigned j = i; j <= n; ++j)
            A(i - 1, j - 1) = A(j - 1, i - 1) = sym("a" + std::to_string(i) + "_" + std::to_string(j));
    }
    return {quadric::QuadricCoefficients(sym("a0"), a, A), s};
}

std::string pairing_defects(const flat::LinearSubspace& plane) {
    std::vector<std::string> parts;
    const auto& b = plane.basis();
    for (unsigned i = 0; i < b.size(); ++i)
        for (unsigned j = i + 1; j < b.size(); ++j) {
            const Expression w = plane.space().pairing(b[i], b[j]);
            if (!w.is_zero()) parts.push_back(idx("varpi(b", {i + 1}) + ",b[" + std::to_string(j + 1) + "]) = " + w.to_string());
        }
    return join(parts);
}

void add_basis(VerificationReport& r, const flat::LinearSubspace& plane) {
    for (unsigned k = 1; k <= plane.basis().size(); ++k) {
        std::vector<std::string> items;
        for (const auto& e : plane.basis()[k - 1]) items.push_back(e.to_string());
        r.add_result(idx("basis", {k}), io::format_list(items));
    }
}

VerificationReport lagrangian_of(const flat::LinearSubspace& plane, unsigned n) {
    auto r = make("lagrangian", n, plane.space().chart()->name());
    add_basis(r, plane);
    const std::string defects = pairing_defects(plane);
    r.add_check("lagrangian", flat::is_lagrangian(plane), defects);
    return r;
}

} // namespace

VerificationReport flat_verify(unsigned n) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "n must be >= 1");
    const auto id = flat::verify_chart_identity(n);
    auto r = make("flat verify", n, chart_name(id.lhs.chart()));
    r.add_result("lhs", id.lhs.to_string());
    r.add_result("rhs", id.rhs.to_string());
    r.add_check("chart_identity", id.pass, id.residual.is_zero() ? "" : id.residual.to_string());
    r.add_check("contact_nondegenerate", id.contact_nondegenerate,
                id.contact_nondegenerate ? "" : "theta0 /\\ (d theta0)^n = 0");
    const auto [q, s] = generic_quadric(n);
    const auto inc = flat::quadric_plane_incidence(q, s);
    std::vector<std::string> res;
    for (const auto& v : inc.residual) res.push_back(v.to_string());
    r.add_check("incidence.generic", inc.pass, inc.pass ? "" : io::format_list(res));
    const auto plane = flat::quadric_to_lagrangian(q, flat::SymplecticSpace(n));
    r.add_check("lagrangian.generic", flat::is_lagrangian(plane), pairing_defects(plane));
    return r;
}

VerificationReport lagrangian(const quadric::QuadricFamily& q) {
    const auto n = static_cast<unsigned>(q.coefficients.n());
    return lagrangian_of(flat::quadric_to_lagrangian(q.coefficients, flat::SymplecticSpace(n)), n);
}

VerificationReport lagrangian(const io::PlaneProblem& plane) {
    flat::SymplecticSpace space(plane.n);
    return lagrangian_of(flat::LinearSubspace(space, plane.basis), plane.n);
}

// ---------------------------------------------------------------- Cartan forms

VerificationReport curvature(const cartan::SpForm& phi) {
    ChartPtr c;
    const auto& m = phi.matrix();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) c = common_chart(c, m(i, j).chart());
    auto r = make("curvature", phi.n(), chart_name(c));
    const auto W = cartan::curvature(phi);
    add_form_matrix(r, "Omega", W.matrix());
    const auto defect = cartan::sp_defect(phi);
    r.add_check("sp_membership", is_zero(defect), nonzero_entries("JPhi+PhitJ", defect));
    const auto bianchi = cartan::bianchi_defect(phi, W);
    r.add_check("bianchi", is_zero(bianchi), nonzero_entries("bianchi", bianchi));
    return r;
}

VerificationReport curvature(const io::BlocksProblem& blocks) {
    return commands::curvature(cartan::assemble_phi(blocks.blocks, blocks.mode));
}

VerificationReport maurer_cartan(const io::MatrixProblem& g) {
    const auto m = g.g.rows();
    auto r = make("mc", static_cast<unsigned>(m / 2 - 1), chart_name(g.chart));
    const ExprMatrix J = symplectic_j(m / 2);
    const ExprMatrix defect = g.g.transpose() * J * g.g - J;
    std::vector<std::string> parts;
    for (unsigned i = 1; i <= m; ++i)
        for (unsigned j = 1; j <= m; ++j)
            if (!defect(i - 1, j - 1).is_zero()) parts.push_back(idx("gtJg-J", {i, j}) + " = " + defect(i - 1, j - 1).to_string());
    r.add_check("symplectic", parts.empty(), join(parts));
    if (!parts.empty()) return r;
    const auto phi = cartan::maurer_cartan_form(g.g, g.chart);
    add_form_matrix(r, "Phi", phi.matrix());
    const auto sp = cartan::sp_defect(phi);
    r.add_check("sp_membership", is_zero(sp), nonzero_entries("JPhi+PhitJ", sp));
    const auto W = cartan::curvature(phi);
    r.add_check("flat", is_zero(W.matrix()), nonzero_entries("Omega", W.matrix()));
    return r;
}

VerificationReport identities(const io::BlocksProblem& b) {
    const auto phi = cartan::assemble_phi(b.blocks, b.mode);
    auto r = make("identities", b.blocks.n(), chart_name(b.blocks.chart()));
    r.add_result("mode", b.mode == cartan::Mode::Classical ? "classical" : "normal");
    const auto sp = cartan::sp_defect(phi);
    r.add_check("sp_membership", is_zero(sp), nonzero_entries("JPhi+PhitJ", sp));
    const auto W = cartan::curvature(phi);
    add_form_matrix(r, "Omega", W.matrix());
    for (const auto& check : cartan::check_curvature_identities(W, b.blocks).checks) {
        std::vector<std::string> parts;
        for (const auto& [label, form] : check.residuals) parts.push_back(label + " = " + form.to_string());
        r.add_check(check.name, check.pass, join(parts));
    }
    return r;
}

// ---------------------------------------------------------------- torsion

namespace {

std::string condition_family(const std::string& name) { return name.substr(0, name.find('[')); }

void add_conditions(VerificationReport& r, const std::string& prefix, const std::vector<std::string>& families,
                    const std::vector<torsion::Condition>& defects) {
    std::map<std::string, std::vector<std::string>> grouped;
    for (const auto& d : defects) grouped[condition_family(d.name)].push_back(d.name + " = " + d.value.to_string());
    for (const auto& f : families) r.add_check(prefix + f, !grouped.count(f), grouped.count(f) ? join(grouped[f]) : "");
    for (const auto& [f, parts] : grouped)
        if (std::find(families.begin(), families.end(), f) == families.end()) r.add_check(prefix + f, false, join(parts));
}

// Chart of the tensor entries plus a fresh parameter for the residual gauge.
ChartPtr gauge_chart(std::initializer_list<const torsion::DenseTensor*> parts) {
    ChartPtr c;
    for (const auto* t : parts)
        for (const auto& e : t->data()) c = common_chart(c, e.chart());
    std::vector<std::string> params;
    if (c) params.assign(c->parameters().begin(), c->parameters().end());
    std::string p = "p";
    while (std::find(params.begin(), params.end(), p) != params.end()) p += "_";
    params.push_back(p);
    return make_chart("gauge", {}, params);
}

void rebind_all(std::initializer_list<torsion::DenseTensor*> parts, const ChartPtr& c) {
    for (auto* t : parts)
        for (auto& e : t->data()) e = e.rebind(c);
}

Expression gauge_symbol(const ChartPtr& c) {
    return Expression::symbol(c, c->parameters().back());
}

std::string certificate_residual(const torsion::ResidualCertificate& cert) {
    std::vector<std::string> parts;
    if (!cert.unchanged) parts.push_back("the residual change moves the tensor");
    for (const auto& d : cert.defects) parts.push_back(d.name + " = " + d.value.to_string());
    return join(parts);
}

} // namespace

VerificationReport normalize_torsion(const torsion::TorsionTensor& T) {
    const unsigned n = T.n();
    auto r = make("normalize-torsion", n);
    const auto sol = torsion::solve_first_normalization(T);
    const auto& g = sol.gauge;
    for (unsigned i = 1; i <= n; ++i)
        if (!g.c[i - 1].is_zero()) r.add_result(idx("c", {i}), g.c[i - 1].to_string());
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = 1; j <= n; ++j)
            if (!g.c2.at({i - 1, j - 1}).is_zero()) r.add_result(idx("c2", {i, j}), g.c2.at({i - 1, j - 1}).to_string());
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = 1; j <= n; ++j)
            for (unsigned k = j; k <= n; ++k)
                if (!g.c3.at({i - 1, j - 1, k - 1}).is_zero())
                    r.add_result(idx("c3", {i, j, k}), g.c3.at({i - 1, j - 1, k - 1}).to_string());
    r.add_result("free_parameters", io::format_list(sol.free_parameters));
    add_conditions(r, "first.", {"T_ii^i", "T_ii^ki", "T_ii,ii", "T^k_ii,im+T^m_ii,ik", "T^k_ii,ii"},
                   torsion::first_normalization_defects(sol.normalized));
    auto normalized = sol.normalized;
    const auto gc = gauge_chart({&normalized.raw_t0t(), &normalized.raw_t0T(), &normalized.raw_tt(), &normalized.raw_tT()});
    rebind_all({&normalized.raw_t0t(), &normalized.raw_t0T(), &normalized.raw_tt(), &normalized.raw_tT()}, gc);
    const auto cert = torsion::residual_gauge_preserves(normalized, gauge_symbol(gc));
    r.add_check("residual_gauge", cert.pass && cert.unchanged, certificate_residual(cert));
    return r;
}

VerificationReport normalize_p(const torsion::PTensor& P) {
    const unsigned n = P.n();
    auto r = make("normalize-p", n);
    const auto sol = torsion::solve_second_normalization(P);
    const auto& g = sol.gauge;
    r.add_result("t", g.t.to_string());
    for (unsigned i = 1; i <= n; ++i)
        if (!g.h[i - 1].is_zero()) r.add_result(idx("h", {i}), g.h[i - 1].to_string());
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned k = i; k <= n; ++k)
            if (!g.hh.at({i - 1, k - 1}).is_zero()) r.add_result(idx("hh", {i, k}), g.hh.at({i - 1, k - 1}).to_string());
    add_conditions(r, "second.", {"sum_i P^i_i", "P^i_ii", "P^i_k,ii+P^k_i,kk"},
                   torsion::second_normalization_defects(sol.normalized));
    auto normalized = sol.normalized;
    const auto gc = gauge_chart({&normalized.raw_pj(), &normalized.raw_pjk(), &normalized.raw_pcomma(), &normalized.raw_pklm()});
    rebind_all({&normalized.raw_pj(), &normalized.raw_pjk(), &normalized.raw_pcomma(), &normalized.raw_pklm()}, gc);
    const auto cert = torsion::residual_second_gauge_preserves(normalized, gauge_symbol(gc));
    r.add_check("residual_gauge", cert.pass && cert.unchanged, certificate_residual(cert));
    return r;
}

// ---------------------------------------------------------------- representations

namespace {

rep::IrrepLabel parse_label(const rep::AlgebraId& g, std::string_view text) {
    std::vector<unsigned> h;
    for (const auto& item : split_commas(text)) {
        const Expression e = parse_expression(item, nullptr);
        const Rational v = e.constant_value();
        if (!is_integer(v) || v < 0)
            throw Error(ErrorKind::InvalidArgument, "label entries must be nonnegative integers, got '" + item + "'");
        h.push_back(static_cast<unsigned>(v.get_num().get_ui()));
    }
    return rep::IrrepLabel(g, h);
}

std::string labels_text(const std::vector<rep::IrrepLabel>& labels) {
    std::vector<std::string> parts;
    for (const auto& l : labels) parts.push_back(l.to_string());
    return io::format_list(parts);
}

} // namespace

VerificationReport rep_dims(unsigned n, std::string_view label) {
    const auto g = rep::AlgebraId::sp(n);
    auto r = make("rep dims", n, g.to_string());
    std::vector<rep::IrrepLabel> labels;
    if (label.empty()) {
        for (unsigned k = 1; k <= n; ++k) labels.push_back(rep::IrrepLabel::fundamental(g, k));
    } else {
        labels.push_back(parse_label(g, label));
    }
    for (const auto& l : labels) {
        const auto weyl = rep::weyl_dimension(l);
        const auto freudenthal = rep::dimension(rep::character(l));
        r.add_result(l.to_string(), std::to_string(weyl));
        r.add_check("dimension." + l.to_string(), static_cast<std::int64_t>(weyl) == freudenthal,
                    "Weyl " + std::to_string(weyl) + " but weights sum to " + std::to_string(freudenthal));
    }
    return r;
}

VerificationReport rep_decompose(unsigned n, std::string_view a, std::string_view b) {
    const auto g = rep::AlgebraId::sp(n);
    auto r = make("rep decompose", n, g.to_string());
    const auto la = parse_label(g, a), lb = parse_label(g, b);
    auto parts = rep::tensor_decompose(la, lb);
    std::stable_sort(parts.begin(), parts.end(), [](const auto& x, const auto& y) {
        return rep::weyl_dimension(x) > rep::weyl_dimension(y);
    });
    std::uint64_t total = 0;
    std::string ledger;
    for (const auto& p : parts) {
        const auto d = rep::weyl_dimension(p);
        total += d;
        ledger += (ledger.empty() ? "" : "+") + std::to_string(d);
    }
    const auto product = rep::weyl_dimension(la) * rep::weyl_dimension(lb);
    r.add_result("constituents", labels_text(parts));
    r.add_result("ledger", std::to_string(product) + " = " + ledger);
    r.add_check("dimension_conservation", total == product,
                std::to_string(product) + " != " + std::to_string(total));
    return r;
}

VerificationReport rep_verify(unsigned n, std::uint64_t seed) {
    const auto checks = rep::verify_decompositions(n);
    auto r = make("rep verify", n, rep::AlgebraId::sp(n).to_string());
    for (const auto& c : checks) {
        r.add_result("ledger." + c.name, c.ledger);
        r.add_check("decomposition." + c.name, c.pass,
                    "expected " + labels_text(c.expected) + ", computed " + labels_text(c.computed));
    }
    rep::VPieceProjector P(n);
    r.add_check("projector.idempotent", P.idempotent(), "P*P != P");
    const auto rank = P.rank();
    r.add_result("projector.rank", std::to_string(rank));
    r.add_check("projector.rank", rank == 2 * n, "rank " + std::to_string(rank) + ", expected " + std::to_string(2 * n));
    Rng rng(seed);
    bool equivariant = true;
    for (int trial = 0; trial < 5 && equivariant; ++trial) {
        const auto X = rep::random_sp_element(rng, n);
        std::vector<Rational> t(P.dimension());
        for (auto& v : t) v = rng.rational(4, 3);
        equivariant = P.apply(P.act(X, t)) == P.act(X, P.apply(t));
    }
    r.add_check("projector.equivariant", equivariant, "P(X.t) != X.P(t) for a sampled X, t");
    return r;
}

VerificationReport lemma_audit(unsigned n) {
    const auto a = rep::so_minimal_dims(n);
    auto r = make("lemma-audit", n, rep::AlgebraId::so(n + 1).to_string());
    std::vector<std::string> dims;
    for (auto d : a.dimensions) dims.push_back(std::to_string(d));
    r.add_result("dimensions", io::format_list(dims));
    r.add_result("bound", std::to_string(a.bound));
    r.add_result("smallest", std::to_string(a.smallest));
    r.add_result("next", std::to_string(a.next));
    r.add_result("half_n_n1", std::to_string(a.half_n_n1));
    r.add_result("complement", std::to_string(a.complement));
    if (n < 4) {
        // The dimension argument is made for n >= 4 only.
        r.add_result("applies", "false");
        return r;
    }
    r.add_result("applies", "true");
    r.add_check("smallest_is_vector", a.smallest_is_vector,
                "smallest " + std::to_string(a.smallest) + " != " + std::to_string(n + 1));
    r.add_check("next_at_least_half", a.next_at_least_half,
                "next " + std::to_string(a.next) + " < " + std::to_string(a.half_n_n1));
    r.add_check("half_exceeds_2n", a.half_exceeds_2n,
                std::to_string(a.half_n_n1) + " <= " + std::to_string(2 * n));
    r.add_check("complement_small", a.complement_small,
                std::to_string(a.complement) + " >= " + std::to_string(n + 1));
    return r;
}

} // namespace lpg::commands
