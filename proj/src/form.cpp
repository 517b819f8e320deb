#include "lpgeom/form.hpp"

#include "lpgeom/error.hpp"
#include "lpgeom/matrix.hpp"

#include <algorithm>

namespace lpg {

DifferentialForm::DifferentialForm(const Expression& function) : chart_(function.chart()) {
    if (!function.is_zero()) terms_.emplace(Basis{}, function);
}

DifferentialForm DifferentialForm::differential(ChartPtr chart, std::size_t variable) {
    if (!chart || variable >= chart->dimension())
        throw Error(ErrorKind::InvalidArgument, "differential of a non-variable symbol");
    DifferentialForm f(chart);
    f.terms_.emplace(Basis{static_cast<std::uint32_t>(variable)}, Expression::constant(chart, 1));
    return f;
}

DifferentialForm DifferentialForm::differential(ChartPtr chart, std::string_view variable) {
    const std::size_t i = chart->require(variable);
    if (!chart->is_variable(i))
        throw Error(ErrorKind::InvalidArgument, "'" + std::string(variable) + "' is a parameter and has no differential");
    return differential(std::move(chart), i);
}

DifferentialForm DifferentialForm::term(ChartPtr chart, Basis basis, const Expression& coefficient) {
    bool odd = false;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            if (basis[i] == basis[j]) return DifferentialForm(chart);
            if (basis[i] > basis[j]) odd = !odd;
        }
    std::sort(basis.begin(), basis.end());
    DifferentialForm f(std::move(chart));
    f.add_term(basis, odd ? -coefficient : coefficient);
    return f;
}

std::size_t DifferentialForm::max_degree() const noexcept {
    return terms_.empty() ? 0 : terms_.rbegin()->first.size();
}

bool DifferentialForm::is_homogeneous(std::size_t degree) const noexcept {
    for (const auto& [b, c] : terms_)
        if (b.size() != degree) return false;
    return true;
}

DifferentialForm DifferentialForm::part(std::size_t degree) const {
    DifferentialForm out(chart_);
    for (const auto& [b, c] : terms_)
        if (b.size() == degree) out.terms_.emplace(b, c);
    return out;
}

Expression DifferentialForm::coefficient(const Basis& basis) const {
    auto it = terms_.find(basis);
    return it == terms_.end() ? Expression::constant(chart_, 0) : it->second;
}

Expression DifferentialForm::as_function() const {
    if (max_degree() > 0)
        throw Error(ErrorKind::InvalidArgument, "form '" + to_string() + "' is not a function");
    return coefficient({});
}

void DifferentialForm::add_term(const Basis& basis, const Expression& coefficient) {
    chart_ = common_chart(chart_, coefficient.chart());
    if (coefficient.is_zero()) return;
    auto [it, inserted] = terms_.emplace(basis, coefficient);
    if (inserted) return;
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
}

DifferentialForm DifferentialForm::operator-() const {
    DifferentialForm out = *this;
    for (auto& [b, c] : out.terms_) c = -c;
    return out;
}

DifferentialForm& DifferentialForm::operator+=(const DifferentialForm& other) {
    chart_ = common_chart(chart_, other.chart_);
    for (const auto& [b, c] : other.terms_) add_term(b, c);
    return *this;
}

DifferentialForm& DifferentialForm::operator-=(const DifferentialForm& other) {
    chart_ = common_chart(chart_, other.chart_);
    for (const auto& [b, c] : other.terms_) add_term(b, -c);
    return *this;
}

DifferentialForm& DifferentialForm::operator*=(const Expression& scalar) {
    chart_ = common_chart(chart_, scalar.chart());
    if (scalar.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [b, c] : terms_) c *= scalar;
    return *this;
}

bool operator==(const DifferentialForm& a, const DifferentialForm& b) {
    if (a.chart_ && b.chart_ && !same_chart(a.chart_, b.chart_)) return false;
    return a.terms_ == b.terms_;
}

namespace {

bool needs_parentheses(const Expression& c) {
    return !c.is_polynomial() || c.numerator().size() > 1;
}

std::string differential_name(const Chart* chart, std::uint32_t i) {
    return "d(" + (chart ? chart->symbol(i) : "s" + std::to_string(i)) + ")";
}

} // namespace

std::string DifferentialForm::to_string() const {
    if (terms_.empty()) return "0";
    const Chart* chart = chart_.get();
    std::string out;
    bool first = true;
    for (const auto& [basis, coef] : terms_) {
        std::string wedge_text;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (k) wedge_text += " /\\ ";
            wedge_text += differential_name(chart, basis[k]);
        }
        if (basis.size() > 1) wedge_text = "(" + wedge_text + ")";

        bool negative = false;
        std::string c;
        if (needs_parentheses(coef)) {
            c = "(" + coef.to_string() + ")";
        } else {
            negative = coef.numerator().leading_coefficient() < 0;
            c = (negative ? -coef : coef).to_string();
        }
        std::string term;
        if (basis.empty()) term = c;
        else if (c == "1") term = wedge_text;
        else term = c + "*" + wedge_text;

        if (first) out = negative ? "-" + term : term;
        else out += (negative ? " - " : " + ") + term;
        first = false;
    }
    return out;
}

VectorField::VectorField(ChartPtr chart, std::vector<Expression> components)
    : chart_(std::move(chart)), components_(std::move(components)) {
    if (!chart_ || components_.size() != chart_->dimension())
        throw Error(ErrorKind::InvalidArgument, "vector field needs one component per chart variable");
    for (const auto& c : components_) common_chart(chart_, c.chart());
}

VectorField VectorField::coordinate(ChartPtr chart, std::size_t variable) {
    std::vector<Expression> comps(chart->dimension(), Expression::constant(chart, 0));
    comps.at(variable) = Expression::constant(chart, 1);
    return VectorField(chart, std::move(comps));
}

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b) {
    DifferentialForm out(common_chart(a.chart(), b.chart()));
    Basis merged;
    for (const auto& [ba, ca] : a.terms()) {
        for (const auto& [bb, cb] : b.terms()) {
            merged.clear();
            bool odd = false;
            bool overlap = false;
            std::size_t i = 0, j = 0;
            while (i < ba.size() || j < bb.size()) {
                if (j == bb.size() || (i < ba.size() && ba[i] < bb[j])) {
                    merged.push_back(ba[i++]);
                } else if (i == ba.size() || bb[j] < ba[i]) {
                    // bb[j] jumps over the remaining ba.size() - i entries.
                    if ((ba.size() - i) % 2 == 1) odd = !odd;
                    merged.push_back(bb[j++]);
                } else {
                    overlap = true;
                    break;
                }
            }
            if (overlap) continue;
            Expression c = ca * cb;
            out.add_term(merged, odd ? -c : c);
        }
    }
    return out;
}

DifferentialForm wedge_power(const DifferentialForm& a, unsigned k) {
    DifferentialForm out(Expression::constant(a.chart(), 1));
    for (unsigned i = 0; i < k; ++i) out = wedge(out, a);
    return out;
}

DifferentialForm exterior_derivative(const DifferentialForm& a) {
    DifferentialForm out(a.chart());
    if (!a.chart()) return out;
    const std::size_t dim = a.chart()->dimension();
    for (const auto& [basis, coef] : a.terms()) {
        for (std::uint32_t v = 0; v < dim; ++v) {
            if (std::binary_search(basis.begin(), basis.end(), v)) continue;
            Expression dc = coef.derivative(v);
            if (dc.is_zero()) continue;
            auto pos = std::lower_bound(basis.begin(), basis.end(), v);
            const std::size_t before = static_cast<std::size_t>(pos - basis.begin());
            Basis nb = basis;
            nb.insert(nb.begin() + static_cast<std::ptrdiff_t>(before), v);
            out.add_term(nb, before % 2 ? -dc : dc);
        }
    }
    return out;
}

DifferentialForm interior_product(const VectorField& v, const DifferentialForm& a) {
    DifferentialForm out(common_chart(v.chart(), a.chart()));
    for (const auto& [basis, coef] : a.terms()) {
        for (std::size_t m = 0; m < basis.size(); ++m) {
            const Expression& comp = v.components()[basis[m]];
            if (comp.is_zero()) continue;
            Basis rest = basis;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(m));
            Expression c = comp * coef;
            out.add_term(rest, m % 2 ? -c : c);
        }
    }
    return out;
}

namespace {

std::vector<Expression> substitution_images(const ChartPtr& target, const Substitution& s) {
    std::vector<Expression> images;
    images.reserve(target->symbol_count());
    for (std::size_t i = 0; i < target->symbol_count(); ++i) {
        const std::string& name = target->symbol(i);
        auto it = s.images.find(name);
        if (it != s.images.end()) {
            images.push_back(it->second.rebind(s.source));
            continue;
        }
        if (!target->is_variable(i) && s.source && s.source->index_of(name)) {
            images.push_back(Expression::symbol(s.source, name));
            continue;
        }
        throw Error(ErrorKind::InvalidArgument, "pullback has no image for symbol '" + name + "'");
    }
    return images;
}

} // namespace

std::vector<DifferentialForm> pullback(std::span<const DifferentialForm> forms, const Substitution& s) {
    std::vector<DifferentialForm> out;
    ChartPtr target;
    for (const auto& f : forms) target = common_chart(target, f.chart());
    if (!target) {
        for (const auto& f : forms) out.push_back(f);
        return out;
    }
    const auto images = substitution_images(target, s);
    std::vector<std::optional<DifferentialForm>> dimages(target->dimension());
    for (const auto& f : forms) {
        DifferentialForm r(s.source);
        for (const auto& [basis, coef] : f.terms()) {
            DifferentialForm t(coef.substitute(images, s.source));
            for (auto v : basis) {
                if (!dimages[v]) dimages[v] = exterior_derivative(DifferentialForm(images[v]));
                t = wedge(t, *dimages[v]);
            }
            r += t;
        }
        out.push_back(std::move(r));
    }
    return out;
}

DifferentialForm pullback(const DifferentialForm& form, const Substitution& s) {
    return pullback(std::span<const DifferentialForm>(&form, 1), s).front();
}

Expression pullback(const Expression& function, const ChartPtr& target_chart, const Substitution& s) {
    if (!target_chart) return function;
    return function.rebind(target_chart).substitute(substitution_images(target_chart, s), s.source);
}

DifferentialForm replace_differentials(const DifferentialForm& form,
                                       std::span<const std::optional<DifferentialForm>> images) {
    DifferentialForm out(form.chart());
    for (const auto& [basis, coef] : form.terms()) {
        DifferentialForm t(coef);
        for (auto v : basis) {
            if (v < images.size() && images[v]) t = wedge(t, *images[v]);
            else t = wedge(t, DifferentialForm::differential(form.chart(), v));
        }
        out += t;
    }
    return out;
}

namespace {

ExprMatrix one_form_matrix(std::span<const DifferentialForm> forms, ChartPtr& chart) {
    chart = nullptr;
    for (const auto& f : forms) chart = common_chart(chart, f.chart());
    const std::size_t dim = chart ? chart->dimension() : 0;
    ExprMatrix m(forms.size(), dim, Expression::constant(chart, 0));
    for (std::size_t r = 0; r < forms.size(); ++r) {
        if (!forms[r].is_homogeneous(1))
            throw Error(ErrorKind::InvalidArgument, "expected a 1-form, got '" + forms[r].to_string() + "'");
        for (const auto& [basis, coef] : forms[r].terms()) m(r, basis[0]) = coef;
    }
    return m;
}

} // namespace

std::size_t rank_of_one_forms(std::span<const DifferentialForm> forms) {
    ChartPtr chart;
    return rank(one_form_matrix(forms, chart));
}

DifferentialForm reduce_modulo(const DifferentialForm& form, std::span<const DifferentialForm> generators) {
    ChartPtr chart;
    const ExprMatrix m = one_form_matrix(generators, chart);
    chart = common_chart(chart, form.chart());
    if (!chart) return form;
    // Columns reversed so pivots come from the last variables first.
    const std::size_t dim = m.cols();
    ExprMatrix rev(m.rows(), dim);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < dim; ++c) rev(r, c) = m(r, dim - 1 - c);
    const auto pivots = row_reduce(rev);
    std::vector<std::optional<DifferentialForm>> images(chart->dimension());
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        // Row r reads dv_p + sum_j rev(r, j) dv_j; it vanishes modulo the ideal.
        DifferentialForm img(chart);
        for (std::size_t j = 0; j < dim; ++j) {
            if (j == pivots[r] || rev(r, j).is_zero()) continue;
            img.add_term(Basis{static_cast<std::uint32_t>(dim - 1 - j)}, -rev(r, j));
        }
        images[dim - 1 - pivots[r]] = std::move(img);
    }
    return replace_differentials(form, images);
}

} // namespace lpg
