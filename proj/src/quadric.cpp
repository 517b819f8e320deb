#include "lpgeom/quadric.hpp"

#include "lpgeom/error.hpp"

#include <functional>
#include <unordered_map>

namespace lpg::quadric {

QuadricCoefficients::QuadricCoefficients(Expression a0, std::vector<Expression> a, ExprMatrix A)
    : a0_(std::move(a0)), a_(std::move(a)), A_(std::move(A)) {
    const std::size_t n = a_.size();
    if (A_.rows() != n || A_.cols() != n)
        throw Error(ErrorKind::InvalidArgument, "A must be " + std::to_string(n) + "x" + std::to_string(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!(A_(i, j) == A_(j, i)))
                throw Error(ErrorKind::SymmetryViolation,
                            "A[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "] = " + A_(i, j).to_string() +
                                " differs from A[" + std::to_string(j + 1) + "][" + std::to_string(i + 1) +
                                "] = " + A_(j, i).to_string());
    chart();
}

ChartPtr QuadricCoefficients::chart() const {
    ChartPtr c = a0_.chart();
    for (const auto& e : a_) c = common_chart(c, e.chart());
    for (std::size_t i = 0; i < A_.rows(); ++i)
        for (std::size_t j = 0; j < A_.cols(); ++j) c = common_chart(c, A_(i, j).chart());
    return c;
}

Expression QuadricCoefficients::u_at(std::span<const Expression> x) const {
    const std::size_t n = this->n();
    Expression u = a0_;
    for (std::size_t i = 0; i < n; ++i) {
        u += a_[i] * x[i];
        for (std::size_t j = 0; j < n; ++j) u += Expression(Rational(1, 2)) * A_(i, j) * x[i] * x[j];
    }
    return u;
}

std::vector<Expression> QuadricCoefficients::p_at(std::span<const Expression> x) const {
    const std::size_t n = this->n();
    std::vector<Expression> p;
    for (std::size_t i = 0; i < n; ++i) {
        Expression pi = a_[i];
        for (std::size_t j = 0; j < n; ++j) pi += A_(i, j) * x[j];
        p.push_back(pi);
    }
    return p;
}

namespace {

struct Jet2 {
    Expression value;
    std::vector<Expression> gradient;
    ExprMatrix hessian;
};

Jet2 two_jet(const Expression& f) {
    const ChartPtr& c = f.chart();
    const std::size_t n = c ? c->dimension() : 0;
    Jet2 j{f, {}, ExprMatrix(n, n)};
    for (std::size_t i = 0; i < n; ++i) j.gradient.push_back(f.derivative(i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) j.hessian(i, k) = j.gradient[i].derivative(k);
    return j;
}

QuadricCoefficients from_jet(const Jet2& j, std::span<const Expression> x) {
    const std::size_t n = j.gradient.size();
    std::vector<Expression> a;
    for (std::size_t i = 0; i < n; ++i) {
        Expression ai = j.gradient[i];
        for (std::size_t k = 0; k < n; ++k) ai -= j.hessian(i, k) * x[k];
        a.push_back(ai);
    }
    Expression a0 = j.value;
    for (std::size_t i = 0; i < n; ++i) {
        a0 -= a[i] * x[i];
        for (std::size_t k = 0; k < n; ++k) a0 -= Expression(Rational(1, 2)) * j.hessian(i, k) * x[i] * x[k];
    }
    return QuadricCoefficients(a0, std::move(a), j.hessian);
}

} // namespace

QuadricCoefficients osculating_quadric(const Expression& f, std::span<const Rational> x0) {
    const ChartPtr& c = f.chart();
    const std::size_t n = c ? c->dimension() : 0;
    if (x0.size() != n)
        throw Error(ErrorKind::InvalidArgument, "point has " + std::to_string(x0.size()) + " coordinates, expected " +
                                                    std::to_string(n));
    if (!f.is_polynomial()) throw Error(ErrorKind::InvalidArgument, "osculating quadric needs a polynomial");
    std::vector<Expression> images;
    for (std::size_t i = 0; i < n; ++i) images.push_back(Expression::constant(c, x0[i]));
    for (std::size_t i = n; i < (c ? c->symbol_count() : 0); ++i) images.push_back(Expression::symbol(c, i));
    Jet2 j = two_jet(f);
    auto at = [&](const Expression& e) { return e.substitute(images, c); };
    j.value = at(j.value);
    for (auto& g : j.gradient) g = at(g);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k < n; ++k) j.hessian(r, k) = at(j.hessian(r, k));
    std::vector<Expression> x(images.begin(), images.begin() + static_cast<std::ptrdiff_t>(n));
    return from_jet(j, x);
}

QuadricFamily osculating_family(const Expression& f) {
    const ChartPtr& c = f.chart();
    if (!c) throw Error(ErrorKind::InvalidArgument, "osculating family needs f on a chart");
    if (!f.is_polynomial()) throw Error(ErrorKind::InvalidArgument, "osculating family needs a polynomial");
    std::vector<Expression> x;
    for (std::size_t i = 0; i < c->dimension(); ++i) x.push_back(Expression::symbol(c, i));
    return QuadricFamily{c, from_jet(two_jet(f), x)};
}

FormMatrix differential_matrix(const QuadricFamily& family) {
    const auto& q = family.coefficients;
    const std::size_t n = q.n();
    const ChartPtr& c = family.parameters;
    auto d = [&](const Expression& e) { return exterior_derivative(DifferentialForm(Expression::constant(c, 0) + e)); };
    FormMatrix m = zero_forms(n + 1, n + 1, c);
    m(0, 0) = d(q.a0()) * Expression(2);
    for (std::size_t i = 0; i < n; ++i) {
        m(0, i + 1) = d(q.a()[i]);
        m(i + 1, 0) = m(0, i + 1);
        for (std::size_t j = 0; j < n; ++j) m(i + 1, j + 1) = d(q.A()(i, j));
    }
    return m;
}

NullVectorResult null_vector_check(const QuadricFamily& family, std::span<const Expression> X) {
    const std::size_t n = family.coefficients.n();
    if (X.size() != n)
        throw Error(ErrorKind::InvalidArgument, "null vector needs " + std::to_string(n) + " components");
    const FormMatrix m = differential_matrix(family);
    NullVectorResult r;
    for (std::size_t row = 0; row <= n; ++row) {
        DifferentialForm s = m(row, 0);
        for (std::size_t j = 0; j < n; ++j) s += X[j] * m(row, j + 1);
        if (!s.is_zero()) r.pass = false;
        r.residuals.push_back(std::move(s));
    }
    return r;
}

SymmetricDifferential SymmetricDifferential::from_one_form(const DifferentialForm& form) {
    SymmetricDifferential s(form.chart());
    for (const auto& [basis, coef] : form.terms()) {
        if (basis.size() != 1)
            throw Error(ErrorKind::InvalidArgument, "symmetric product needs 1-forms, got '" + form.to_string() + "'");
        s.add_term(Monomial::variable(basis[0]), coef);
    }
    return s;
}

std::uint32_t SymmetricDifferential::degree() const noexcept {
    return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

void SymmetricDifferential::add_term(const Monomial& m, const Expression& c) {
    chart_ = common_chart(chart_, c.chart());
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

SymmetricDifferential& SymmetricDifferential::operator+=(const SymmetricDifferential& other) {
    chart_ = common_chart(chart_, other.chart_);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

SymmetricDifferential& SymmetricDifferential::operator-=(const SymmetricDifferential& other) {
    chart_ = common_chart(chart_, other.chart_);
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

SymmetricDifferential operator*(const SymmetricDifferential& a, const SymmetricDifferential& b) {
    SymmetricDifferential out(common_chart(a.chart_, b.chart_));
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

std::string SymmetricDifferential::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, coef] : terms_) {
        std::string factors;
        const auto ex = m.exponents();
        for (std::size_t i = 0; i < ex.size(); ++i) {
            if (ex[i] == 0) continue;
            if (!factors.empty()) factors += '*';
            factors += "d(" + (chart_ ? chart_->symbol(i) : "s" + std::to_string(i)) + ")";
            if (ex[i] > 1) factors += "^" + std::to_string(ex[i]);
        }
        bool negative = false;
        std::string c;
        if (!coef.is_polynomial() || coef.numerator().size() > 1) {
            c = "(" + coef.to_string() + ")";
        } else {
            negative = coef.numerator().leading_coefficient() < 0;
            c = (negative ? -coef : coef).to_string();
        }
        std::string term = factors.empty() ? c : (c == "1" ? factors : c + "*" + factors);
        if (first) out = negative ? "-" + term : term;
        else out += (negative ? " - " : " + ") + term;
        first = false;
    }
    return out;
}

SymmetricDifferential symmetric_differential(const QuadricFamily& family) {
    const FormMatrix m = differential_matrix(family);
    const std::size_t N = m.rows();
    std::vector<SymmetricDifferential> entries;
    for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = 0; c < N; ++c) entries.push_back(SymmetricDifferential::from_one_form(m(r, c)));
    // Laplace expansion along successive rows, memoized on the used columns.
    std::unordered_map<std::uint64_t, SymmetricDifferential> memo;
    std::function<SymmetricDifferential(std::size_t, std::uint64_t)> minor =
        [&](std::size_t row, std::uint64_t used) -> SymmetricDifferential {
        if (row == N) {
            SymmetricDifferential one(family.parameters);
            one.add_term(Monomial(), Expression(1));
            return one;
        }
        if (auto it = memo.find(used); it != memo.end()) return it->second;
        SymmetricDifferential total(family.parameters);
        std::size_t free_index = 0;
        for (std::size_t c = 0; c < N; ++c) {
            if (used & (std::uint64_t{1} << c)) continue;
            const auto& e = entries[row * N + c];
            if (!e.is_zero()) {
                SymmetricDifferential t = e * minor(row + 1, used | (std::uint64_t{1} << c));
                if (free_index % 2 == 0) total += t;
                else total -= t;
            }
            ++free_index;
        }
        memo.emplace(used, total);
        return total;
    };
    return minor(0, 0);
}

Developable developable_from_family(const QuadricFamily& family, std::span<const Expression> V) {
    const auto check = null_vector_check(family, V);
    if (!check.pass) {
        for (std::size_t r = 0; r < check.residuals.size(); ++r)
            if (!check.residuals[r].is_zero())
                throw Error(ErrorKind::Precondition, "null vector condition fails in row " + std::to_string(r) + ": " +
                                                         check.residuals[r].to_string());
    }
    DifferentialForm vol(Expression::constant(family.parameters, 1));
    for (const auto& v : V) vol = wedge(vol, exterior_derivative(DifferentialForm(Expression::constant(family.parameters, 0) + v)));
    if (vol.is_zero()) throw Error(ErrorKind::Precondition, "dv^1 /\\ ... /\\ dv^n vanishes (degenerate Jacobian)");
    const auto& q = family.coefficients;
    return Developable{Expression::constant(family.parameters, 0) + q.u_at(V), q.p_at(V)};
}

} // namespace lpg::quadric
