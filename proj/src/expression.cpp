#include "lpgeom/expression.hpp"

#include "lpgeom/error.hpp"

#include <map>
#include <utility>

namespace lpg {

ChartPtr common_chart(const ChartPtr& a, const ChartPtr& b) {
    if (!a) return b;
    if (!b) return a;
    if (same_chart(a, b)) return a;
    throw Error(ErrorKind::ChartMismatch, "operands live on different charts ('" + a->name() + "' and '" + b->name() + "')");
}

Expression Expression::symbol(ChartPtr chart, std::string_view name) {
    const std::size_t index = chart->require(name);
    return symbol(std::move(chart), index);
}

Expression Expression::symbol(ChartPtr chart, std::size_t index) {
    if (!chart || index >= chart->symbol_count())
        throw Error(ErrorKind::InvalidArgument, "symbol index out of range");
    Expression e;
    e.chart_ = std::move(chart);
    e.num_ = Polynomial::variable(index);
    return e;
}

Expression Expression::constant(ChartPtr chart, const Rational& value) {
    Expression e(value);
    e.chart_ = std::move(chart);
    return e;
}

Expression Expression::polynomial(ChartPtr chart, Polynomial p) {
    Expression e;
    e.chart_ = std::move(chart);
    e.num_ = std::move(p);
    return e;
}

Expression Expression::fraction(ChartPtr chart, Polynomial numerator, Polynomial denominator) {
    if (denominator.is_zero()) throw Error(ErrorKind::DivisionByZero, "denominator is the zero polynomial");
    Expression e;
    e.chart_ = std::move(chart);
    e.num_ = std::move(numerator);
    e.den_ = std::move(denominator);
    e.normalize();
    return e;
}

void Expression::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial(1);
        return;
    }
    if (den_.is_constant()) {
        const Rational c = den_.constant_value();
        if (c != 1) num_ *= Rational(1) / c;
        den_ = Polynomial(1);
        return;
    }
    const Polynomial g = gcd(num_, den_);
    if (!g.is_one()) {
        num_ = *exact_divide(num_, g);
        den_ = *exact_divide(den_, g);
    }
    const Rational lead = den_.leading_coefficient();
    if (lead != 1) {
        const Rational inv = Rational(1) / lead;
        num_ *= inv;
        den_ *= inv;
    }
    if (den_.is_constant()) den_ = Polynomial(1);
}

Rational Expression::constant_value() const {
    if (!is_constant()) throw Error(ErrorKind::InvalidArgument, "expression '" + to_string() + "' is not constant");
    return num_.constant_value();
}

bool Expression::is_free_of_variables() const noexcept {
    if (!chart_) return true;
    for (std::size_t i = 0; i < chart_->dimension(); ++i)
        if (num_.involves(i) || den_.involves(i)) return false;
    return true;
}

std::uint32_t Expression::degree() const noexcept {
    return std::max(num_.total_degree(), den_.total_degree());
}

Expression Expression::derivative(std::size_t symbol_index) const {
    Expression out;
    out.chart_ = chart_;
    if (den_.is_one()) {
        out.num_ = num_.derivative(symbol_index);
        return out;
    }
    out.num_ = num_.derivative(symbol_index) * den_ - num_ * den_.derivative(symbol_index);
    out.den_ = den_ * den_;
    out.normalize();
    return out;
}

Expression Expression::derivative(std::string_view symbol) const {
    if (!chart_) return Expression();
    return derivative(chart_->require(symbol));
}

namespace {

Expression evaluate(const Polynomial& p, std::span<const Expression> images, const ChartPtr& target,
                    std::map<std::pair<std::size_t, std::uint32_t>, Expression>& powers) {
    Expression total = Expression::constant(target, 0);
    for (const auto& [m, c] : p.terms()) {
        Expression t = Expression::constant(target, c);
        const auto ex = m.exponents();
        for (std::size_t i = 0; i < ex.size(); ++i) {
            if (ex[i] == 0) continue;
            auto key = std::make_pair(i, ex[i]);
            auto it = powers.find(key);
            if (it == powers.end()) it = powers.emplace(key, pow(images[i], ex[i])).first;
            t *= it->second;
        }
        total += t;
    }
    return total;
}

} // namespace

Expression Expression::substitute(std::span<const Expression> images, const ChartPtr& target) const {
    const std::size_t needed = chart_ ? chart_->symbol_count() : 0;
    if (images.size() < needed)
        throw Error(ErrorKind::InvalidArgument, "substitution does not cover every symbol");
    std::map<std::pair<std::size_t, std::uint32_t>, Expression> powers;
    Expression n = evaluate(num_, images, target, powers);
    if (den_.is_one()) return n;
    Expression d = evaluate(den_, images, target, powers);
    if (d.is_zero()) throw Error(ErrorKind::DivisionByZero, "substitution makes a denominator vanish");
    return n / d;
}

Expression Expression::rebind(const ChartPtr& target) const {
    if (same_chart(chart_, target)) {
        Expression e = *this;
        e.chart_ = target;
        return e;
    }
    std::vector<Expression> images;
    if (chart_) {
        images.reserve(chart_->symbol_count());
        for (std::size_t i = 0; i < chart_->symbol_count(); ++i) {
            const auto& name = chart_->symbol(i);
            const bool used = num_.involves(i) || den_.involves(i);
            if (!target || !target->index_of(name)) {
                if (used)
                    throw Error(ErrorKind::ChartMismatch, "symbol '" + name + "' is not available on chart '" +
                                                              (target ? target->name() : std::string("<none>")) + "'");
                images.push_back(Expression::constant(target, 0));
            } else {
                images.push_back(Expression::symbol(target, name));
            }
        }
    }
    return substitute(images, target);
}

Expression Expression::operator-() const {
    Expression e = *this;
    e.num_ = -e.num_;
    return e;
}

Expression& Expression::operator+=(const Expression& other) {
    chart_ = common_chart(chart_, other.chart_);
    if (den_.is_one() && other.den_.is_one()) {
        num_ += other.num_;
        return *this;
    }
    if (den_ == other.den_) {
        num_ += other.num_;
    } else {
        num_ = num_ * other.den_ + other.num_ * den_;
        den_ = den_ * other.den_;
    }
    normalize();
    return *this;
}

Expression& Expression::operator-=(const Expression& other) {
    return *this += -other;
}

Expression& Expression::operator*=(const Expression& other) {
    chart_ = common_chart(chart_, other.chart_);
    if (den_.is_one() && other.den_.is_one()) {
        num_ = num_ * other.num_;
        return *this;
    }
    num_ = num_ * other.num_;
    den_ = den_ * other.den_;
    normalize();
    return *this;
}

Expression& Expression::operator/=(const Expression& other) {
    chart_ = common_chart(chart_, other.chart_);
    if (other.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by the zero expression");
    num_ = num_ * other.den_;
    den_ = den_ * other.num_;
    normalize();
    return *this;
}

bool operator==(const Expression& a, const Expression& b) {
    if (a.chart_ && b.chart_ && !same_chart(a.chart_, b.chart_)) return false;
    return a.num_ == b.num_ && a.den_ == b.den_;
}

Expression pow(const Expression& base, unsigned exponent) {
    Expression result = Expression::constant(base.chart(), 1);
    Expression square = base;
    while (exponent != 0) {
        if (exponent & 1u) result *= square;
        exponent >>= 1u;
        if (exponent != 0) square *= square;
    }
    return result;
}

std::string polynomial_to_string(const Polynomial& p, const Chart* chart) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        std::string factors;
        const auto ex = m.exponents();
        for (std::size_t i = 0; i < ex.size(); ++i) {
            for (std::uint32_t k = 0; k < ex[i]; ++k) {
                if (!factors.empty()) factors += '*';
                factors += chart ? chart->symbol(i) : "s" + std::to_string(i);
            }
        }
        std::string term;
        if (factors.empty()) term = to_string(mag);
        else if (mag == 1) term = factors;
        else term = to_string(mag) + "*" + factors;
        if (first) out = negative ? "-" + term : term;
        else out += (negative ? " - " : " + ") + term;
        first = false;
    }
    return out;
}

std::string Expression::to_string() const {
    const Chart* c = chart_.get();
    std::string n = polynomial_to_string(num_, c);
    if (den_.is_one()) return n;
    if (num_.size() > 1) n = "(" + n + ")";
    std::string d = polynomial_to_string(den_, c);
    const bool bare_symbol = den_.size() == 1 && den_.leading_monomial().degree() == 1;
    if (!bare_symbol) d = "(" + d + ")";
    return n + "/" + d;
}

} // namespace lpg
