#include "lpgeom/polynomial.hpp"

#include "lpgeom/error.hpp"

#include <algorithm>
#include <utility>

namespace lpg {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<std::uint32_t> exponents) : exponents_(std::move(exponents)) {
    trim();
}

void Monomial::trim() {
    while (!exponents_.empty() && exponents_.back() == 0) exponents_.pop_back();
    degree_ = 0;
    for (auto e : exponents_) degree_ += e;
}

Monomial Monomial::variable(std::size_t index, std::uint32_t power) {
    std::vector<std::uint32_t> e(index + 1, 0);
    e[index] = power;
    return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const noexcept {
    if (exponents_.size() > other.exponents_.size()) return false;
    for (std::size_t i = 0; i < exponents_.size(); ++i)
        if (exponents_[i] > other.exponents_[i]) return false;
    return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    const auto& longer = a.exponents_.size() >= b.exponents_.size() ? a : b;
    const auto& shorter = a.exponents_.size() >= b.exponents_.size() ? b : a;
    Monomial out;
    out.exponents_ = longer.exponents_;
    for (std::size_t i = 0; i < shorter.exponents_.size(); ++i) out.exponents_[i] += shorter.exponents_[i];
    out.degree_ = a.degree_ + b.degree_;
    return out;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.exponents_ = a.exponents_;
    for (std::size_t i = 0; i < b.exponents_.size(); ++i) out.exponents_[i] -= b.exponents_[i];
    out.trim();
    return out;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const noexcept {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    auto ea = a.exponents();
    auto eb = b.exponents();
    const std::size_t n = std::max(ea.size(), eb.size());
    for (std::size_t i = 0; i < n; ++i) {
        const auto x = i < ea.size() ? ea[i] : 0u;
        const auto y = i < eb.size() ? eb[i] : 0u;
        if (x != y) return x > y;
    }
    return false;
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(const Rational& constant) {
    if (constant != 0) terms_.emplace(Monomial(), constant);
}

Polynomial Polynomial::variable(std::size_t index) {
    return term(Rational(1), Monomial::variable(index));
}

Polynomial Polynomial::term(const Rational& coefficient, Monomial monomial) {
    Polynomial p;
    if (coefficient != 0) p.terms_.emplace(std::move(monomial), coefficient);
    return p;
}

bool Polynomial::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

bool Polynomial::is_one() const noexcept {
    return terms_.size() == 1 && terms_.begin()->first.is_one() && terms_.begin()->second == 1;
}

Rational Polynomial::constant_value() const {
    auto it = terms_.find(Monomial());
    return it == terms_.end() ? Rational(0) : it->second;
}

const Monomial& Polynomial::leading_monomial() const {
    if (terms_.empty()) throw Error(ErrorKind::InvalidArgument, "leading term of zero polynomial");
    return terms_.begin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
    if (terms_.empty()) throw Error(ErrorKind::InvalidArgument, "leading term of zero polynomial");
    return terms_.begin()->second;
}

std::uint32_t Polynomial::total_degree() const noexcept {
    return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

std::uint32_t Polynomial::degree_in(std::size_t index) const noexcept {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(index));
    return d;
}

std::optional<std::size_t> Polynomial::max_symbol() const noexcept {
    std::optional<std::size_t> best;
    for (const auto& [m, c] : terms_) {
        const auto s = m.exponents().size();
        if (s > 0 && (!best || s - 1 > *best)) best = s - 1;
    }
    return best;
}

bool Polynomial::involves(std::size_t index) const noexcept {
    for (const auto& [m, c] : terms_)
        if (m.exponent(index) != 0) return true;
    return false;
}

std::map<std::uint32_t, Polynomial> Polynomial::coefficients_in(std::size_t index) const {
    std::map<std::uint32_t, Polynomial> out;
    for (const auto& [m, c] : terms_) {
        const auto e = m.exponent(index);
        std::vector<std::uint32_t> rest(m.exponents().begin(), m.exponents().end());
        if (index < rest.size()) rest[index] = 0;
        out[e].add_term(Monomial(std::move(rest)), c);
    }
    return out;
}

Polynomial Polynomial::derivative(std::size_t index) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        const auto e = m.exponent(index);
        if (e == 0) continue;
        std::vector<std::uint32_t> ex(m.exponents().begin(), m.exponents().end());
        ex[index] -= 1;
        out.add_term(Monomial(std::move(ex)), c * e);
    }
    return out;
}

Polynomial Polynomial::monic() const {
    if (terms_.empty()) return *this;
    const Rational lead = leading_coefficient();
    if (lead == 1) return *this;
    Polynomial out = *this;
    out *= Rational(1) / lead;
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

void Polynomial::add_term(const Monomial& monomial, const Rational& coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(monomial, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= scalar;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    if (a.is_zero() || b.is_zero()) return out;
    if (a.is_constant()) return b * a.constant_value();
    if (b.is_constant()) return a * b.constant_value();
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

Polynomial pow(const Polynomial& base, unsigned exponent) {
    Polynomial result(1);
    Polynomial square = base;
    while (exponent != 0) {
        if (exponent & 1u) result = result * square;
        exponent >>= 1u;
        if (exponent != 0) square = square * square;
    }
    return result;
}

std::optional<Polynomial> exact_divide(const Polynomial& dividend, const Polynomial& divisor) {
    if (divisor.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    if (divisor.is_constant()) return dividend * (Rational(1) / divisor.constant_value());
    Polynomial quotient;
    Polynomial rest = dividend;
    const Monomial& lead = divisor.leading_monomial();
    const Rational& lead_c = divisor.leading_coefficient();
    while (!rest.is_zero()) {
        const Monomial& lr = rest.leading_monomial();
        if (!lead.divides(lr)) return std::nullopt;
        Polynomial t = Polynomial::term(rest.leading_coefficient() / lead_c, lr / lead);
        quotient += t;
        rest -= t * divisor;
    }
    return quotient;
}

namespace {

Polynomial must_divide(const Polynomial& a, const Polynomial& b) {
    auto q = exact_divide(a, b);
    if (!q) throw Error(ErrorKind::InvalidArgument, "internal: inexact polynomial division in gcd");
    return *q;
}

Polynomial monomial_gcd(const Monomial& m, const Polynomial& other) {
    std::vector<std::uint32_t> e(m.exponents().begin(), m.exponents().end());
    for (const auto& [mo, c] : other.terms())
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(e[i], mo.exponent(i));
    return Polynomial::term(Rational(1), Monomial(std::move(e)));
}

Polynomial content_in(const Polynomial& p, std::size_t v) {
    Polynomial g;
    for (const auto& [e, c] : p.coefficients_in(v)) {
        g = gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

Polynomial pseudo_remainder(Polynomial f, const Polynomial& g, std::size_t v) {
    const std::uint32_t dg = g.degree_in(v);
    const auto gc = g.coefficients_in(v);
    const Polynomial& lead_g = gc.rbegin()->second;
    while (!f.is_zero()) {
        const std::uint32_t df = f.degree_in(v);
        if (df < dg) break;
        const Polynomial lead_f = f.coefficients_in(v).rbegin()->second;
        f = f * lead_g - lead_f * Polynomial::term(Rational(1), Monomial::variable(v, df - dg)) * g;
    }
    return f;
}

// Both inputs primitive with respect to v and of positive degree in v.
Polynomial primitive_prs(Polynomial f, Polynomial g, std::size_t v) {
    if (f.degree_in(v) < g.degree_in(v)) std::swap(f, g);
    for (;;) {
        Polynomial r = pseudo_remainder(f, g, v);
        if (r.is_zero()) return g;
        if (r.degree_in(v) == 0) return Polynomial(1);
        f = std::move(g);
        g = must_divide(r, content_in(r, v));
    }
}

} // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Polynomial(1);
    if (a == b) return a.monic();
    if (a.size() == 1) return monomial_gcd(a.leading_monomial(), b);
    if (b.size() == 1) return monomial_gcd(b.leading_monomial(), a);

    const std::size_t v = std::max(*a.max_symbol(), *b.max_symbol());
    if (!a.involves(v)) return gcd(a, content_in(b, v));
    if (!b.involves(v)) return gcd(content_in(a, v), b);

    const Polynomial ca = content_in(a, v);
    const Polynomial cb = content_in(b, v);
    const Polynomial pa = must_divide(a, ca);
    const Polynomial pb = must_divide(b, cb);
    const Polynomial c = gcd(ca, cb);
    return (c * primitive_prs(pa, pb, v)).monic();
}

} // namespace lpg
