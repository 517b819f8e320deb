#pragma once

#include "lpgeom/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace lpg {

/// Exponent vector over symbol indices 0..k-1. Trailing zero exponents are
/// never stored, so equal monomials have equal representations.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::uint32_t> exponents);

    static Monomial variable(std::size_t index, std::uint32_t power = 1);

    std::uint32_t degree() const noexcept { return degree_; }
    std::uint32_t exponent(std::size_t index) const noexcept {
        return index < exponents_.size() ? exponents_[index] : 0;
    }
    std::span<const std::uint32_t> exponents() const noexcept { return exponents_; }
    bool is_one() const noexcept { return exponents_.empty(); }

    bool divides(const Monomial& other) const noexcept;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    // Precondition: b divides a.
    friend Monomial operator/(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
        return a.exponents_ == b.exponents_;
    }

private:
    void trim();

    std::vector<std::uint32_t> exponents_;
    std::uint32_t degree_ = 0;
};

// Graded lexicographic, largest first. This is a monomial order, so the first
// map entry is the leading term used by division.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const noexcept;
};

/// Sparse multivariate polynomial with exact rational coefficients.
class Polynomial {
public:
    using Terms = std::map<Monomial, Rational, MonomialOrder>;

    Polynomial() = default;
    Polynomial(const Rational& constant);
    Polynomial(long constant) : Polynomial(Rational(constant)) {}

    static Polynomial variable(std::size_t index);
    static Polynomial term(const Rational& coefficient, Monomial monomial);

    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    bool is_one() const noexcept;
    // Zero for the zero polynomial.
    Rational constant_value() const;
    const Monomial& leading_monomial() const;
    const Rational& leading_coefficient() const;

    std::uint32_t total_degree() const noexcept;
    std::uint32_t degree_in(std::size_t index) const noexcept;
    // Highest symbol index with a nonzero exponent, if any.
    std::optional<std::size_t> max_symbol() const noexcept;
    bool involves(std::size_t index) const noexcept;

    // View as a univariate polynomial in `index`: exponent -> coefficient.
    std::map<std::uint32_t, Polynomial> coefficients_in(std::size_t index) const;

    Polynomial derivative(std::size_t index) const;
    // Divides by the leading coefficient; zero stays zero.
    Polynomial monic() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Rational& scalar);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

    void add_term(const Monomial& monomial, const Rational& coefficient);

private:
    Terms terms_;
};

Polynomial pow(const Polynomial& base, unsigned exponent);

/// Quotient if `divisor` divides `dividend` exactly in Q[x], else nullopt.
std::optional<Polynomial> exact_divide(const Polynomial& dividend, const Polynomial& divisor);

/// Monic greatest common divisor (zero only when both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

} // namespace lpg
