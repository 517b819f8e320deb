#pragma once

#include "lpgeom/chart.hpp"
#include "lpgeom/polynomial.hpp"
#include "lpgeom/rational.hpp"

#include <span>
#include <string>
#include <string_view>

namespace lpg {

/// Exact rational function in the symbols of a chart, kept in canonical form:
/// gcd(numerator, denominator) = 1 and the denominator is monic. Two
/// Expressions are equal iff their stored polynomials are identical.
///
/// A null chart marks a chart-free constant, which combines with an
/// Expression on any chart. Binary operations on two different charts throw
/// ChartMismatch.
class Expression {
public:
    Expression() : den_(1) {}
    Expression(const Rational& constant) : num_(canonical(constant)), den_(1) {}
    Expression(long constant) : Expression(Rational(constant)) {}

    static Expression symbol(ChartPtr chart, std::string_view name);
    static Expression symbol(ChartPtr chart, std::size_t index);
    static Expression constant(ChartPtr chart, const Rational& value);
    static Expression polynomial(ChartPtr chart, Polynomial p);
    // Throws DivisionByZero when the denominator is the zero polynomial.
    static Expression fraction(ChartPtr chart, Polynomial numerator, Polynomial denominator);

    const ChartPtr& chart() const noexcept { return chart_; }
    const Polynomial& numerator() const noexcept { return num_; }
    const Polynomial& denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
    bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const noexcept { return den_.is_one(); }
    // Throws InvalidArgument when not constant.
    Rational constant_value() const;
    // True when only parameters (no chart variables) occur.
    bool is_free_of_variables() const noexcept;
    // Highest total degree among numerator and denominator.
    std::uint32_t degree() const noexcept;

    Expression derivative(std::size_t symbol_index) const;
    Expression derivative(std::string_view symbol) const;

    /// Ring homomorphism: replaces symbol i of this chart by images[i]
    /// (all on `target`). images.size() must equal chart()->symbol_count().
    Expression substitute(std::span<const Expression> images, const ChartPtr& target) const;

    /// Same value viewed on another chart whose symbols include all symbols
    /// used here (matched by name).
    Expression rebind(const ChartPtr& target) const;

    Expression operator-() const;
    Expression& operator+=(const Expression& other);
    Expression& operator-=(const Expression& other);
    Expression& operator*=(const Expression& other);
    Expression& operator/=(const Expression& other);
    friend Expression operator+(Expression a, const Expression& b) { return a += b; }
    friend Expression operator-(Expression a, const Expression& b) { return a -= b; }
    friend Expression operator*(Expression a, const Expression& b) { return a *= b; }
    friend Expression operator/(Expression a, const Expression& b) { return a /= b; }
    friend bool operator==(const Expression& a, const Expression& b);

    /// Canonical text in the expression grammar.
    std::string to_string() const;

private:
    void normalize();

    ChartPtr chart_;
    Polynomial num_;
    Polynomial den_;
};

Expression pow(const Expression& base, unsigned exponent);

// Chart of a binary operation's result; throws ChartMismatch.
ChartPtr common_chart(const ChartPtr& a, const ChartPtr& b);

// Text of a polynomial using the chart's symbol names.
std::string polynomial_to_string(const Polynomial& p, const Chart* chart);

} // namespace lpg
