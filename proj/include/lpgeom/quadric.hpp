#pragma once

#include "lpgeom/chart.hpp"
#include "lpgeom/expression.hpp"
#include "lpgeom/form.hpp"
#include "lpgeom/matrix.hpp"
#include "lpgeom/polynomial.hpp"

#include <map>
#include <string>
#include <vector>

namespace lpg::quadric {

/// Coefficients of u = a0 + Σ a_i x^i + ½ Σ a_ij x^i x^j. Entries may be
/// constants or Expressions on a common chart; A is exactly symmetric.
class QuadricCoefficients {
public:
    // Throws SymmetryViolation naming the offending entries.
    QuadricCoefficients(Expression a0, std::vector<Expression> a, ExprMatrix A);

    std::size_t n() const noexcept { return a_.size(); }
    const Expression& a0() const noexcept { return a0_; }
    const std::vector<Expression>& a() const noexcept { return a_; }
    const ExprMatrix& A() const noexcept { return A_; }
    ChartPtr chart() const;

    // u and p_i of the quadric at the point x (Expressions on any chart).
    Expression u_at(std::span<const Expression> x) const;
    std::vector<Expression> p_at(std::span<const Expression> x) const;

    friend bool operator==(const QuadricCoefficients& l, const QuadricCoefficients& r) {
        return l.a0_ == r.a0_ && l.a_ == r.a_ && l.A_ == r.A_;
    }

private:
    Expression a0_;
    std::vector<Expression> a_;
    ExprMatrix A_;
};

/// A family of quadrics parametrized by the variables of `parameters`.
struct QuadricFamily {
    ChartPtr parameters;
    QuadricCoefficients coefficients;
};

/// Osculating quadric of the graph u = f(x) at x0. The variables of f's chart
/// are the coordinates x^1..x^n in order.
QuadricCoefficients osculating_quadric(const Expression& f, std::span<const Rational> x0);

/// The family x0 -> osculating_quadric(f, x0), parametrized by f's own chart.
QuadricFamily osculating_family(const Expression& f);

/// (2da0, da^t; da, dA) on the parameter chart; symmetric.
FormMatrix differential_matrix(const QuadricFamily& family);

struct NullVectorResult {
    bool pass = true;
    // Row 0 is 2da0 + Σ X_i da_i, row i is da_i + Σ X_j dA_ij.
    std::vector<DifferentialForm> residuals;
};

NullVectorResult null_vector_check(const QuadricFamily& family, std::span<const Expression> X);

/// Polynomial in the parameter differentials with Expression coefficients;
/// the differentials commute. Printed as e.g. 2*d(t)^3 (output only).
class SymmetricDifferential {
public:
    using Terms = std::map<Monomial, Expression, MonomialOrder>;

    explicit SymmetricDifferential(ChartPtr chart) : chart_(std::move(chart)) {}
    static SymmetricDifferential from_one_form(const DifferentialForm& form);

    const ChartPtr& chart() const noexcept { return chart_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::uint32_t degree() const noexcept;

    SymmetricDifferential& operator+=(const SymmetricDifferential& other);
    SymmetricDifferential& operator-=(const SymmetricDifferential& other);
    friend SymmetricDifferential operator*(const SymmetricDifferential& a, const SymmetricDifferential& b);
    friend bool operator==(const SymmetricDifferential& a, const SymmetricDifferential& b) {
        return a.terms_ == b.terms_;
    }

    void add_term(const Monomial& m, const Expression& c);
    std::string to_string() const;

private:
    ChartPtr chart_;
    Terms terms_;
};

/// det of differential_matrix(family) in the symmetric algebra.
SymmetricDifferential symmetric_differential(const QuadricFamily& family);

struct Developable {
    Expression u;
    std::vector<Expression> p;
};

/// u = a0 + a·V + ½ VᵗAV and p = a + AV on the parameter chart. Throws
/// Precondition if the null-vector condition fails (the message carries the
/// residue) or if dv^1 ∧ ... ∧ dv^n = 0.
Developable developable_from_family(const QuadricFamily& family, std::span<const Expression> V);

} // namespace lpg::quadric
