#pragma once

#include "lpgeom/chart.hpp"
#include "lpgeom/expression.hpp"
#include "lpgeom/form.hpp"
#include "lpgeom/matrix.hpp"
#include "lpgeom/quadric.hpp"

#include <span>
#include <vector>

namespace lpg::flat {

using Vector = std::vector<Expression>;

/// R^{2n+2} with coordinates x0..xn, y0..yn and varpi = Σ dx^A ∧ dy^A.
/// Vector components follow the same order.
class SymplecticSpace {
public:
    explicit SymplecticSpace(unsigned n);

    unsigned n() const noexcept { return n_; }
    std::size_t dimension() const noexcept { return 2 * n_ + 2; }
    const ChartPtr& chart() const noexcept { return chart_; }
    const DifferentialForm& varpi() const noexcept { return varpi_; }

    // varpi(u, w), read off varpi's coefficients.
    Expression pairing(std::span<const Expression> u, std::span<const Expression> w) const;

private:
    unsigned n_;
    ChartPtr chart_;
    DifferentialForm varpi_;
};

/// v ⌟ varpi for a constant vector v; throws InvalidArgument for v = 0.
DifferentialForm contact_form_at_line(std::span<const Rational> v, const SymplecticSpace& space);

/// Span of linearly independent vectors (entries may be symbolic).
class LinearSubspace {
public:
    // Throws Degenerate if the vectors are dependent.
    LinearSubspace(SymplecticSpace space, std::vector<Vector> basis);

    const SymplecticSpace& space() const noexcept { return space_; }
    const std::vector<Vector>& basis() const noexcept { return basis_; }
    std::size_t dimension() const noexcept { return basis_.size(); }

    bool contains(std::span<const Expression> v) const;
    friend bool operator==(const LinearSubspace& a, const LinearSubspace& b);

private:
    SymplecticSpace space_;
    std::vector<Vector> basis_;
};

/// Throws InvalidArgument unless the plane has dimension n+1.
bool is_lagrangian(const LinearSubspace& plane);

/// {Y0 = 2 a0 X0 + Σ a_i X^i, Y^i = a_i X0 + Σ_j a_ij X^j}, spanned by the
/// images of e_{x0}..e_{xn}. A need not be symmetric here.
LinearSubspace graph_plane(const SymplecticSpace& space, const Expression& a0, std::span<const Expression> a,
                           const ExprMatrix& A);

LinearSubspace quadric_to_lagrangian(const quadric::QuadricCoefficients& q, const SymplecticSpace& space);

struct ChartIdentityResult {
    bool pass = false;
    // Σ (X dY − Y dX) pulled back, 2(du − Σ p dx), and their difference.
    DifferentialForm lhs;
    DifferentialForm rhs;
    DifferentialForm residual;
    // θ0 ∧ (dθ0)^n ≠ 0 for θ0 = du − Σ p dx.
    bool contact_nondegenerate = false;
};

/// Checks Σ_A (X^A dY^A − Y^A dX^A) = 2(du − Σ p^i dx^i) under X0 = 1,
/// X^i = x^i, Y0 = 2u − Σ x^i p^i, Y^i = p^i on the chart x1..xn, u, p1..pn.
ChartIdentityResult verify_chart_identity(unsigned n);

struct IncidenceResult {
    bool pass = false;
    Vector point;
    // point − Σ X^A b_A for the graph basis b_A; zero iff incident.
    Vector residual;
};

/// Embeds x0 with u, p from the quadric and tests membership in the plane.
IncidenceResult quadric_plane_incidence(const quadric::QuadricCoefficients& q, std::span<const Expression> x0);

} // namespace lpg::flat
