#pragma once

#include "lpgeom/chart.hpp"
#include "lpgeom/expression.hpp"
#include "lpgeom/form.hpp"
#include "lpgeom/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lpg::jets {

/// Chart with variables x1..xn, u, p1..pn, pij (i <= j), in that order,
/// optionally followed by constant parameters. Indices below are 1-based.
class JetChart {
public:
    explicit JetChart(unsigned n, std::vector<std::string> parameters = {});

    unsigned n() const noexcept { return n_; }
    const ChartPtr& chart() const noexcept { return chart_; }

    std::size_t x(unsigned i) const;
    std::size_t u() const noexcept { return n_; }
    std::size_t p(unsigned i) const;
    // Symmetric: p(i, j) == p(j, i).
    std::size_t p(unsigned i, unsigned j) const;

    Expression x_expr(unsigned i) const { return Expression::symbol(chart_, x(i)); }
    Expression u_expr() const { return Expression::symbol(chart_, u()); }
    Expression p_expr(unsigned i) const { return Expression::symbol(chart_, p(i)); }
    Expression p_expr(unsigned i, unsigned j) const { return Expression::symbol(chart_, p(i, j)); }
    DifferentialForm dx(unsigned i) const { return DifferentialForm::differential(chart_, x(i)); }

    // Chart x1..xn carrying the same parameters; the domain of lifts.
    ChartPtr base_chart() const;

    static std::string p_name(unsigned n, unsigned i, unsigned j);

private:
    unsigned n_;
    ChartPtr chart_;
};

/// Coefficients F_ijk of the third generator family, symmetric in (i, j).
class PathSystem {
public:
    explicit PathSystem(JetChart jet);

    const JetChart& jet() const noexcept { return jet_; }
    unsigned n() const noexcept { return jet_.n(); }
    const Expression& F(unsigned i, unsigned j, unsigned k) const;
    // Sets F_ijk and F_jik.
    void set_F(unsigned i, unsigned j, unsigned k, const Expression& value);

    // Symbolic system with one parameter per sorted triple, so F is totally
    // symmetric; models a generic system satisfying the integrability
    // symmetry the structure congruences need.
    static PathSystem generic(unsigned n);
    static std::string F_name(unsigned n, unsigned i, unsigned j, unsigned k);

private:
    std::size_t slot(unsigned i, unsigned j, unsigned k) const;

    JetChart jet_;
    std::vector<Expression> F_;
};

struct ContactIdeal {
    DifferentialForm theta0;
    std::vector<DifferentialForm> theta;  // theta[i-1]
    FormMatrix Theta;                     // symmetric n x n
    std::vector<DifferentialForm> omega;  // omega[i-1] = dx^i
    // All generators: theta0, theta_i, Theta_ij for i <= j.
    std::vector<DifferentialForm> generators() const;
    std::vector<std::string> generator_names() const;
};

ContactIdeal contact_ideal(const PathSystem& system);

/// theta0 ∧ (dtheta0)^n on the jet chart.
DifferentialForm contact_volume(const JetChart& jet);

struct FrobeniusResult {
    bool pass = true;
    // First failing generator (by generators() order) and its residue in the
    // dx^k ∧ dx^l basis after reduction.
    std::string generator;
    DifferentialForm residue;
    // Residues of every generator, in generators() order.
    std::vector<DifferentialForm> residues;
};

/// Reduces d of every generator by du -> Σ p_k dx^k, dp_i -> Σ p_ik dx^k,
/// dp_ij -> Σ F_ijk dx^k.
FrobeniusResult frobenius_check(const PathSystem& system, const ContactIdeal& ideal);

struct CongruenceResult {
    // dθ0 + Σ θ_k ∧ ω^k reduced modulo θ0.
    DifferentialForm theta0_residue;
    // dθ_i + Σ Θ_ik ∧ ω^k reduced modulo θ0, θ.
    std::vector<DifferentialForm> theta_residues;
    bool pass() const;
};

CongruenceResult structure_congruences(const ContactIdeal& ideal);

/// u = f, p_i = ∂_i f, p_ij = ∂_i∂_j f, as images on f's chart, which must
/// carry x1..xn (and the jet chart's parameters if any are used).
Substitution lift_hypersurface(const Expression& f, const PathSystem& system);

} // namespace lpg::jets
