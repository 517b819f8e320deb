#pragma once

#include "lpgeom/chart.hpp"
#include "lpgeom/contact_jets.hpp"
#include "lpgeom/form.hpp"
#include "lpgeom/matrix.hpp"
#include "lpgeom/random.hpp"

#include <string>
#include <vector>

namespace lpg::cartan {

/// Which block normalization assemble_phi uses.
/// Classical: φ = (−½ρ, −½βᵗ; ω, −(αᵗ − ½ρ)), π = (−¼ψ, ½μᵗ; ½μ, γ).
/// Normal:    φ = (−ρ, −½βᵗ; ω, α),           π = (ψ, −½μᵗ; −½μ, γ),
/// with β, μ, ψ holding φ₀, π₀, π₀⁰ of the normal connection.
enum class Mode { Classical, Normal };

struct ConnectionBlocks {
    DifferentialForm theta0;
    std::vector<DifferentialForm> theta;
    FormMatrix Theta;  // symmetric
    std::vector<DifferentialForm> omega;
    DifferentialForm rho;
    FormMatrix alpha;
    std::vector<DifferentialForm> beta;
    std::vector<DifferentialForm> mu;
    FormMatrix gamma;  // symmetric
    DifferentialForm psi;

    static ConnectionBlocks zero(unsigned n, const ChartPtr& chart);
    unsigned n() const noexcept { return static_cast<unsigned>(theta.size()); }
    ChartPtr chart() const;
    // Throws InvalidArgument on shape or degree errors, SymmetryViolation on Θ, γ.
    void validate() const;
};

/// θ₀, θ, Θ from the ideal, ω = dx, everything else zero.
ConnectionBlocks flat_blocks(const jets::ContactIdeal& ideal);

/// (2n+2)×(2n+2) matrix of forms read as (φ, π; η, −φᵗ). Used for both the
/// connection (1-forms) and its curvature (2-forms).
class SpForm {
public:
    SpForm() = default;
    // Throws InvalidArgument unless the matrix is square of even size >= 4.
    explicit SpForm(FormMatrix m);

    unsigned n() const noexcept { return static_cast<unsigned>(m_.rows() / 2 - 1); }
    const FormMatrix& matrix() const noexcept { return m_; }
    const DifferentialForm& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

    FormMatrix phi() const { return m_.block(0, 0, n() + 1, n() + 1); }
    FormMatrix pi() const { return m_.block(0, n() + 1, n() + 1, n() + 1); }
    FormMatrix eta() const { return m_.block(n() + 1, 0, n() + 1, n() + 1); }

    // Throws SymmetryViolation unless eta and pi are symmetric.
    static SpForm from_blocks(const FormMatrix& phi, const FormMatrix& pi, const FormMatrix& eta);

    friend bool operator==(const SpForm& a, const SpForm& b) { return a.m_ == b.m_; }

private:
    FormMatrix m_;
};

using SpValuedOneForm = SpForm;
using CurvatureForm = SpForm;

SpValuedOneForm assemble_phi(const ConnectionBlocks& blocks, Mode mode = Mode::Classical);

/// JΦ + ΦᵗJ; zero iff Φ takes values in sp(n+1).
FormMatrix sp_defect(const SpForm& form);
bool in_sp(const SpForm& form);

/// Ω = dΦ + Φ∧Φ.
CurvatureForm curvature(const SpValuedOneForm& phi);

/// dΩ − (Ω∧Φ − Φ∧Ω); identically zero.
FormMatrix bianchi_defect(const SpValuedOneForm& phi, const CurvatureForm& omega);

/// Φ = g⁻¹dg with g⁻¹ = −J gᵗ J. Throws Precondition unless gᵗJg = J.
SpValuedOneForm maurer_cartan_form(const ExprMatrix& g, const ChartPtr& chart);

struct IdentityCheck {
    std::string name;
    bool pass = true;
    // Nonzero entries that make the check fail, labelled by position.
    std::vector<std::pair<std::string, DifferentialForm>> residuals;
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;
    bool pass() const;
    std::vector<std::string> failed() const;
};

/// Curvature pieces in the classical slot names, read off the raw blocks:
/// T = Ω_η[1:,1:], Ω_β = −2 Ω_φ[0,1:]ᵗ, Ω_α = −Ω_φ[1:,1:]ᵗ, Ω_ψ = −4 Ω_π[0,0],
/// Ω_μ = 2 Ω_π[1:,0], Ω_γ = Ω_π[1:,1:]. Checks, by name:
///   shape.eta          first row and column of Ω_η vanish
///   shape.phi          first column of Ω_φ vanishes
///   identity.theta     Ω_β∧θ₀ + Ω_α∧θ + T∧ω = 0
///   identity.omega     Ω_μ∧θ₀ + Ω_γ∧θ − Ω_αᵗ∧ω = 0
///   identity.rho       Ω_ψ∧θ₀ − Ω_μᵗ∧θ + Ω_βᵗ∧ω = 0
///   identity.mod_ideal every entry of Ω lies in the ideal of θ₀, θ, ω
/// Stated on raw blocks these are the same for both modes.
/// Throws Degenerate if θ₀, θ, Θ, ω are linearly dependent.
IdentityReport check_curvature_identities(const CurvatureForm& omega, const ConnectionBlocks& blocks);

/// Random polynomial Sp(n+1) element: a product of unipotent factors with
/// symmetric polynomial off-diagonal blocks and diag(A, A^{-T}) factors
/// with A unipotent triangular.
ExprMatrix random_symplectic(Rng& rng, const ChartPtr& chart, unsigned n, unsigned factors = 3,
                             unsigned max_degree = 2);

/// Random sp(n+1)-valued 1-form with polynomial coefficients.
SpValuedOneForm random_sp_form(Rng& rng, const ChartPtr& chart, unsigned n, unsigned coeff_degree = 2,
                               unsigned max_terms = 2);

} // namespace lpg::cartan
