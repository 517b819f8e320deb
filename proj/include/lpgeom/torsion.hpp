#pragma once

#include "lpgeom/expression.hpp"
#include "lpgeom/random.hpp"

#include <string>
#include <utility>
#include <vector>

namespace lpg::torsion {

/// Dense tensor with n^rank Expression entries; indices are 0-based.
class DenseTensor {
public:
    DenseTensor() = default;
    DenseTensor(unsigned n, unsigned rank);

    unsigned n() const noexcept { return n_; }
    unsigned rank() const noexcept { return rank_; }
    Expression& at(std::initializer_list<unsigned> index);
    const Expression& at(std::initializer_list<unsigned> index) const;
    const std::vector<Expression>& data() const noexcept { return data_; }
    std::vector<Expression>& data() noexcept { return data_; }

    friend bool operator==(const DenseTensor&, const DenseTensor&) = default;

private:
    std::size_t offset(std::initializer_list<unsigned> index) const;

    unsigned n_ = 0;
    unsigned rank_ = 0;
    std::vector<Expression> data_;
};

/// Coefficients of the quadratic torsion
///   T_ij = Σ T_ij^k θ0∧θ_k + Σ T_ij,kl θ0∧Θ_kl + Σ T_ij^kl θ_k∧θ_l + Σ T^k_ij,lm θ_k∧Θ_lm.
/// Accessors take (i, j, ...) with the θ or Θ indices last:
///   t0t(i,j,k) = T_ij^k, t0T(i,j,k,l) = T_ij,kl, tt(i,j,k,l) = T_ij^kl,
///   tT(i,j,k,l,m) = T^k_ij,lm.
/// Setters also fill the symmetric/antisymmetric partners.
class TorsionTensor {
public:
    explicit TorsionTensor(unsigned n = 1);

    unsigned n() const noexcept { return n_; }

    const Expression& t0t(unsigned i, unsigned j, unsigned k) const { return t0t_.at({i, j, k}); }
    const Expression& t0T(unsigned i, unsigned j, unsigned k, unsigned l) const { return t0T_.at({i, j, k, l}); }
    const Expression& tt(unsigned i, unsigned j, unsigned k, unsigned l) const { return tt_.at({i, j, k, l}); }
    const Expression& tT(unsigned i, unsigned j, unsigned k, unsigned l, unsigned m) const {
        return tT_.at({i, j, k, l, m});
    }

    void set_t0t(unsigned i, unsigned j, unsigned k, const Expression& v);
    void set_t0T(unsigned i, unsigned j, unsigned k, unsigned l, const Expression& v);
    void set_tt(unsigned i, unsigned j, unsigned k, unsigned l, const Expression& v);
    void set_tT(unsigned i, unsigned j, unsigned k, unsigned l, unsigned m, const Expression& v);

    // Raw storage, for loaders that validate afterwards.
    DenseTensor& raw_t0t() { return t0t_; }
    DenseTensor& raw_t0T() { return t0T_; }
    DenseTensor& raw_tt() { return tt_; }
    DenseTensor& raw_tT() { return tT_; }
    const DenseTensor& raw_t0t() const { return t0t_; }
    const DenseTensor& raw_t0T() const { return t0T_; }
    const DenseTensor& raw_tt() const { return tt_; }
    const DenseTensor& raw_tT() const { return tT_; }

    // Throws SymmetryViolation naming the first offending pair (1-based).
    void validate() const;

    friend bool operator==(const TorsionTensor&, const TorsionTensor&) = default;

private:
    unsigned n_;
    DenseTensor t0t_, t0T_, tt_, tT_;
};

/// p, c^i, c^i_j, c^i_jk = c^i_kj of the pseudo-connection change
/// ρ += pθ0, α^i_j += c^i_j θ0 + Σ c^i_jk θ_k, β^i += c^i θ0 + Σ c^i_k θ_k.
struct GaugeParameters {
    Expression p;
    std::vector<Expression> c;  // c[i]
    DenseTensor c2;             // c2.at({i, j}) = c^i_j
    DenseTensor c3;             // c3.at({i, j, k}) = c^i_jk

    static GaugeParameters zero(unsigned n);
    // The change that survives the first normalization: c^i_j = ½pδ_ij.
    static GaugeParameters residual(unsigned n, const Expression& p);
    GaugeParameters operator-() const;
    // Throws SymmetryViolation unless c^i_jk = c^i_kj.
    void validate() const;
    friend bool operator==(const GaugeParameters&, const GaugeParameters&) = default;
};

TorsionTensor apply_gauge(const TorsionTensor& T, const GaugeParameters& g);

struct Condition {
    std::string name;
    Expression value;
};

/// Nonzero left-hand sides among the normalization conditions
///   T_ii^i = 0, T_ii^ki = 0 (k≠i), T_ii,ii = 0,
///   T^k_ii,im + T^m_ii,ik = 0 (i∉{k,m}), T^k_ii,ii = 0.
std::vector<Condition> first_normalization_defects(const TorsionTensor& T);

struct FirstNormalization {
    GaugeParameters gauge;                     // p pinned to 0
    std::vector<std::string> free_parameters;  // components left undetermined
    TorsionTensor normalized;
    std::vector<Condition> defects;            // empty unless something is inconsistent
    bool pass() const { return defects.empty(); }
};

/// c^i = T_ii^i, c^i_k = T_ii^ki (k≠i), c^i_i = ½T_ii,ii,
/// c^i_km = ½(T^k_ii,im + T^m_ii,ik) (k,m≠i), c^i_ik = ½T^k_ii,ii.
FirstNormalization solve_first_normalization(const TorsionTensor& T);

struct ResidualCertificate {
    bool pass = false;
    bool unchanged = false;            // the residual change leaves T untouched
    std::vector<Condition> defects;    // normalization defects after the change
};

/// Applies GaugeParameters::residual(n, p). Throws Precondition if T is not
/// normalized.
ResidualCertificate residual_gauge_preserves(const TorsionTensor& T, const Expression& p);

/// Coefficients of Ω_β mod ω, ρ, α, β:
///   Ω_β^i ≡ Σ P^i_j θ0∧θ_j + Σ P^i_jk θ0∧Θ_jk + Σ P^{i,jk} θ_j∧θ_k + Σ P^i_k,lm θ_k∧Θ_lm.
/// pj(i,j), pjk(i,j,k) symmetric in (j,k), pcomma(i,j,k) antisymmetric in (j,k),
/// pklm(i,k,l,m) symmetric in (l,m).
class PTensor {
public:
    explicit PTensor(unsigned n = 1);

    unsigned n() const noexcept { return n_; }
    const Expression& pj(unsigned i, unsigned j) const { return pj_.at({i, j}); }
    const Expression& pjk(unsigned i, unsigned j, unsigned k) const { return pjk_.at({i, j, k}); }
    const Expression& pcomma(unsigned i, unsigned j, unsigned k) const { return pcomma_.at({i, j, k}); }
    const Expression& pklm(unsigned i, unsigned k, unsigned l, unsigned m) const { return pklm_.at({i, k, l, m}); }

    void set_pj(unsigned i, unsigned j, const Expression& v) { pj_.at({i, j}) = v; }
    void set_pjk(unsigned i, unsigned j, unsigned k, const Expression& v);
    void set_pcomma(unsigned i, unsigned j, unsigned k, const Expression& v);
    void set_pklm(unsigned i, unsigned k, unsigned l, unsigned m, const Expression& v);

    DenseTensor& raw_pj() { return pj_; }
    DenseTensor& raw_pjk() { return pjk_; }
    DenseTensor& raw_pcomma() { return pcomma_; }
    DenseTensor& raw_pklm() { return pklm_; }
    const DenseTensor& raw_pj() const { return pj_; }
    const DenseTensor& raw_pjk() const { return pjk_; }
    const DenseTensor& raw_pcomma() const { return pcomma_; }
    const DenseTensor& raw_pklm() const { return pklm_; }

    void validate() const;
    friend bool operator==(const PTensor&, const PTensor&) = default;

private:
    unsigned n_;
    DenseTensor pj_, pjk_, pcomma_, pklm_;
};

/// t, h^i, h_ij = h_ji of ψ += tθ0 − Σ h^k θ_k, μ^i += h^i θ0 + Σ h_ik θ_k.
struct SecondGaugeParameters {
    Expression t;
    std::vector<Expression> h;  // h[i]
    DenseTensor hh;             // hh.at({i, j}) = h_ij

    static SecondGaugeParameters zero(unsigned n);
    void validate() const;
    friend bool operator==(const SecondGaugeParameters&, const SecondGaugeParameters&) = default;
};

/// P^i_j −= (¼p² − ½t)δ_ij, P^i_jk += ½(δ_ij h^k + δ_ik h^j),
/// P^i_k,lm −= ½(δ_im h_lk + δ_il h_mk); P^{i,jk} is unchanged.
PTensor apply_second_gauge(const PTensor& P, const SecondGaugeParameters& g, const Expression& p = Expression(0));

/// Nonzero left-hand sides among Σ P^i_i = 0, P^i_ii = 0, P^i_k,ii + P^k_i,kk = 0.
std::vector<Condition> second_normalization_defects(const PTensor& P);

struct SecondNormalization {
    SecondGaugeParameters gauge;
    PTensor normalized;
    std::vector<Condition> defects;
    bool pass() const { return defects.empty(); }
};

/// h^i = −P^i_ii, h_ik = ½(P^i_k,ii + P^k_i,kk), t = −(2/n) Σ P^i_i (at p = 0).
SecondNormalization solve_second_normalization(const PTensor& P);

/// The change left after the second normalization: t = ½p², h = 0.
/// Throws Precondition if P is not normalized.
ResidualCertificate residual_second_gauge_preserves(const PTensor& P, const Expression& p);

TorsionTensor random_torsion(Rng& rng, unsigned n, long bound = 5, long max_den = 3);
PTensor random_p_tensor(Rng& rng, unsigned n, long bound = 5, long max_den = 3);

} // namespace lpg::torsion
