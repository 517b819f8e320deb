#pragma once

#include "lpgeom/random.hpp"
#include "lpgeom/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace lpg::rep {

enum class Family { Symplectic, Orthogonal };

/// sp(n) (type C_n, V = R^{2n}) or so(m) (type B or D, m >= 3).
struct AlgebraId {
    Family family = Family::Symplectic;
    unsigned parameter = 1;  // n for sp(n), m for so(m)

    static AlgebraId sp(unsigned n);
    static AlgebraId so(unsigned m);
    unsigned rank() const;
    // 'C', 'B' or 'D'.
    char type() const;
    std::string to_string() const;
    friend bool operator==(const AlgebraId&, const AlgebraId&) = default;
    friend auto operator<=>(const AlgebraId&, const AlgebraId&) = default;
};

/// Highest weight in fundamental-weight coordinates.
struct IrrepLabel {
    AlgebraId algebra;
    std::vector<unsigned> highest;

    IrrepLabel() = default;
    // Throws InvalidArgument if the length differs from the rank.
    IrrepLabel(AlgebraId algebra, std::vector<unsigned> highest);

    static IrrepLabel trivial(AlgebraId algebra);
    // k-th fundamental weight, 1-based.
    static IrrepLabel fundamental(AlgebraId algebra, unsigned k, unsigned multiple = 1);

    // Descends to SO(m): no spin component. Always true for sp(n).
    bool group_integral() const;
    // "sp(2)[2,1]".
    std::string to_string() const;
    friend bool operator==(const IrrepLabel&, const IrrepLabel&) = default;
    friend auto operator<=>(const IrrepLabel&, const IrrepLabel&) = default;
};

/// Weights are stored as twice their coordinates in the orthonormal ε basis,
/// so every weight of B and D types is integral.
using Weight = std::vector<int>;
using Character = std::map<Weight, std::int64_t>;

std::uint64_t weyl_dimension(const IrrepLabel& label);

/// Full weight multiplicity function (Freudenthal).
Character character(const IrrepLabel& label);

std::int64_t dimension(const Character& chi);
Character product(const Character& a, const Character& b);
Character sum(const Character& a, const Character& b);
Character exterior_square(const Character& chi);
Character symmetric_square(const Character& chi);

/// Irreducible constituents (with repetition, sorted) by repeatedly removing
/// the character of the highest remaining weight. Throws InvalidArgument if
/// the input is not a genuine character.
std::vector<IrrepLabel> decompose(const AlgebraId& algebra, Character chi);

/// Throws InvalidArgument for different algebras or rank > 3.
std::vector<IrrepLabel> tensor_decompose(const IrrepLabel& a, const IrrepLabel& b);

struct DecompositionCheck {
    std::string name;
    std::vector<IrrepLabel> expected;
    std::vector<IrrepLabel> computed;
    // "50 = 35+10+5".
    std::string ledger;
    bool pass = false;
};

/// ⋀²V = Γ_{010..0} ⊕ R, S²V irreducible, S²V ⊗ Γ_{010..0} (Γ21 ⊕ Γ20 ⊕ Γ01 for
/// n = 2, Γ_{2100..0} ⊕ Γ_{1010..0} ⊕ Γ_{200..0} ⊕ Γ_{010..0} for n >= 3) and
/// S²V ⊗ V = S³V ⊕ V ⊕ Γ_{110..0}, for sp(n), n in {2, 3}.
std::vector<DecompositionCheck> verify_decompositions(unsigned n);

/// Equivariant projector onto the V component of S²V ⊗ V for sp(n),
/// P = −ι∘c/(2n+1), with c(t)_a = Σ t_{ab,c} ω^{bc} and
/// ι(v)_{ab,c} = v_a ω_bc + v_b ω_ac for ω = J. Elements are vectors in the
/// basis e_(ab) ⊗ e_c, a <= b, ordered by (a, b, c).
class VPieceProjector {
public:
    explicit VPieceProjector(unsigned n);

    unsigned n() const noexcept { return n_; }
    std::size_t dimension() const noexcept { return index_.size(); }
    std::size_t v_dimension() const noexcept { return 2 * n_; }

    std::vector<Rational> apply(const std::vector<Rational>& t) const;
    std::vector<Rational> contract(const std::vector<Rational>& t) const;
    std::vector<Rational> include(const std::vector<Rational>& v) const;
    // Action of X ∈ sp(n) (a 2n×2n matrix, row-major) on every slot.
    std::vector<Rational> act(const std::vector<Rational>& X, const std::vector<Rational>& t) const;

    std::size_t rank() const;
    bool idempotent() const;

    // Υ-admissibility: no V component.
    bool admissible(const std::vector<Rational>& t) const;

private:
    std::size_t slot(unsigned a, unsigned b, unsigned c) const;

    unsigned n_;
    std::vector<std::array<unsigned, 3>> index_;
    std::vector<Rational> omega_;      // J
    std::vector<Rational> omega_inv_;  // J^{-1}
};

/// Random element of sp(n): J S with S symmetric, entries rational.
std::vector<Rational> random_sp_element(Rng& rng, unsigned n);

struct SoAudit {
    unsigned n = 0;
    // Real dimensions of nontrivial SO(n+1) irreps up to `bound`, sorted.
    std::vector<std::uint64_t> dimensions;
    std::uint64_t bound = 0;
    std::uint64_t smallest = 0;
    std::uint64_t next = 0;
    std::uint64_t half_n_n1 = 0;   // n(n+1)/2
    std::uint64_t complement = 0;  // 2n − (n+1)
    bool smallest_is_vector = false;
    bool next_at_least_half = false;
    bool half_exceeds_2n = false;  // required for n >= 4
    bool complement_small = false;
    bool pass() const;
};

/// Throws InvalidArgument outside 2 <= n <= 6.
SoAudit so_minimal_dims(unsigned n);

} // namespace lpg::rep
