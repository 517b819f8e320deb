#pragma once

#include "lpgeom/chart.hpp"
#include "lpgeom/expression.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lpg {

/// Strictly increasing chart-variable indices naming dx^{i1} ∧ ... ∧ dx^{ik}.
using Basis = std::vector<std::uint32_t>;

struct BasisOrder {
    bool operator()(const Basis& a, const Basis& b) const noexcept {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

/// Element of the exterior algebra over a chart with Expression
/// coefficients. Stored sparsely with no zero coefficients; signs are folded
/// into coefficients so the representation is canonical.
class DifferentialForm {
public:
    using Terms = std::map<Basis, Expression, BasisOrder>;

    explicit DifferentialForm(ChartPtr chart = nullptr) : chart_(std::move(chart)) {}
    DifferentialForm(const Expression& function);

    static DifferentialForm differential(ChartPtr chart, std::size_t variable);
    static DifferentialForm differential(ChartPtr chart, std::string_view variable);
    // Reorders `basis` into increasing order, folding the permutation sign.
    static DifferentialForm term(ChartPtr chart, Basis basis, const Expression& coefficient);

    const ChartPtr& chart() const noexcept { return chart_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    // Largest degree present (0 for the zero form).
    std::size_t max_degree() const noexcept;
    bool is_homogeneous(std::size_t degree) const noexcept;
    DifferentialForm part(std::size_t degree) const;
    Expression coefficient(const Basis& basis) const;
    // The degree-0 part; throws InvalidArgument if higher-degree terms exist.
    Expression as_function() const;

    DifferentialForm operator-() const;
    DifferentialForm& operator+=(const DifferentialForm& other);
    DifferentialForm& operator-=(const DifferentialForm& other);
    DifferentialForm& operator*=(const Expression& scalar);
    friend DifferentialForm operator+(DifferentialForm a, const DifferentialForm& b) { return a += b; }
    friend DifferentialForm operator-(DifferentialForm a, const DifferentialForm& b) { return a -= b; }
    friend DifferentialForm operator*(DifferentialForm a, const Expression& s) { return a *= s; }
    friend DifferentialForm operator*(const Expression& s, DifferentialForm a) { return a *= s; }
    friend bool operator==(const DifferentialForm& a, const DifferentialForm& b);

    void add_term(const Basis& basis, const Expression& coefficient);

    std::string to_string() const;

private:
    ChartPtr chart_;
    Terms terms_;
};

/// Tangent vector field: one component per chart variable.
class VectorField {
public:
    VectorField(ChartPtr chart, std::vector<Expression> components);
    static VectorField coordinate(ChartPtr chart, std::size_t variable);

    const ChartPtr& chart() const noexcept { return chart_; }
    const std::vector<Expression>& components() const noexcept { return components_; }

private:
    ChartPtr chart_;
    std::vector<Expression> components_;
};

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b);
DifferentialForm wedge_power(const DifferentialForm& a, unsigned k);
DifferentialForm exterior_derivative(const DifferentialForm& a);
DifferentialForm interior_product(const VectorField& v, const DifferentialForm& a);

/// Images of a target chart's symbols, as Expressions on `source`.
/// Every target variable must be present; parameters absent from `images`
/// map to the same-named symbol of the source chart.
struct Substitution {
    ChartPtr source;
    std::map<std::string, Expression, std::less<>> images;
};

std::vector<DifferentialForm> pullback(std::span<const DifferentialForm> forms, const Substitution& substitution);
DifferentialForm pullback(const DifferentialForm& form, const Substitution& substitution);
Expression pullback(const Expression& function, const ChartPtr& target_chart, const Substitution& substitution);

/// Algebra endomorphism fixing coefficients and sending dx^i to images[i]
/// (a 1-form) when present, otherwise to dx^i.
DifferentialForm replace_differentials(const DifferentialForm& form,
                                       std::span<const std::optional<DifferentialForm>> images);

/// Rank of a family of 1-forms over the field of rational functions.
std::size_t rank_of_one_forms(std::span<const DifferentialForm> forms);

/// Canonical representative of `form` modulo the algebraic ideal generated by
/// the given 1-forms: the generators are row-reduced, each is solved for its
/// pivot differential, and the pivots are eliminated. Pivots are taken from
/// the last chart variables first, so leading variables (base coordinates in
/// the jet charts) survive. The result is zero iff `form` lies in the ideal.
DifferentialForm reduce_modulo(const DifferentialForm& form, std::span<const DifferentialForm> generators);

} // namespace lpg
