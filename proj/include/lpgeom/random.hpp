#pragma once

#include "lpgeom/chart.hpp"
#include "lpgeom/expression.hpp"
#include "lpgeom/form.hpp"
#include "lpgeom/rational.hpp"

#include <cstdint>
#include <random>

namespace lpg {

/// Seeded generator with its own bounded draws, so sequences are identical
/// across standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound);
    // Uniform in [lo, hi].
    long range(long lo, long hi);
    bool coin() { return below(2) == 1; }
    // Numerator in [-bound, bound], denominator in [1, max_den].
    Rational rational(long bound, long max_den = 1);
    Rng fork() { return Rng(engine_()); }

private:
    std::mt19937_64 engine_;
};

/// Random polynomial in the first `symbols` symbols of the chart with total
/// degree <= max_degree and at most max_terms terms.
Expression random_polynomial(Rng& rng, const ChartPtr& chart, std::size_t symbols, unsigned max_degree,
                             unsigned max_terms, long coefficient_bound = 5);

/// Random homogeneous form of the given degree whose coefficients are random
/// polynomials of degree <= coefficient_degree.
DifferentialForm random_form(Rng& rng, const ChartPtr& chart, unsigned degree, unsigned coefficient_degree,
                             unsigned max_terms);

} // namespace lpg
