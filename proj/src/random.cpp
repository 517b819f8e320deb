#include "lpgeom/random.hpp"

#include "lpgeom/error.hpp"

#include <algorithm>

namespace lpg {

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw Error(ErrorKind::InvalidArgument, "Rng::below(0)");
    // Rejection sampling removes modulo bias.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    for (;;) {
        const std::uint64_t x = engine_();
        if (x < limit) return x % bound;
    }
}

long Rng::range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Rational Rng::rational(long bound, long max_den) {
    Rational q(range(-bound, bound), range(1, max_den));
    q.canonicalize();
    return q;
}

Expression random_polynomial(Rng& rng, const ChartPtr& chart, std::size_t symbols, unsigned max_degree,
                             unsigned max_terms, long coefficient_bound) {
    Polynomial p;
    const unsigned terms = static_cast<unsigned>(rng.range(1, max_terms));
    for (unsigned t = 0; t < terms; ++t) {
        std::vector<std::uint32_t> ex(symbols, 0);
        const unsigned deg = static_cast<unsigned>(rng.range(0, max_degree));
        for (unsigned k = 0; k < deg && symbols > 0; ++k) ++ex[rng.below(symbols)];
        p.add_term(Monomial(std::move(ex)), rng.rational(coefficient_bound));
    }
    return Expression::polynomial(chart, std::move(p));
}

DifferentialForm random_form(Rng& rng, const ChartPtr& chart, unsigned degree, unsigned coefficient_degree,
                             unsigned max_terms) {
    const std::size_t dim = chart->dimension();
    if (degree > dim) return DifferentialForm(chart);
    DifferentialForm f(chart);
    const unsigned terms = static_cast<unsigned>(rng.range(1, max_terms));
    for (unsigned t = 0; t < terms; ++t) {
        Basis b;
        while (b.size() < degree) {
            const auto v = static_cast<std::uint32_t>(rng.below(dim));
            if (std::find(b.begin(), b.end(), v) == b.end()) b.push_back(v);
        }
        std::sort(b.begin(), b.end());
        f.add_term(b, random_polynomial(rng, chart, chart->symbol_count(), coefficient_degree, 3));
    }
    return f;
}

} // namespace lpg
