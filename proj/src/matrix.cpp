#include "lpgeom/matrix.hpp"

#include <optional>

namespace lpg {

ExprMatrix identity_matrix(std::size_t n, const ChartPtr& chart) {
    ExprMatrix m(n, n, Expression::constant(chart, 0));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Expression::constant(chart, 1);
    return m;
}

ExprMatrix symplectic_j(std::size_t m, const ChartPtr& chart) {
    ExprMatrix j(2 * m, 2 * m, Expression::constant(chart, 0));
    for (std::size_t i = 0; i < m; ++i) {
        j(i, m + i) = Expression::constant(chart, 1);
        j(m + i, i) = Expression::constant(chart, -1);
    }
    return j;
}

namespace {

void require_same_shape(std::size_t ar, std::size_t ac, std::size_t br, std::size_t bc) {
    if (ar != br || ac != bc) throw Error(ErrorKind::InvalidArgument, "matrix shapes differ");
}

void require_product_shape(std::size_t ac, std::size_t br) {
    if (ac != br) throw Error(ErrorKind::InvalidArgument, "matrix shapes do not compose");
}

} // namespace

ExprMatrix operator*(const ExprMatrix& a, const ExprMatrix& b) {
    require_product_shape(a.cols(), b.rows());
    ExprMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) {
            Expression s;
            for (std::size_t k = 0; k < a.cols(); ++k)
                if (!a(r, k).is_zero() && !b(k, c).is_zero()) s += a(r, k) * b(k, c);
            out(r, c) = s;
        }
    return out;
}

ExprMatrix operator+(const ExprMatrix& a, const ExprMatrix& b) {
    require_same_shape(a.rows(), a.cols(), b.rows(), b.cols());
    ExprMatrix out = a;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) += b(r, c);
    return out;
}

ExprMatrix operator-(const ExprMatrix& a, const ExprMatrix& b) {
    require_same_shape(a.rows(), a.cols(), b.rows(), b.cols());
    ExprMatrix out = a;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) -= b(r, c);
    return out;
}

ExprMatrix operator-(const ExprMatrix& a) {
    ExprMatrix out = a;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = -a(r, c);
    return out;
}

std::vector<std::size_t> row_reduce(ExprMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        // Prefer a constant pivot to keep intermediate fractions small.
        std::size_t best = m.rows();
        for (std::size_t r = row; r < m.rows(); ++r) {
            if (m(r, col).is_zero()) continue;
            if (best == m.rows()) best = r;
            if (m(r, col).is_constant()) {
                best = r;
                break;
            }
        }
        if (best == m.rows()) continue;
        if (best != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(row, c), m(best, c));
        const Expression inv = Expression(1) / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c)
            if (!m(row, c).is_zero()) m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            const Expression f = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(ExprMatrix m) {
    return row_reduce(m).size();
}

namespace {

ChartPtr chart_of(const ExprMatrix& m) {
    ChartPtr chart;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) chart = common_chart(chart, m(r, c).chart());
    return chart;
}

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
    return *exact_divide(a * b, gcd(a, b));
}

// Rows of m scaled by the lcm of their denominators; multipliers[r] is that lcm.
struct ClearedRows {
    std::vector<std::vector<Polynomial>> rows;
    std::vector<Polynomial> multipliers;
};

ClearedRows clear_denominators(const ExprMatrix& m) {
    ClearedRows out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Polynomial d(1);
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!m(r, c).denominator().is_one()) d = lcm(d, m(r, c).denominator());
        std::vector<Polynomial> row;
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(m(r, c).numerator() * *exact_divide(d, m(r, c).denominator()));
        out.rows.push_back(std::move(row));
        out.multipliers.push_back(std::move(d));
    }
    return out;
}

// Fraction-free elimination on column k: every updated entry is a minor of
// the input, so the division by the previous pivot is exact.
void bareiss_step(std::vector<std::vector<Polynomial>>& a, std::size_t k, std::size_t first_row,
                  const Polynomial& previous) {
    for (std::size_t i = first_row; i < a.size(); ++i) {
        if (i == k) continue;
        for (std::size_t j = 0; j < a[i].size(); ++j) {
            if (j == k) continue;
            Polynomial v = a[k][k] * a[i][j] - a[i][k] * a[k][j];
            auto q = exact_divide(v, previous);
            if (!q) throw Error(ErrorKind::InvalidArgument, "internal: inexact fraction-free division");
            a[i][j] = std::move(*q);
        }
        a[i][k] = Polynomial();
    }
}

// Index of the nonzero entry in column k (rows >= k) with the fewest terms.
std::optional<std::size_t> choose_pivot(const std::vector<std::vector<Polynomial>>& a, std::size_t k) {
    std::optional<std::size_t> best;
    for (std::size_t r = k; r < a.size(); ++r)
        if (!a[r][k].is_zero() && (!best || a[r][k].size() < a[*best][k].size())) best = r;
    return best;
}

} // namespace

Expression determinant(ExprMatrix m) {
    if (m.rows() != m.cols()) throw Error(ErrorKind::InvalidArgument, "determinant of a non-square matrix");
    const std::size_t n = m.rows();
    const ChartPtr chart = chart_of(m);
    if (n == 0) return Expression::constant(chart, 1);
    auto cleared = clear_denominators(m);
    auto& a = cleared.rows;
    Polynomial previous(1);
    bool negate = false;
    for (std::size_t k = 0; k < n; ++k) {
        const auto p = choose_pivot(a, k);
        if (!p) return Expression::constant(chart, 0);
        if (*p != k) {
            std::swap(a[*p], a[k]);
            negate = !negate;
        }
        // Forward elimination only: rows below the pivot.
        bareiss_step(a, k, k + 1, previous);
        previous = a[k][k];
    }
    Polynomial scale(1);
    for (const auto& d : cleared.multipliers) scale = scale * d;
    const Expression det = Expression::fraction(chart, a[n - 1][n - 1], scale);
    return negate ? -det : det;
}

ExprMatrix inverse(const ExprMatrix& m) {
    if (m.rows() != m.cols()) throw Error(ErrorKind::InvalidArgument, "inverse of a non-square matrix");
    const std::size_t n = m.rows();
    const ChartPtr chart = chart_of(m);
    ExprMatrix aug(n, 2 * n, Expression::constant(chart, 0));
    aug.set_block(0, 0, m);
    aug.set_block(0, n, identity_matrix(n, chart));
    auto cleared = clear_denominators(aug);
    auto& a = cleared.rows;
    Polynomial previous(1);
    for (std::size_t k = 0; k < n; ++k) {
        const auto p = choose_pivot(a, k);
        if (!p) throw Error(ErrorKind::Degenerate, "matrix is singular");
        if (*p != k) std::swap(a[*p], a[k]);
        bareiss_step(a, k, 0, previous);
        previous = a[k][k];
    }
    // The left block is now previous * I and the right block previous * m^{-1}.
    ExprMatrix out(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out(r, c) = Expression::fraction(chart, a[r][n + c], previous);
    return out;
}

FormMatrix zero_forms(std::size_t rows, std::size_t cols, const ChartPtr& chart) {
    return FormMatrix(rows, cols, DifferentialForm(chart));
}

FormMatrix operator+(const FormMatrix& a, const FormMatrix& b) {
    require_same_shape(a.rows(), a.cols(), b.rows(), b.cols());
    FormMatrix out = a;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) += b(r, c);
    return out;
}

FormMatrix operator-(const FormMatrix& a, const FormMatrix& b) {
    require_same_shape(a.rows(), a.cols(), b.rows(), b.cols());
    FormMatrix out = a;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) -= b(r, c);
    return out;
}

FormMatrix operator-(const FormMatrix& a) {
    FormMatrix out = a;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = -a(r, c);
    return out;
}

FormMatrix scale(const FormMatrix& a, const Expression& s) {
    FormMatrix out = a;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) *= s;
    return out;
}

FormMatrix wedge(const FormMatrix& a, const FormMatrix& b) {
    require_product_shape(a.cols(), b.rows());
    FormMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) {
            DifferentialForm s;
            for (std::size_t k = 0; k < a.cols(); ++k)
                if (!a(r, k).is_zero() && !b(k, c).is_zero()) s += wedge(a(r, k), b(k, c));
            out(r, c) = std::move(s);
        }
    return out;
}

FormMatrix wedge(const ExprMatrix& a, const FormMatrix& b) {
    require_product_shape(a.cols(), b.rows());
    FormMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) {
            DifferentialForm s;
            for (std::size_t k = 0; k < a.cols(); ++k)
                if (!a(r, k).is_zero() && !b(k, c).is_zero()) s += a(r, k) * b(k, c);
            out(r, c) = std::move(s);
        }
    return out;
}

FormMatrix wedge(const FormMatrix& a, const ExprMatrix& b) {
    require_product_shape(a.cols(), b.rows());
    FormMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) {
            DifferentialForm s;
            for (std::size_t k = 0; k < a.cols(); ++k)
                if (!a(r, k).is_zero() && !b(k, c).is_zero()) s += a(r, k) * b(k, c);
            out(r, c) = std::move(s);
        }
    return out;
}

FormMatrix exterior_derivative(const FormMatrix& a) {
    FormMatrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = exterior_derivative(a(r, c));
    return out;
}

FormMatrix differential(const ExprMatrix& a) {
    FormMatrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = exterior_derivative(DifferentialForm(a(r, c)));
    return out;
}

bool is_zero(const FormMatrix& a) {
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (!a(r, c).is_zero()) return false;
    return true;
}

} // namespace lpg
