#include "lpgeom/flat_model.hpp"

#include "lpgeom/error.hpp"

namespace lpg::flat {

SymplecticSpace::SymplecticSpace(unsigned n) : n_(n) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "symplectic space needs n >= 1");
    std::vector<std::string> vars;
    for (unsigned a = 0; a <= n; ++a) vars.push_back("x" + std::to_string(a));
    for (unsigned a = 0; a <= n; ++a) vars.push_back("y" + std::to_string(a));
    chart_ = make_chart("R" + std::to_string(2 * n + 2), std::move(vars));
    varpi_ = DifferentialForm(chart_);
    for (unsigned a = 0; a <= n; ++a)
        varpi_ += wedge(DifferentialForm::differential(chart_, a), DifferentialForm::differential(chart_, n + 1 + a));
}

Expression SymplecticSpace::pairing(std::span<const Expression> u, std::span<const Expression> w) const {
    if (u.size() != dimension() || w.size() != dimension())
        throw Error(ErrorKind::InvalidArgument, "vector length must be " + std::to_string(dimension()));
    Expression s;
    for (const auto& [basis, coef] : varpi_.terms()) {
        const auto i = basis[0], j = basis[1];
        // Constant coefficients; vectors may live on any chart.
        s += Expression(coef.constant_value()) * (u[i] * w[j] - u[j] * w[i]);
    }
    return s;
}

DifferentialForm contact_form_at_line(std::span<const Rational> v, const SymplecticSpace& space) {
    if (v.size() != space.dimension())
        throw Error(ErrorKind::InvalidArgument, "vector length must be " + std::to_string(space.dimension()));
    bool nonzero = false;
    std::vector<Expression> comps;
    for (const auto& q : v) {
        nonzero = nonzero || q != 0;
        comps.push_back(Expression::constant(space.chart(), q));
    }
    if (!nonzero) throw Error(ErrorKind::InvalidArgument, "a line needs a nonzero generator");
    return interior_product(VectorField(space.chart(), std::move(comps)), space.varpi());
}

namespace {

ExprMatrix rows_of(const std::vector<Vector>& vs, std::size_t dim) {
    ExprMatrix m(vs.size(), dim);
    for (std::size_t r = 0; r < vs.size(); ++r) {
        if (vs[r].size() != dim)
            throw Error(ErrorKind::InvalidArgument, "vector length must be " + std::to_string(dim));
        for (std::size_t c = 0; c < dim; ++c) m(r, c) = vs[r][c];
    }
    return m;
}

} // namespace

LinearSubspace::LinearSubspace(SymplecticSpace space, std::vector<Vector> basis)
    : space_(std::move(space)), basis_(std::move(basis)) {
    if (rank(rows_of(basis_, space_.dimension())) != basis_.size())
        throw Error(ErrorKind::Degenerate, "spanning vectors are linearly dependent");
}

bool LinearSubspace::contains(std::span<const Expression> v) const {
    std::vector<Vector> rows = basis_;
    rows.emplace_back(v.begin(), v.end());
    return rank(rows_of(rows, space_.dimension())) == basis_.size();
}

bool operator==(const LinearSubspace& a, const LinearSubspace& b) {
    if (a.space_.n() != b.space_.n() || a.dimension() != b.dimension()) return false;
    for (const auto& v : b.basis_)
        if (!a.contains(v)) return false;
    return true;
}

bool is_lagrangian(const LinearSubspace& plane) {
    const unsigned n = plane.space().n();
    if (plane.dimension() != n + 1)
        throw Error(ErrorKind::InvalidArgument, "Lagrangian test needs an " + std::to_string(n + 1) +
                                                    "-dimensional plane, got " + std::to_string(plane.dimension()));
    const auto& b = plane.basis();
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j)
            if (!plane.space().pairing(b[i], b[j]).is_zero()) return false;
    return true;
}

LinearSubspace graph_plane(const SymplecticSpace& space, const Expression& a0, std::span<const Expression> a,
                           const ExprMatrix& A) {
    const unsigned n = space.n();
    if (a.size() != n || A.rows() != n || A.cols() != n)
        throw Error(ErrorKind::InvalidArgument, "quadric coefficients do not match n = " + std::to_string(n));
    const std::size_t D = space.dimension();
    std::vector<Vector> basis;
    // Image of e_{x0}: X = e0, Y0 = 2 a0, Y^i = a_i.
    Vector b0(D, Expression(0));
    b0[0] = Expression(1);
    b0[n + 1] = Expression(2) * a0;
    for (unsigned i = 0; i < n; ++i) b0[n + 2 + i] = a[i];
    basis.push_back(std::move(b0));
    // Image of e_{xj}: X = ej, Y0 = a_j, Y^i = a_ij.
    for (unsigned j = 0; j < n; ++j) {
        Vector bj(D, Expression(0));
        bj[1 + j] = Expression(1);
        bj[n + 1] = a[j];
        for (unsigned i = 0; i < n; ++i) bj[n + 2 + i] = A(i, j);
        basis.push_back(std::move(bj));
    }
    return LinearSubspace(space, std::move(basis));
}

LinearSubspace quadric_to_lagrangian(const quadric::QuadricCoefficients& q, const SymplecticSpace& space) {
    return graph_plane(space, q.a0(), q.a(), q.A());
}

ChartIdentityResult verify_chart_identity(unsigned n) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "chart identity needs n >= 1");
    SymplecticSpace space(n);
    std::vector<std::string> vars;
    for (unsigned i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
    vars.push_back("u");
    for (unsigned i = 1; i <= n; ++i) vars.push_back("p" + std::to_string(i));
    ChartPtr local = make_chart("contact" + std::to_string(n), vars);
    auto sym = [&](const std::string& s) { return Expression::symbol(local, s); };

    Substitution sub{local, {}};
    Expression y0 = Expression(2) * sym("u");
    for (unsigned i = 1; i <= n; ++i) y0 -= sym("x" + std::to_string(i)) * sym("p" + std::to_string(i));
    sub.images.emplace("x0", Expression::constant(local, 1));
    sub.images.emplace("y0", y0);
    for (unsigned i = 1; i <= n; ++i) {
        sub.images.emplace("x" + std::to_string(i), sym("x" + std::to_string(i)));
        sub.images.emplace("y" + std::to_string(i), sym("p" + std::to_string(i)));
    }
    // Σ (X dY − Y dX) on R^{2n+2}, then pulled back.
    const ChartPtr& c = space.chart();
    DifferentialForm liouville(c);
    for (unsigned A = 0; A <= n; ++A) {
        Expression X = Expression::symbol(c, A), Y = Expression::symbol(c, n + 1 + A);
        liouville += X * DifferentialForm::differential(c, n + 1 + A) - Y * DifferentialForm::differential(c, A);
    }
    ChartIdentityResult r;
    r.lhs = pullback(liouville, sub);
    DifferentialForm theta0 = DifferentialForm::differential(local, "u");
    for (unsigned i = 1; i <= n; ++i)
        theta0 -= sym("p" + std::to_string(i)) * DifferentialForm::differential(local, "x" + std::to_string(i));
    r.rhs = theta0 * Expression(2);
    r.residual = r.lhs - r.rhs;
    r.pass = r.residual.is_zero();
    const DifferentialForm half = r.lhs * Expression(Rational(1, 2));
    r.contact_nondegenerate = !wedge(half, wedge_power(exterior_derivative(half), n)).is_zero();
    return r;
}

IncidenceResult quadric_plane_incidence(const quadric::QuadricCoefficients& q, std::span<const Expression> x0) {
    const std::size_t n = q.n();
    if (x0.size() != n) throw Error(ErrorKind::InvalidArgument, "point has the wrong number of coordinates");
    SymplecticSpace space(static_cast<unsigned>(n));
    const LinearSubspace plane = quadric_to_lagrangian(q, space);
    const Expression u = q.u_at(x0);
    const auto p = q.p_at(x0);
    IncidenceResult r;
    r.point.assign(space.dimension(), Expression(0));
    r.point[0] = Expression(1);
    Expression y0 = Expression(2) * u;
    for (std::size_t i = 0; i < n; ++i) {
        r.point[1 + i] = x0[i];
        r.point[n + 2 + i] = p[i];
        y0 -= x0[i] * p[i];
    }
    r.point[n + 1] = y0;
    // The graph basis is indexed by X, so the coordinates are X itself.
    r.residual = r.point;
    const auto& b = plane.basis();
    for (std::size_t A = 0; A <= n; ++A)
        for (std::size_t k = 0; k < r.residual.size(); ++k) r.residual[k] -= r.point[A] * b[A][k];
    r.pass = true;
    for (const auto& e : r.residual) r.pass = r.pass && e.is_zero();
    return r;
}

} // namespace lpg::flat
