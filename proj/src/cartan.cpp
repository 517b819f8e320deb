#include "lpgeom/cartan.hpp"

#include "lpgeom/error.hpp"

namespace lpg::cartan {

namespace {

const Expression kHalf(Rational(1, 2));

std::string idx(std::size_t i) { return std::to_string(i + 1); }

void require_one_form(const DifferentialForm& f, const std::string& name) {
    if (!f.is_homogeneous(1))
        throw Error(ErrorKind::InvalidArgument, name + " must be a 1-form, got '" + f.to_string() + "'");
}

void require_symmetric(const FormMatrix& m, const std::string& name) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i + 1; j < m.cols(); ++j)
            if (!(m(i, j) == m(j, i)))
                throw Error(ErrorKind::SymmetryViolation, name + "[" + idx(i) + "][" + idx(j) + "] = " +
                                                              m(i, j).to_string() + " differs from " + name + "[" +
                                                              idx(j) + "][" + idx(i) + "] = " + m(j, i).to_string());
}

ChartPtr chart_of(const FormMatrix& m, ChartPtr c) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) c = common_chart(c, m(i, j).chart());
    return c;
}

DifferentialForm on(const ChartPtr& c, const DifferentialForm& f) { return f.is_zero() ? DifferentialForm(c) : f; }

} // namespace

ConnectionBlocks ConnectionBlocks::zero(unsigned n, const ChartPtr& chart) {
    const DifferentialForm z(chart);
    return ConnectionBlocks{z, std::vector<DifferentialForm>(n, z), zero_forms(n, n, chart),
                            std::vector<DifferentialForm>(n, z), z, zero_forms(n, n, chart),
                            std::vector<DifferentialForm>(n, z), std::vector<DifferentialForm>(n, z),
                            zero_forms(n, n, chart), z};
}

ChartPtr ConnectionBlocks::chart() const {
    ChartPtr c = common_chart(theta0.chart(), rho.chart());
    c = common_chart(c, psi.chart());
    for (const auto* v : {&theta, &omega, &beta, &mu})
        for (const auto& f : *v) c = common_chart(c, f.chart());
    for (const auto* m : {&Theta, &alpha, &gamma}) c = chart_of(*m, c);
    return c;
}

void ConnectionBlocks::validate() const {
    const std::size_t n = theta.size();
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "connection blocks need n >= 1");
    if (omega.size() != n || beta.size() != n || mu.size() != n)
        throw Error(ErrorKind::InvalidArgument, "column blocks must all have length " + std::to_string(n));
    for (const auto* m : {&Theta, &alpha, &gamma})
        if (m->rows() != n || m->cols() != n)
            throw Error(ErrorKind::InvalidArgument, "matrix blocks must be " + std::to_string(n) + "x" + std::to_string(n));
    require_one_form(theta0, "theta0");
    require_one_form(rho, "rho");
    require_one_form(psi, "psi");
    for (std::size_t i = 0; i < n; ++i) {
        require_one_form(theta[i], "theta[" + idx(i) + "]");
        require_one_form(omega[i], "omega[" + idx(i) + "]");
        require_one_form(beta[i], "beta[" + idx(i) + "]");
        require_one_form(mu[i], "mu[" + idx(i) + "]");
        for (std::size_t j = 0; j < n; ++j) {
            require_one_form(Theta(i, j), "Theta[" + idx(i) + "][" + idx(j) + "]");
            require_one_form(alpha(i, j), "alpha[" + idx(i) + "][" + idx(j) + "]");
            require_one_form(gamma(i, j), "gamma[" + idx(i) + "][" + idx(j) + "]");
        }
    }
    require_symmetric(Theta, "Theta");
    require_symmetric(gamma, "gamma");
    chart();
}

ConnectionBlocks flat_blocks(const jets::ContactIdeal& ideal) {
    const ChartPtr& c = ideal.theta0.chart();
    ConnectionBlocks b = ConnectionBlocks::zero(static_cast<unsigned>(ideal.theta.size()), c);
    b.theta0 = ideal.theta0;
    b.theta = ideal.theta;
    b.Theta = ideal.Theta;
    b.omega = ideal.omega;
    return b;
}

SpForm::SpForm(FormMatrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || m_.rows() % 2 != 0 || m_.rows() < 4)
        throw Error(ErrorKind::InvalidArgument, "sp-valued form needs a square matrix of even size >= 4, got " +
                                                    std::to_string(m_.rows()) + "x" + std::to_string(m_.cols()));
}

SpForm SpForm::from_blocks(const FormMatrix& phi, const FormMatrix& pi, const FormMatrix& eta) {
    const std::size_t m = phi.rows();
    for (const auto* b : {&phi, &pi, &eta})
        if (b->rows() != m || b->cols() != m) throw Error(ErrorKind::InvalidArgument, "blocks must be square and equal size");
    require_symmetric(pi, "pi");
    require_symmetric(eta, "eta");
    FormMatrix full(2 * m, 2 * m);
    full.set_block(0, 0, phi);
    full.set_block(0, m, pi);
    full.set_block(m, 0, eta);
    full.set_block(m, m, -phi.transpose());
    return SpForm(std::move(full));
}

SpValuedOneForm assemble_phi(const ConnectionBlocks& b, Mode mode) {
    b.validate();
    const std::size_t n = b.n();
    const ChartPtr c = b.chart();
    FormMatrix eta = zero_forms(n + 1, n + 1, c), phi = zero_forms(n + 1, n + 1, c), pi = zero_forms(n + 1, n + 1, c);
    eta(0, 0) = on(c, b.theta0 * Expression(2));
    for (std::size_t i = 0; i < n; ++i) {
        eta(0, i + 1) = eta(i + 1, 0) = on(c, b.theta[i]);
        phi(i + 1, 0) = on(c, b.omega[i]);
        phi(0, i + 1) = on(c, b.beta[i] * -kHalf);
        for (std::size_t j = 0; j < n; ++j) {
            eta(i + 1, j + 1) = on(c, b.Theta(i, j));
            pi(i + 1, j + 1) = on(c, b.gamma(i, j));
        }
    }
    if (mode == Mode::Classical) {
        phi(0, 0) = on(c, b.rho * -kHalf);
        pi(0, 0) = on(c, b.psi * Expression(Rational(-1, 4)));
        for (std::size_t i = 0; i < n; ++i) {
            pi(0, i + 1) = pi(i + 1, 0) = on(c, b.mu[i] * kHalf);
            for (std::size_t j = 0; j < n; ++j) {
                DifferentialForm e = -b.alpha(j, i);
                if (i == j) e += b.rho * kHalf;
                phi(i + 1, j + 1) = on(c, e);
            }
        }
    } else {
        phi(0, 0) = on(c, -b.rho);
        pi(0, 0) = on(c, b.psi);
        for (std::size_t i = 0; i < n; ++i) {
            pi(0, i + 1) = pi(i + 1, 0) = on(c, b.mu[i] * -kHalf);
            for (std::size_t j = 0; j < n; ++j) phi(i + 1, j + 1) = on(c, b.alpha(i, j));
        }
    }
    return SpForm::from_blocks(phi, pi, eta);
}

FormMatrix sp_defect(const SpForm& form) {
    const ExprMatrix J = symplectic_j(form.n() + 1);
    return wedge(J, form.matrix()) + wedge(form.matrix().transpose(), J);
}

bool in_sp(const SpForm& form) { return is_zero(sp_defect(form)); }

CurvatureForm curvature(const SpValuedOneForm& phi) {
    return CurvatureForm(exterior_derivative(phi.matrix()) + wedge(phi.matrix(), phi.matrix()));
}

FormMatrix bianchi_defect(const SpValuedOneForm& phi, const CurvatureForm& omega) {
    const FormMatrix& P = phi.matrix();
    const FormMatrix& W = omega.matrix();
    return exterior_derivative(W) - (wedge(W, P) - wedge(P, W));
}

SpValuedOneForm maurer_cartan_form(const ExprMatrix& g, const ChartPtr& chart) {
    if (g.rows() != g.cols() || g.rows() % 2 != 0 || g.rows() < 4)
        throw Error(ErrorKind::InvalidArgument, "g must be square of even size >= 4");
    const ExprMatrix J = symplectic_j(g.rows() / 2, chart);
    const ExprMatrix gt = g.transpose();
    const ExprMatrix defect = gt * J * g - J;
    for (std::size_t r = 0; r < defect.rows(); ++r)
        for (std::size_t c = 0; c < defect.cols(); ++c)
            if (!defect(r, c).is_zero())
                throw Error(ErrorKind::Precondition, "g is not symplectic: (g^T J g - J)[" + idx(r) + "][" + idx(c) +
                                                         "] = " + defect(r, c).to_string());
    ExprMatrix lifted = g;
    for (std::size_t r = 0; r < g.rows(); ++r)
        for (std::size_t c = 0; c < g.cols(); ++c) lifted(r, c) = Expression::constant(chart, 0) + g(r, c);
    const ExprMatrix ginv = -(J * gt * J);
    return SpValuedOneForm(wedge(ginv, differential(lifted)));
}

bool IdentityReport::pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::vector<std::string> IdentityReport::failed() const {
    std::vector<std::string> out;
    for (const auto& c : checks)
        if (!c.pass) out.push_back(c.name);
    return out;
}

IdentityReport check_curvature_identities(const CurvatureForm& omega, const ConnectionBlocks& b) {
    b.validate();
    const std::size_t n = b.n();
    if (omega.n() != n)
        throw Error(ErrorKind::InvalidArgument, "curvature has n = " + std::to_string(omega.n()) + ", blocks have n = " +
                                                    std::to_string(n));
    std::vector<DifferentialForm> coframe{b.theta0};
    for (std::size_t i = 0; i < n; ++i) coframe.push_back(b.theta[i]);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) coframe.push_back(b.Theta(i, j));
    for (std::size_t i = 0; i < n; ++i) coframe.push_back(b.omega[i]);
    if (rank_of_one_forms(coframe) != coframe.size())
        throw Error(ErrorKind::Degenerate, "theta0, theta, Theta, omega are linearly dependent");

    const FormMatrix We = omega.eta(), Wf = omega.phi(), Wp = omega.pi();
    const ChartPtr c = common_chart(b.chart(), chart_of(omega.matrix(), nullptr));
    std::vector<DifferentialForm> Wbeta(n, DifferentialForm(c)), Wmu(n, DifferentialForm(c));
    FormMatrix Walpha = zero_forms(n, n, c), Wgamma = zero_forms(n, n, c), T = zero_forms(n, n, c);
    const DifferentialForm Wpsi = Wp(0, 0) * Expression(-4);
    for (std::size_t i = 0; i < n; ++i) {
        Wbeta[i] = Wf(0, i + 1) * Expression(-2);
        Wmu[i] = Wp(i + 1, 0) * Expression(2);
        for (std::size_t j = 0; j < n; ++j) {
            Walpha(i, j) = -Wf(j + 1, i + 1);
            Wgamma(i, j) = Wp(i + 1, j + 1);
            T(i, j) = We(i + 1, j + 1);
        }
    }

    IdentityReport report;
    auto add = [&](std::string name, std::vector<std::pair<std::string, DifferentialForm>> entries) {
        IdentityCheck check{std::move(name), true, {}};
        for (auto& [label, f] : entries)
            if (!f.is_zero()) check.residuals.emplace_back(std::move(label), std::move(f));
        check.pass = check.residuals.empty();
        report.checks.push_back(std::move(check));
    };

    std::vector<std::pair<std::string, DifferentialForm>> shape_eta, shape_phi;
    for (std::size_t a = 0; a <= n; ++a) {
        shape_eta.emplace_back("Omega_eta[1][" + idx(a) + "]", We(0, a));
        if (a > 0) shape_eta.emplace_back("Omega_eta[" + idx(a) + "][1]", We(a, 0));
        shape_phi.emplace_back("Omega_phi[" + idx(a) + "][1]", Wf(a, 0));
    }
    add("shape.eta", std::move(shape_eta));
    add("shape.phi", std::move(shape_phi));

    std::vector<std::pair<std::string, DifferentialForm>> id_theta, id_omega;
    DifferentialForm id_rho = wedge(Wpsi, b.theta0);
    for (std::size_t i = 0; i < n; ++i) {
        DifferentialForm t = wedge(Wbeta[i], b.theta0), o = wedge(Wmu[i], b.theta0);
        for (std::size_t k = 0; k < n; ++k) {
            t += wedge(Walpha(i, k), b.theta[k]) + wedge(T(i, k), b.omega[k]);
            o += wedge(Wgamma(i, k), b.theta[k]) - wedge(Walpha(k, i), b.omega[k]);
        }
        id_theta.emplace_back("row " + idx(i), std::move(t));
        id_omega.emplace_back("row " + idx(i), std::move(o));
        id_rho += wedge(Wbeta[i], b.omega[i]) - wedge(Wmu[i], b.theta[i]);
    }
    add("identity.theta", std::move(id_theta));
    add("identity.omega", std::move(id_omega));
    add("identity.rho", {{"scalar", std::move(id_rho)}});

    std::vector<DifferentialForm> ideal{b.theta0};
    ideal.insert(ideal.end(), b.theta.begin(), b.theta.end());
    ideal.insert(ideal.end(), b.omega.begin(), b.omega.end());
    std::vector<std::pair<std::string, DifferentialForm>> mod;
    const FormMatrix& W = omega.matrix();
    for (std::size_t r = 0; r < W.rows(); ++r)
        for (std::size_t s = 0; s < W.cols(); ++s)
            if (!W(r, s).is_zero())
                mod.emplace_back("Omega[" + idx(r) + "][" + idx(s) + "]", reduce_modulo(W(r, s), ideal));
    add("identity.mod_ideal", std::move(mod));
    return report;
}

namespace {

ExprMatrix random_symmetric(Rng& rng, const ChartPtr& chart, std::size_t m, unsigned max_degree) {
    ExprMatrix S(m, m, Expression(0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j)
            if (rng.coin()) S(i, j) = S(j, i) = random_polynomial(rng, chart, chart->dimension(), max_degree, 2, 3);
    return S;
}

} // namespace

ExprMatrix random_symplectic(Rng& rng, const ChartPtr& chart, unsigned n, unsigned factors, unsigned max_degree) {
    const std::size_t m = n + 1;
    ExprMatrix g = identity_matrix(2 * m);
    for (unsigned f = 0; f < factors; ++f) {
        ExprMatrix h = identity_matrix(2 * m);
        switch (rng.below(3)) {
        case 0: h.set_block(m, 0, random_symmetric(rng, chart, m, max_degree)); break;
        case 1: h.set_block(0, m, random_symmetric(rng, chart, m, max_degree)); break;
        default: {
            ExprMatrix A = identity_matrix(m);
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = i + 1; j < m; ++j)
                    if (rng.coin()) A(i, j) = random_polynomial(rng, chart, chart->dimension(), max_degree, 2, 3);
            h.set_block(0, 0, A);
            h.set_block(m, m, inverse(A).transpose());
        }
        }
        g = g * h;
    }
    return g;
}

SpValuedOneForm random_sp_form(Rng& rng, const ChartPtr& chart, unsigned n, unsigned coeff_degree, unsigned max_terms) {
    const std::size_t m = n + 1;
    auto entry = [&] { return rng.below(3) == 0 ? DifferentialForm(chart) : random_form(rng, chart, 1, coeff_degree, max_terms); };
    FormMatrix phi = zero_forms(m, m, chart), pi = zero_forms(m, m, chart), eta = zero_forms(m, m, chart);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            phi(i, j) = entry();
            if (j >= i) {
                pi(i, j) = pi(j, i) = entry();
                eta(i, j) = eta(j, i) = entry();
            }
        }
    return SpForm::from_blocks(phi, pi, eta);
}

} // namespace lpg::cartan
