#include "lpgeom/contact_jets.hpp"

#include "lpgeom/error.hpp"

#include <algorithm>

namespace lpg::jets {

namespace {

void require_index(unsigned i, unsigned n) {
    if (i < 1 || i > n) throw Error(ErrorKind::InvalidArgument, "index " + std::to_string(i) + " outside 1.." + std::to_string(n));
}

std::string index_join(unsigned n, std::initializer_list<unsigned> idx) {
    std::string s;
    bool first = true;
    for (unsigned i : idx) {
        if (!first && n >= 10) s += '_';
        s += std::to_string(i);
        first = false;
    }
    return s;
}

} // namespace

std::string JetChart::p_name(unsigned n, unsigned i, unsigned j) {
    if (i > j) std::swap(i, j);
    return "p" + index_join(n, {i, j});
}

JetChart::JetChart(unsigned n, std::vector<std::string> parameters) : n_(n) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "jet chart needs n >= 1");
    std::vector<std::string> vars;
    for (unsigned i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
    vars.push_back("u");
    for (unsigned i = 1; i <= n; ++i) vars.push_back("p" + std::to_string(i));
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = i; j <= n; ++j) vars.push_back(p_name(n, i, j));
    chart_ = make_chart("jet" + std::to_string(n), std::move(vars), std::move(parameters));
}

std::size_t JetChart::x(unsigned i) const {
    require_index(i, n_);
    return i - 1;
}

std::size_t JetChart::p(unsigned i) const {
    require_index(i, n_);
    return n_ + i;
}

std::size_t JetChart::p(unsigned i, unsigned j) const {
    require_index(i, n_);
    require_index(j, n_);
    if (i > j) std::swap(i, j);
    // Rows 1..i-1 of the upper triangle hold sum_{r<i} (n - r + 1) slots.
    std::size_t offset = 0;
    for (unsigned r = 1; r < i; ++r) offset += n_ - r + 1;
    return 2 * n_ + 1 + offset + (j - i);
}

ChartPtr JetChart::base_chart() const {
    std::vector<std::string> vars;
    for (unsigned i = 1; i <= n_; ++i) vars.push_back("x" + std::to_string(i));
    std::vector<std::string> params(chart_->parameters().begin(), chart_->parameters().end());
    return make_chart("base" + std::to_string(n_), std::move(vars), std::move(params));
}

PathSystem::PathSystem(JetChart jet) : jet_(std::move(jet)) {
    const unsigned n = jet_.n();
    F_.assign(n * n * n, Expression::constant(jet_.chart(), 0));
}

std::size_t PathSystem::slot(unsigned i, unsigned j, unsigned k) const {
    const unsigned n = jet_.n();
    require_index(i, n);
    require_index(j, n);
    require_index(k, n);
    return ((i - 1) * n + (j - 1)) * n + (k - 1);
}

const Expression& PathSystem::F(unsigned i, unsigned j, unsigned k) const {
    return F_[slot(i, j, k)];
}

void PathSystem::set_F(unsigned i, unsigned j, unsigned k, const Expression& value) {
    const Expression v = Expression::constant(jet_.chart(), 0) + value;
    F_[slot(i, j, k)] = v;
    F_[slot(j, i, k)] = v;
}

std::string PathSystem::F_name(unsigned n, unsigned i, unsigned j, unsigned k) {
    unsigned a[3] = {i, j, k};
    std::sort(a, a + 3);
    return "F" + index_join(n, {a[0], a[1], a[2]});
}

PathSystem PathSystem::generic(unsigned n) {
    std::vector<std::string> params;
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = i; j <= n; ++j)
            for (unsigned k = j; k <= n; ++k) params.push_back(F_name(n, i, j, k));
    PathSystem sys{JetChart(n, params)};
    const ChartPtr& c = sys.jet().chart();
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = 1; j <= n; ++j)
            for (unsigned k = 1; k <= n; ++k) sys.set_F(i, j, k, Expression::symbol(c, F_name(n, i, j, k)));
    return sys;
}

std::vector<DifferentialForm> ContactIdeal::generators() const {
    std::vector<DifferentialForm> g{theta0};
    g.insert(g.end(), theta.begin(), theta.end());
    for (std::size_t i = 0; i < Theta.rows(); ++i)
        for (std::size_t j = i; j < Theta.cols(); ++j) g.push_back(Theta(i, j));
    return g;
}

std::vector<std::string> ContactIdeal::generator_names() const {
    const unsigned n = static_cast<unsigned>(theta.size());
    std::vector<std::string> names{"theta0"};
    for (unsigned i = 1; i <= n; ++i) names.push_back("theta" + std::to_string(i));
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = i; j <= n; ++j) names.push_back("Theta" + index_join(n, {i, j}));
    return names;
}

ContactIdeal contact_ideal(const PathSystem& system) {
    const JetChart& jet = system.jet();
    const ChartPtr& c = jet.chart();
    const unsigned n = jet.n();
    ContactIdeal ideal;
    ideal.theta0 = DifferentialForm::differential(c, jet.u());
    for (unsigned k = 1; k <= n; ++k) {
        ideal.omega.push_back(jet.dx(k));
        ideal.theta0 -= jet.p_expr(k) * jet.dx(k);
    }
    for (unsigned i = 1; i <= n; ++i) {
        DifferentialForm t = DifferentialForm::differential(c, jet.p(i));
        for (unsigned k = 1; k <= n; ++k) t -= jet.p_expr(i, k) * jet.dx(k);
        ideal.theta.push_back(std::move(t));
    }
    ideal.Theta = zero_forms(n, n, c);
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = i; j <= n; ++j) {
            DifferentialForm t = DifferentialForm::differential(c, jet.p(i, j));
            for (unsigned k = 1; k <= n; ++k) t -= system.F(i, j, k) * jet.dx(k);
            ideal.Theta(i - 1, j - 1) = t;
            ideal.Theta(j - 1, i - 1) = t;
        }
    return ideal;
}

DifferentialForm contact_volume(const JetChart& jet) {
    const ChartPtr& c = jet.chart();
    DifferentialForm theta0 = DifferentialForm::differential(c, jet.u());
    for (unsigned k = 1; k <= jet.n(); ++k) theta0 -= jet.p_expr(k) * jet.dx(k);
    return wedge(theta0, wedge_power(exterior_derivative(theta0), jet.n()));
}

FrobeniusResult frobenius_check(const PathSystem& system, const ContactIdeal& ideal) {
    const JetChart& jet = system.jet();
    const ChartPtr& c = jet.chart();
    const unsigned n = jet.n();
    std::vector<std::optional<DifferentialForm>> images(c->dimension());
    DifferentialForm du(c);
    for (unsigned k = 1; k <= n; ++k) du += jet.p_expr(k) * jet.dx(k);
    images[jet.u()] = du;
    for (unsigned i = 1; i <= n; ++i) {
        DifferentialForm dp(c);
        for (unsigned k = 1; k <= n; ++k) dp += jet.p_expr(i, k) * jet.dx(k);
        images[jet.p(i)] = dp;
        for (unsigned j = i; j <= n; ++j) {
            DifferentialForm dpij(c);
            for (unsigned k = 1; k <= n; ++k) dpij += system.F(i, j, k) * jet.dx(k);
            images[jet.p(i, j)] = dpij;
        }
    }
    FrobeniusResult result;
    const auto gens = ideal.generators();
    const auto names = ideal.generator_names();
    for (std::size_t g = 0; g < gens.size(); ++g) {
        DifferentialForm r = replace_differentials(exterior_derivative(gens[g]), images);
        if (result.pass && !r.is_zero()) {
            result.pass = false;
            result.generator = names[g];
            result.residue = r;
        }
        result.residues.push_back(std::move(r));
    }
    return result;
}

bool CongruenceResult::pass() const {
    if (!theta0_residue.is_zero()) return false;
    for (const auto& r : theta_residues)
        if (!r.is_zero()) return false;
    return true;
}

CongruenceResult structure_congruences(const ContactIdeal& ideal) {
    const std::size_t n = ideal.theta.size();
    CongruenceResult out;
    DifferentialForm e0 = exterior_derivative(ideal.theta0);
    for (std::size_t k = 0; k < n; ++k) e0 += wedge(ideal.theta[k], ideal.omega[k]);
    out.theta0_residue = reduce_modulo(e0, std::span<const DifferentialForm>(&ideal.theta0, 1));
    std::vector<DifferentialForm> mod{ideal.theta0};
    mod.insert(mod.end(), ideal.theta.begin(), ideal.theta.end());
    for (std::size_t i = 0; i < n; ++i) {
        DifferentialForm e = exterior_derivative(ideal.theta[i]);
        for (std::size_t k = 0; k < n; ++k) e += wedge(ideal.Theta(i, k), ideal.omega[k]);
        out.theta_residues.push_back(reduce_modulo(e, mod));
    }
    return out;
}

Substitution lift_hypersurface(const Expression& f, const PathSystem& system) {
    const JetChart& jet = system.jet();
    const unsigned n = jet.n();
    ChartPtr source = f.chart() ? f.chart() : jet.base_chart();
    if (!f.is_polynomial()) throw Error(ErrorKind::InvalidArgument, "lift needs a polynomial hypersurface");
    std::vector<std::string> xs;
    for (unsigned i = 1; i <= n; ++i) {
        xs.push_back("x" + std::to_string(i));
        if (!source->index_of(xs.back()))
            throw Error(ErrorKind::InvalidArgument, "hypersurface chart lacks variable " + xs.back());
    }
    for (std::size_t s = 0; s < source->symbol_count(); ++s) {
        const auto& name = source->symbol(s);
        const bool is_x = std::find(xs.begin(), xs.end(), name) != xs.end();
        if (!is_x && source->is_variable(s) && f.numerator().involves(s))
            throw Error(ErrorKind::InvalidArgument, "hypersurface depends on '" + name + "', which is not a base coordinate");
    }
    const Expression g = Expression::constant(source, 0) + f;
    Substitution sub{source, {}};
    for (unsigned i = 1; i <= n; ++i) sub.images.emplace(xs[i - 1], Expression::symbol(source, xs[i - 1]));
    sub.images.emplace("u", g);
    for (unsigned i = 1; i <= n; ++i) {
        const Expression gi = g.derivative(xs[i - 1]);
        sub.images.emplace("p" + std::to_string(i), gi);
        for (unsigned j = i; j <= n; ++j) sub.images.emplace(JetChart::p_name(n, i, j), gi.derivative(xs[j - 1]));
    }
    return sub;
}

} // namespace lpg::jets
